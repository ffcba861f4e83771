// Exception types shared across the library.  Structural failures
// (bad tables, out-of-range entries, violated builder requirements)
// throw; checks whose outcome is the interesting result return a
// Verdict instead.

#ifndef YBPE_ERRORS_HPP_
#define YBPE_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace ybpe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// First associativity violation, reported in lexicographic order of (x,y,z).
class NotAssociativeError : public Error {
 public:
  int x, y, z;
  NotAssociativeError(int x_, int y_, int z_)
      : Error("table is not associative at (" + std::to_string(x_) + "," +
              std::to_string(y_) + "," + std::to_string(z_) + ")"),
        x(x_), y(y_), z(z_) {}
};

class OutOfRangeError : public Error {
 public:
  int row, col;
  OutOfRangeError(int row_, int col_, const std::string& what_)
      : Error(what_), row(row_), col(col_) {}
};

class BadParamsError : public Error {
 public:
  using Error::Error;
};

// A named precondition of an operation does not hold; `tag` identifies the
// failed layer (e.g. "pe", "pqybe", "variety-s", "group", "S1", "p4").
class PreconditionError : public Error {
 public:
  std::string tag;
  std::vector<int> witness;
  PreconditionError(std::string tag_, std::vector<int> witness_ = {})
      : Error("precondition failed: " + tag_), tag(std::move(tag_)),
        witness(std::move(witness_)) {}
};

class SpecTooLargeError : public Error {
 public:
  using Error::Error;
};

class UnknownFixtureError : public Error {
 public:
  using Error::Error;
};

}  // namespace ybpe

#endif  // YBPE_ERRORS_HPP_
