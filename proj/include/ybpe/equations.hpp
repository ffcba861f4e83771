// Maps on S x S stored as two output tables, and the brute-force oracles
// for the pentagon, reversed pentagon, quantum Yang-Baxter and braid
// equations evaluated over all triples.

#ifndef YBPE_EQUATIONS_HPP_
#define YBPE_EQUATIONS_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybpe/errors.hpp"
#include "ybpe/verdict.hpp"

namespace ybpe {

// s(x,y) = (first[x][y], second[x][y]).  For the braid form
// r(x,y) = (lambda_x(y), rho_y(x)) the components are the accessors
// lambda(x,y) = first[x][y] and rho(y,x) = second[x][y].
class PairMap {
 public:
  static PairMap from_tables(int order, std::vector<int> first, std::vector<int> second);
  static PairMap identity(int n);  // (x,y) -> (x,y)
  static PairMap flip(int n);      // (x,y) -> (y,x)

  int order() const { return order_; }
  int first(int x, int y) const { return first_[x * order_ + y]; }
  int second(int x, int y) const { return second_[x * order_ + y]; }
  std::pair<int, int> apply(int x, int y) const {
    return {first(x, y), second(x, y)};
  }
  int lambda(int x, int y) const { return first(x, y); }
  int rho(int y, int x) const { return second(x, y); }

  const std::vector<int>& first_table() const { return first_; }
  const std::vector<int>& second_table() const { return second_; }

  // Pointwise equality of both output tables.
  bool operator==(const PairMap& o) const {
    return order_ == o.order_ && first_ == o.first_ && second_ == o.second_;
  }
  // Lexicographic on the concatenated (first, second) tables.
  bool operator<(const PairMap& o) const;

 private:
  PairMap(int order, std::vector<int> first, std::vector<int> second)
      : order_(order), first_(std::move(first)), second_(std::move(second)) {}
  int order_;
  std::vector<int> first_, second_;
};

enum class Equation { Pentagon, ReversedPentagon, Qybe, Braid };

const char* equation_name(Equation eq);
std::optional<Equation> equation_from_name(const std::string& name);

// Evaluates both sides of the equation on every triple (x,y,z) of the
// carrier, lexicographically; the verdict carries the first mismatch.
//
//   pentagon           s23 s13 s12 = s12 s23
//   reversed pentagon  t12 t13 t23 = t23 t12
//   qybe               s23 s13 s12 = s12 s13 s23
//   braid              r12 r23 r12 = r23 r12 r23
//
// with m12 = m x id, m23 = id x m, m13 = (id x tau) m12 (id x tau), and
// composition applying the rightmost factor first.
Verdict verify_equation(const PairMap& map, Equation eq);

enum class Transform { ConjugateFlip, ComposeFlipLeft };

PairMap transform(const PairMap& map, Transform kind);
PairMap conjugate_flip(const PairMap& map);   // tau s tau
PairMap compose_flip_left(const PairMap& map);  // tau s

PairMap compose(const PairMap& f, const PairMap& g);  // f after g
PairMap power(const PairMap& map, int exponent);      // exponent >= 1

// One leg of a map acting on a triple: leg is 12, 13 or 23.
std::array<int, 3> apply_leg(const PairMap& m, int leg, std::array<int, 3> t);

}  // namespace ybpe

#endif  // YBPE_EQUATIONS_HPP_
