// Executable registry of the worked examples: each fixture builds its
// objects and runs a list of expectations with known verdicts.  The whole
// registry doubles as the regression suite.

#ifndef YBPE_CORPUS_HPP_
#define YBPE_CORPUS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "ybpe/errors.hpp"

namespace ybpe {

struct Expectation {
  std::string description;
  std::function<bool()> run;  // true = expectation met
};

struct Fixture {
  std::string id;
  std::string note;  // what the fixture exercises
  std::vector<Expectation> expectations;
};

const std::vector<std::string>& corpus_ids();
Fixture fixture(const std::string& id);  // throws UnknownFixtureError

struct ExpectationOutcome {
  std::string fixture_id;
  std::string description;
  bool pass = false;
};

std::vector<ExpectationOutcome> run_fixture(const std::string& id);
std::vector<ExpectationOutcome> run_all_fixtures();

}  // namespace ybpe

#endif  // YBPE_CORPUS_HPP_
