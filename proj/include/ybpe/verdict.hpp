// Verification outcome carrying the first counterexample found.

#ifndef YBPE_VERDICT_HPP_
#define YBPE_VERDICT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace ybpe {

// Outcome of a brute-force check.  `holds` iff `counterexample` is empty;
// counterexamples are the lexicographically first failing tuple so that
// results are deterministic.  `condition_tag` names the condition that
// failed ("pentagon", "Y2", "M3", "p4", ...); empty while the check holds.
struct Verdict {
  bool holds = true;
  std::string condition_tag;
  std::vector<int> counterexample;

  static Verdict ok() { return Verdict{}; }
  static Verdict fail(std::string tag, std::vector<int> witness) {
    Verdict v;
    v.holds = false;
    v.condition_tag = std::move(tag);
    v.counterexample = std::move(witness);
    return v;
  }

  explicit operator bool() const { return holds; }
};

}  // namespace ybpe

#endif  // YBPE_VERDICT_HPP_
