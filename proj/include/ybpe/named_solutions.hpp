// Builders for the named solution families.  Each validates its structural
// requirements and returns the raw map; equation verdicts are the caller's
// business.

#ifndef YBPE_NAMED_SOLUTIONS_HPP_
#define YBPE_NAMED_SOLUTIONS_HPP_

#include <string>
#include <vector>

#include "ybpe/equations.hpp"
#include "ybpe/product_form.hpp"
#include "ybpe/semigroup.hpp"

namespace ybpe {

// s(x,y) = (xy, gamma(y)) with gamma an idempotent endomorphism.
PairMap gamma_solution(const Semigroup& sg, const SelfMap& gamma);

// s(x,y) = (xy, e) with e an idempotent element.
PairMap constant_solution(const Semigroup& sg, int e);

// s(x,y) = (f(x), g(y)) with f, g idempotent and commuting.
PairMap militaru_solution(int order, const SelfMap& f, const SelfMap& g);

// s(a,b) = (b, phi(b)) on the right-zero carrier, phi idempotent.
PairMap right_zero_solution(int order, const SelfMap& phi);

// Inflation of the solution (T, thetaT) via phi : X -> T:
// s(a,b) = (ab, theta_{phi_bar(a)}(phi_bar(b))) on the inflated carrier.
PairMap inflate_solution(const Semigroup& T, const ThetaFamily& thetaT,
                         const std::vector<int>& phi);

// Dispatcher used by the CLI; kind is one of "gamma", "constant",
// "militaru", "right-zero", "inflation".
struct NamedSolutionSpec {
  std::string kind;
  std::optional<Semigroup> semigroup;  // gamma, constant, inflation (base T)
  std::vector<int> map_a;              // gamma / f / phi
  std::vector<int> map_b;              // g
  std::optional<ThetaFamily> theta;    // inflation: theta on T
  int element = -1;                    // constant: e
  int order = 0;                       // militaru / right-zero carrier size
};

PairMap build_named_solution(const NamedSolutionSpec& spec);

}  // namespace ybpe

#endif  // YBPE_NAMED_SOLUTIONS_HPP_
