// Matched products: two semigroups acting on each other via alpha and
// beta, the product semigroup on S x T, and matched products of pentagon
// solutions, with the Zappa, embedding and monoid specializations.

#ifndef YBPE_MATCHED_HPP_
#define YBPE_MATCHED_HPP_

#include <optional>
#include <vector>

#include "ybpe/equations.hpp"
#include "ybpe/product_form.hpp"
#include "ybpe/semigroup.hpp"

namespace ybpe {

// Action tables: alpha[u][a] = alpha_u(a) in S, beta[a][u] = beta_a(u) in T.
// beta is absent for the alpha-only systems of the YBE construction.
struct MatchedSystem {
  Semigroup S, T;
  std::vector<std::vector<int>> alpha;                 // |T| x |S|
  std::optional<std::vector<std::vector<int>>> beta;   // |S| x |T|

  int alpha_at(int u, int a) const { return alpha[u][a]; }
  int beta_at(int a, int u) const { return (*beta)[a][u]; }
};

// Validates table shapes and entry ranges; throws OutOfRangeError.
void validate_matched_system(const MatchedSystem& sys);

// Linearization of the product carrier: (a,u) -> a*|T| + u.
inline int pair_index(int a, int u, int t_order) { return a * t_order + u; }
inline std::pair<int, int> pair_unindex(int idx, int t_order) {
  return {idx / t_order, idx % t_order};
}

// Conditions for S x T with (a,u)(b,v) = (a alpha_u(b), beta_b(u) v) to be
// a semigroup:
//   (S1)  alpha_u(a alpha_v(b)) = alpha_u(a) alpha_{beta_a(u)v}(b)
//   (S2)  beta_a(beta_b(u) v)   = beta_{b alpha_v(a)}(u) beta_a(v)
Verdict check_matched_semigroup(const MatchedSystem& sys);

// The matched product S |x| T on the linearized carrier; associativity is
// re-validated.  Throws PreconditionError naming S1/S2 on failure.
Semigroup build_matched_semigroup(const MatchedSystem& sys);

// The stronger classical conditions:
//   (S1'a) alpha_u(ab) = alpha_u(a) alpha_{beta_a(u)}(b)   (S1'b) alpha_{uv} = alpha_u alpha_v
//   (S2'a) beta_a(uv) = beta_{alpha_v(a)}(u) beta_a(v)     (S2'b) beta_{ab} = beta_b beta_a
// These imply (S1)/(S2).
Verdict check_zappa(const MatchedSystem& sys);

// A matched system together with pentagon solutions on both factors.
// For the matched product both thetas are the product form
// s(a,b) = (ab, theta_a(b)), t(u,v) = (uv, theta_u(v)); the YBE
// construction instead reads theta_T through the reversed form
// t(u,v) = (theta_v(u), vu).
struct SolutionQuadruple {
  MatchedSystem system;
  ThetaFamily theta_S, theta_T;
};

struct QuadrupleReport {
  Verdict verdict;           // (M1)-(M3)
  bool m2prime_applicable = false;  // S has a right identity and (S5),(S6) hold
  bool m2prime_holds = false;
  bool m2prime_matches_m2 = false;  // shortcut agrees with (M2)
};

// Conditions for (s,t,alpha,beta) to give a pentagon solution on S |x| T:
//   (M1)  theta_a alpha_u = theta_{alpha_v(a)} alpha_{beta_a(v)u}
//   (M2)  theta_{a alpha_u(b)} = alpha_{theta_{beta_b(u)}(v)} theta_{a alpha_u(b)}
//   (M3)  beta_{theta_{a alpha_u(b)}(alpha_{beta_b(u)v}(c))}(theta_{beta_b(u)}(v))
//           = theta_{beta_{b alpha_v(c)}(u)}(beta_c(v))
// Each display is quantified over exactly the variables it mentions.
// Preconditions (S1/S2 and both pentagon layers) throw PreconditionError.
QuadrupleReport check_matched_quadruple(const SolutionQuadruple& quad);

// Non-throwing combined verdict over all layers (S1, S2, pe-S, pe-T,
// M1..M3), used by searches and equivalence tests.
Verdict full_quadruple_verdict(const SolutionQuadruple& quad);

// s |x| t (a,u;b,v) = (a alpha_u(b), beta_b(u)v ; theta_a(alpha_u(b)),
// theta_{beta_b(u)}(v)) on the linearized carrier; re-verified against the
// pentagon oracle.
PairMap build_matched_solution(const SolutionQuadruple& quad);

struct EmbeddingReport {
  Verdict verdict;   // (S3)-(S6) for the chosen identities
  int e_s = -1, e_t = -1;
  bool s_copy_isomorphic = false;  // {(a, e_t)} with the product table of S
  bool t_copy_isomorphic = false;  // {(e_s, u)} with the product table of T
};

// (S3) alpha_{e_t} = id, (S4) beta_a(e_t) = e_t, (S5) beta_{e_s} = id,
// (S6) alpha_u(e_s) = e_s.  e_s must be a right identity of S and e_t a
// left identity of T; pass -1 to pick the least such element.  Throws
// PreconditionError{"one-sided-identity"} when none exists.
EmbeddingReport check_embeddings(const MatchedSystem& sys, int e_s = -1, int e_t = -1);

// Simplified conditions when S and T are monoids satisfying (S3)-(S6):
//   1. theta_a = alpha_{theta_u(v)} theta_a = theta_{alpha_v(a)} alpha_{beta_a(v)}
//   2. beta_{theta_a(alpha_{uv}(b))}(theta_u(v)) = theta_{beta_{alpha_v(b)}(u)}(beta_b(v))
// Equivalent to (M1)-(M3) under those hypotheses.  Throws
// PreconditionError{"monoids"} if either factor is not a monoid; failures
// of (S3)-(S6) are reported in the verdict.
Verdict check_monoid_quadruple(const SolutionQuadruple& quad);

}  // namespace ybpe

#endif  // YBPE_MATCHED_HPP_
