// Yang-Baxter solutions on S x T built from two pentagon solutions: the
// full quadruple with both actions, and the simplified alpha-only system
// whose second factor is a reversed QYBE solution.

#ifndef YBPE_PENTAGON_QUADRUPLE_HPP_
#define YBPE_PENTAGON_QUADRUPLE_HPP_

#include "ybpe/matched.hpp"

namespace ybpe {

// t(u,v) = (theta_v(u), vu) as a PairMap on T.
PairMap assemble_reversed_form(const Semigroup& T, const ThetaFamily& theta_T);

// Pentagon quadruple conditions (p1)-(p5) and (r1)-(r5), with the
// abbreviations
//   a_u b_v            = alpha_u(a) alpha_{theta_v beta_a(u)}(b)
//   theta_{ab_u}(c_v)  = theta_{a alpha_u(b)} alpha_{theta_v beta_b(u)}(c)
//   u_a v_b            = beta_a(u) beta_{theta_b alpha_u(a)}(v)
//   theta_{uv_a}(w_b)  = theta_{u beta_a(v)} beta_{theta_b alpha_v(a)}(w)
// quantified over exactly the variables each display mentions.
// Preconditions: beta present, theta_S passes the pentagon conditions on S
// and (T, theta_T) assembled as the reversed form passes the reversed
// pentagon; both throw PreconditionError.
Verdict check_pentagon_quadruple(const SolutionQuadruple& quad);

// r(a,u;b,v) = (theta_a alpha_u(b), v beta_b(u) ; a alpha_u(b),
// theta_v beta_b(u)) on the linearized carrier; re-verified against the
// braid oracle.
PairMap build_ybe_from_pentagon_quadruple(const SolutionQuadruple& quad);

// The easier system with no beta: t must in addition satisfy the QYBE
// conditions (an R-QYBE solution).  Conditions (p1)-(p5) specialize to
//   (p1) a b_u c_v = a theta_b alpha_v(c) b_u c_v,  b_u c_v = alpha_u(b) alpha_{theta_v(u)}(c)
//   (p2) theta_a theta_b alpha_u = theta_{alpha_v(b)} alpha_{theta_u(v)}
//   (p3) theta_a(bc) = theta_{a theta_b alpha_u(c)}(bc)
//   (p4) a_u b_v = alpha_{theta_{wv}(u)}(a alpha_v(b))
//   (p5) theta_a = alpha_u theta_a
Verdict check_alpha_system(const SolutionQuadruple& quad);

// r(a,u;b,v) = (theta_a alpha_u(b), vu ; a alpha_u(b), theta_v(u)),
// re-verified against the braid oracle.
PairMap build_ybe_from_alpha_system(const SolutionQuadruple& quad);

}  // namespace ybpe

#endif  // YBPE_PENTAGON_QUADRUPLE_HPP_
