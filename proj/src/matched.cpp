#include "ybpe/matched.hpp"

#include <algorithm>

namespace ybpe {

void validate_matched_system(const MatchedSystem& sys) {
  const int ns = sys.S.order(), nt = sys.T.order();
  if (static_cast<int>(sys.alpha.size()) != nt)
    throw BadParamsError("alpha must have one row per element of T");
  for (int u = 0; u < nt; ++u) {
    if (static_cast<int>(sys.alpha[u].size()) != ns)
      throw BadParamsError("alpha rows must have |S| entries");
    for (int a = 0; a < ns; ++a)
      if (sys.alpha[u][a] < 0 || sys.alpha[u][a] >= ns)
        throw OutOfRangeError(u, a, "alpha entry out of range");
  }
  if (!sys.beta) return;
  if (static_cast<int>(sys.beta->size()) != ns)
    throw BadParamsError("beta must have one row per element of S");
  for (int a = 0; a < ns; ++a) {
    if (static_cast<int>((*sys.beta)[a].size()) != nt)
      throw BadParamsError("beta rows must have |T| entries");
    for (int u = 0; u < nt; ++u)
      if ((*sys.beta)[a][u] < 0 || (*sys.beta)[a][u] >= nt)
        throw OutOfRangeError(a, u, "beta entry out of range");
  }
}

namespace {

void require_beta(const MatchedSystem& sys) {
  if (!sys.beta) throw PreconditionError("beta-missing");
}

}  // namespace

Verdict check_matched_semigroup(const MatchedSystem& sys) {
  validate_matched_system(sys);
  require_beta(sys);
  const int ns = sys.S.order(), nt = sys.T.order();
  auto al = [&](int u, int a) { return sys.alpha_at(u, a); };
  auto be = [&](int a, int u) { return sys.beta_at(a, u); };
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u)
        for (int v = 0; v < nt; ++v)
          if (al(u, sys.S.product(a, al(v, b))) !=
              sys.S.product(al(u, a), al(sys.T.product(be(a, u), v), b)))
            return Verdict::fail("S1", {a, b, u, v});
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u)
        for (int v = 0; v < nt; ++v)
          if (be(a, sys.T.product(be(b, u), v)) !=
              sys.T.product(be(sys.S.product(b, al(v, a)), u), be(a, v)))
            return Verdict::fail("S2", {a, b, u, v});
  return Verdict::ok();
}

Semigroup build_matched_semigroup(const MatchedSystem& sys) {
  const Verdict ok = check_matched_semigroup(sys);
  if (!ok) throw PreconditionError(ok.condition_tag, ok.counterexample);
  const int ns = sys.S.order(), nt = sys.T.order();
  const int n = ns * nt;
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int b = 0; b < ns; ++b)
        for (int v = 0; v < nt; ++v) {
          const int prod_s = sys.S.product(a, sys.alpha_at(u, b));
          const int prod_t = sys.T.product(sys.beta_at(b, u), v);
          flat[pair_index(a, u, nt) * n + pair_index(b, v, nt)] =
              pair_index(prod_s, prod_t, nt);
        }
  return Semigroup::from_flat(n, std::move(flat));
}

Verdict check_zappa(const MatchedSystem& sys) {
  validate_matched_system(sys);
  require_beta(sys);
  const int ns = sys.S.order(), nt = sys.T.order();
  auto al = [&](int u, int a) { return sys.alpha_at(u, a); };
  auto be = [&](int a, int u) { return sys.beta_at(a, u); };
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u)
        if (al(u, sys.S.product(a, b)) != sys.S.product(al(u, a), al(be(a, u), b)))
          return Verdict::fail("S1'a", {a, b, u});
  for (int u = 0; u < nt; ++u)
    for (int v = 0; v < nt; ++v)
      for (int x = 0; x < ns; ++x)
        if (al(sys.T.product(u, v), x) != al(u, al(v, x)))
          return Verdict::fail("S1'b", {u, v, x});
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int v = 0; v < nt; ++v)
        if (be(a, sys.T.product(u, v)) != sys.T.product(be(al(v, a), u), be(a, v)))
          return Verdict::fail("S2'a", {a, u, v});
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int y = 0; y < nt; ++y)
        if (be(sys.S.product(a, b), y) != be(b, be(a, y)))
          return Verdict::fail("S2'b", {a, b, y});
  return Verdict::ok();
}

namespace {

Verdict check_m_conditions(const SolutionQuadruple& quad) {
  const MatchedSystem& sys = quad.system;
  const int ns = sys.S.order(), nt = sys.T.order();
  auto al = [&](int u, int a) { return sys.alpha_at(u, a); };
  auto be = [&](int a, int u) { return sys.beta_at(a, u); };
  auto thS = [&](int a, int x) { return quad.theta_S.theta(a, x); };
  auto thT = [&](int u, int y) { return quad.theta_T.theta(u, y); };
  // (M1) theta_a alpha_u = theta_{alpha_v(a)} alpha_{beta_a(v)u}
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int v = 0; v < nt; ++v)
        for (int x = 0; x < ns; ++x)
          if (thS(a, al(u, x)) !=
              thS(al(v, a), al(sys.T.product(be(a, v), u), x)))
            return Verdict::fail("M1", {a, u, v, x});
  // (M2) theta_{a alpha_u(b)} = alpha_{theta_{beta_b(u)}(v)} theta_{a alpha_u(b)}
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u)
        for (int v = 0; v < nt; ++v) {
          const int p = sys.S.product(a, al(u, b));
          const int w = thT(be(b, u), v);
          for (int x = 0; x < ns; ++x)
            if (thS(p, x) != al(w, thS(p, x)))
              return Verdict::fail("M2", {a, b, u, v, x});
        }
  // (M3) beta_{theta_{a alpha_u(b)}(alpha_{beta_b(u)v}(c))}(theta_{beta_b(u)}(v))
  //        = theta_{beta_{b alpha_v(c)}(u)}(beta_c(v))
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int c = 0; c < ns; ++c)
        for (int u = 0; u < nt; ++u)
          for (int v = 0; v < nt; ++v) {
            const int bu = be(b, u);
            const int lhs_sub =
                thS(sys.S.product(a, al(u, b)), al(sys.T.product(bu, v), c));
            const int lhs = be(lhs_sub, thT(bu, v));
            const int rhs = thT(be(sys.S.product(b, al(v, c)), u), be(c, v));
            if (lhs != rhs) return Verdict::fail("M3", {a, b, c, u, v});
          }
  return Verdict::ok();
}

bool m2prime_condition(const SolutionQuadruple& quad) {
  const MatchedSystem& sys = quad.system;
  const int ns = sys.S.order(), nt = sys.T.order();
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int v = 0; v < nt; ++v)
        for (int x = 0; x < ns; ++x) {
          const int t = quad.theta_S.theta(a, x);
          if (t != sys.alpha_at(quad.theta_T.theta(u, v), t)) return false;
        }
  return true;
}

}  // namespace

QuadrupleReport check_matched_quadruple(const SolutionQuadruple& quad) {
  const MatchedSystem& sys = quad.system;
  const Verdict sys_ok = check_matched_semigroup(sys);
  if (!sys_ok) throw PreconditionError(sys_ok.condition_tag, sys_ok.counterexample);
  const Verdict pe_s = check_pe_conditions(sys.S, quad.theta_S);
  if (!pe_s) throw PreconditionError("pe-S", pe_s.counterexample);
  const Verdict pe_t = check_pe_conditions(sys.T, quad.theta_T);
  if (!pe_t) throw PreconditionError("pe-T", pe_t.counterexample);

  QuadrupleReport rep;
  rep.verdict = check_m_conditions(quad);

  // The shortcut form of (M2) applies when S has a right identity
  // satisfying (S5) and (S6).
  const PropertyReport props = classify(sys.S);
  if (!props.right_identities.empty()) {
    const int e_s = props.right_identities.front();
    bool s5 = true, s6 = true;
    for (int u = 0; u < sys.T.order(); ++u) {
      if (sys.beta_at(e_s, u) != u) s5 = false;
      if (sys.alpha_at(u, e_s) != e_s) s6 = false;
    }
    rep.m2prime_applicable = s5 && s6;
  }
  if (rep.m2prime_applicable) {
    rep.m2prime_holds = m2prime_condition(quad);
    // (M2) in isolation: rerun the M-conditions but only report on the M2 tag.
    bool m2_holds = true;
    {
      const MatchedSystem& s = sys;
      const int ns = s.S.order(), nt = s.T.order();
      for (int a = 0; a < ns && m2_holds; ++a)
        for (int b = 0; b < ns && m2_holds; ++b)
          for (int u = 0; u < nt && m2_holds; ++u)
            for (int v = 0; v < nt && m2_holds; ++v) {
              const int p = s.S.product(a, s.alpha_at(u, b));
              const int w = quad.theta_T.theta(s.beta_at(b, u), v);
              for (int x = 0; x < ns; ++x)
                if (quad.theta_S.theta(p, x) != s.alpha_at(w, quad.theta_S.theta(p, x))) {
                  m2_holds = false;
                  break;
                }
            }
    }
    rep.m2prime_matches_m2 = (rep.m2prime_holds == m2_holds);
  }
  return rep;
}

Verdict full_quadruple_verdict(const SolutionQuadruple& quad) {
  const Verdict sys_ok = check_matched_semigroup(quad.system);
  if (!sys_ok) return sys_ok;
  const Verdict pe_s = check_pe_conditions(quad.system.S, quad.theta_S);
  if (!pe_s) return Verdict::fail("pe-S:" + pe_s.condition_tag, pe_s.counterexample);
  const Verdict pe_t = check_pe_conditions(quad.system.T, quad.theta_T);
  if (!pe_t) return Verdict::fail("pe-T:" + pe_t.condition_tag, pe_t.counterexample);
  return check_m_conditions(quad);
}

PairMap build_matched_solution(const SolutionQuadruple& quad) {
  const QuadrupleReport rep = check_matched_quadruple(quad);
  if (!rep.verdict)
    throw PreconditionError(rep.verdict.condition_tag, rep.verdict.counterexample);
  const MatchedSystem& sys = quad.system;
  const int ns = sys.S.order(), nt = sys.T.order();
  const int n = ns * nt;
  std::vector<int> first(static_cast<std::size_t>(n) * n), second(first.size());
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int b = 0; b < ns; ++b)
        for (int v = 0; v < nt; ++v) {
          const int i = pair_index(a, u, nt), j = pair_index(b, v, nt);
          const int aub = sys.alpha_at(u, b);
          const int bu = sys.beta_at(b, u);
          first[i * n + j] = pair_index(sys.S.product(a, aub), sys.T.product(bu, v), nt);
          second[i * n + j] =
              pair_index(quad.theta_S.theta(a, aub), quad.theta_T.theta(bu, v), nt);
        }
  PairMap result = PairMap::from_tables(n, std::move(first), std::move(second));
  const Verdict oracle = verify_equation(result, Equation::Pentagon);
  if (!oracle)
    throw Error("matched solution failed the pentagon oracle; condition layer is inconsistent");
  return result;
}

EmbeddingReport check_embeddings(const MatchedSystem& sys, int e_s, int e_t) {
  validate_matched_system(sys);
  require_beta(sys);
  const PropertyReport ps = classify(sys.S), pt = classify(sys.T);
  if (e_s < 0) {
    if (ps.right_identities.empty()) throw PreconditionError("one-sided-identity");
    e_s = ps.right_identities.front();
  } else if (std::find(ps.right_identities.begin(), ps.right_identities.end(), e_s) ==
             ps.right_identities.end()) {
    throw PreconditionError("one-sided-identity", {e_s});
  }
  if (e_t < 0) {
    if (pt.left_identities.empty()) throw PreconditionError("one-sided-identity");
    e_t = pt.left_identities.front();
  } else if (std::find(pt.left_identities.begin(), pt.left_identities.end(), e_t) ==
             pt.left_identities.end()) {
    throw PreconditionError("one-sided-identity", {e_t});
  }

  EmbeddingReport rep;
  rep.e_s = e_s;
  rep.e_t = e_t;
  const int ns = sys.S.order(), nt = sys.T.order();
  for (int x = 0; x < ns; ++x)
    if (sys.alpha_at(e_t, x) != x) {
      rep.verdict = Verdict::fail("S3", {x});
      return rep;
    }
  for (int a = 0; a < ns; ++a)
    if (sys.beta_at(a, e_t) != e_t) {
      rep.verdict = Verdict::fail("S4", {a});
      return rep;
    }
  for (int u = 0; u < nt; ++u)
    if (sys.beta_at(e_s, u) != u) {
      rep.verdict = Verdict::fail("S5", {u});
      return rep;
    }
  for (int u = 0; u < nt; ++u)
    if (sys.alpha_at(u, e_s) != e_s) {
      rep.verdict = Verdict::fail("S6", {u});
      return rep;
    }
  rep.verdict = Verdict::ok();

  // The copies: (a, e_t)(b, e_t) must equal (ab, e_t) entrywise, and
  // (e_s, u)(e_s, v) must equal (e_s, uv).
  rep.s_copy_isomorphic = true;
  for (int a = 0; a < ns && rep.s_copy_isomorphic; ++a)
    for (int b = 0; b < ns; ++b) {
      const int prod_s = sys.S.product(a, sys.alpha_at(e_t, b));
      const int prod_t = sys.T.product(sys.beta_at(b, e_t), e_t);
      if (prod_s != sys.S.product(a, b) || prod_t != e_t) {
        rep.s_copy_isomorphic = false;
        break;
      }
    }
  rep.t_copy_isomorphic = true;
  for (int u = 0; u < nt && rep.t_copy_isomorphic; ++u)
    for (int v = 0; v < nt; ++v) {
      const int prod_s = sys.S.product(e_s, sys.alpha_at(u, e_s));
      const int prod_t = sys.T.product(sys.beta_at(e_s, u), v);
      if (prod_s != e_s || prod_t != sys.T.product(u, v)) {
        rep.t_copy_isomorphic = false;
        break;
      }
    }
  return rep;
}

Verdict check_monoid_quadruple(const SolutionQuadruple& quad) {
  const MatchedSystem& sys = quad.system;
  validate_matched_system(sys);
  require_beta(sys);
  int one_s = -1, one_t = -1;
  {
    const PropertyReport ps = classify(sys.S), pt = classify(sys.T);
    if (!ps.monoid || !pt.monoid) throw PreconditionError("monoids");
    for (int e : ps.left_identities)
      if (std::find(ps.right_identities.begin(), ps.right_identities.end(), e) !=
          ps.right_identities.end())
        one_s = e;
    for (int e : pt.left_identities)
      if (std::find(pt.right_identities.begin(), pt.right_identities.end(), e) !=
          pt.right_identities.end())
        one_t = e;
  }
  // A matched quadruple of monoids presupposes (S1) and (S2).
  const Verdict sys_ok = check_matched_semigroup(sys);
  if (!sys_ok) return sys_ok;
  const int ns = sys.S.order(), nt = sys.T.order();
  auto al = [&](int u, int a) { return sys.alpha_at(u, a); };
  auto be = [&](int a, int u) { return sys.beta_at(a, u); };
  auto thS = [&](int a, int x) { return quad.theta_S.theta(a, x); };
  auto thT = [&](int u, int y) { return quad.theta_T.theta(u, y); };

  for (int x = 0; x < ns; ++x)
    if (al(one_t, x) != x) return Verdict::fail("S3", {x});
  for (int a = 0; a < ns; ++a)
    if (be(a, one_t) != one_t) return Verdict::fail("S4", {a});
  for (int u = 0; u < nt; ++u)
    if (be(one_s, u) != u) return Verdict::fail("S5", {u});
  for (int u = 0; u < nt; ++u)
    if (al(u, one_s) != one_s) return Verdict::fail("S6", {u});

  // 1. theta_a = alpha_{theta_u(v)} theta_a = theta_{alpha_v(a)} alpha_{beta_a(v)}
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int v = 0; v < nt; ++v)
        for (int x = 0; x < ns; ++x)
          if (thS(a, x) != al(thT(u, v), thS(a, x)))
            return Verdict::fail("mon1a", {a, u, v, x});
  for (int a = 0; a < ns; ++a)
    for (int v = 0; v < nt; ++v)
      for (int x = 0; x < ns; ++x)
        if (thS(a, x) != thS(al(v, a), al(be(a, v), x)))
          return Verdict::fail("mon1b", {a, v, x});
  // 2. beta_{theta_a(alpha_{uv}(b))}(theta_u(v)) = theta_{beta_{alpha_v(b)}(u)}(beta_b(v))
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u)
        for (int v = 0; v < nt; ++v) {
          const int lhs = be(thS(a, al(sys.T.product(u, v), b)), thT(u, v));
          const int rhs = thT(be(al(v, b), u), be(b, v));
          if (lhs != rhs) return Verdict::fail("mon2", {a, b, u, v});
        }
  return Verdict::ok();
}

}  // namespace ybpe
