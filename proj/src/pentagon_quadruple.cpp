#include "ybpe/pentagon_quadruple.hpp"

namespace ybpe {

PairMap assemble_reversed_form(const Semigroup& T, const ThetaFamily& theta_T) {
  const int n = T.order();
  if (theta_T.order != n) throw BadParamsError("theta order must match the carrier");
  std::vector<int> first(static_cast<std::size_t>(n) * n), second(first.size());
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      first[u * n + v] = theta_T.theta(v, u);
      second[u * n + v] = T.product(v, u);
    }
  return PairMap::from_tables(n, std::move(first), std::move(second));
}

namespace {

// theta_S must satisfy the pentagon conditions on S; t(u,v) = (theta_v(u), vu)
// must be a reversed solution, i.e. (T, theta_T) passes the same conditions.
void require_pentagon_layers(const SolutionQuadruple& quad) {
  const Verdict pe_s = check_pe_conditions(quad.system.S, quad.theta_S);
  if (!pe_s) throw PreconditionError("pe-S", pe_s.counterexample);
  const Verdict pe_t = check_pe_conditions(quad.system.T, quad.theta_T);
  if (!pe_t) throw PreconditionError("reversed-T", pe_t.counterexample);
}

}  // namespace

Verdict check_pentagon_quadruple(const SolutionQuadruple& quad) {
  const MatchedSystem& sys = quad.system;
  validate_matched_system(sys);
  if (!sys.beta) throw PreconditionError("beta-missing");
  require_pentagon_layers(quad);

  const int ns = sys.S.order(), nt = sys.T.order();
  auto al = [&](int u, int a) { return sys.alpha_at(u, a); };
  auto be = [&](int a, int u) { return sys.beta_at(a, u); };
  auto thS = [&](int a, int x) { return quad.theta_S.theta(a, x); };
  auto thT = [&](int u, int y) { return quad.theta_T.theta(u, y); };
  auto mS = [&](int x, int y) { return sys.S.product(x, y); };
  auto mT = [&](int x, int y) { return sys.T.product(x, y); };
  // a_u b_v = alpha_u(a) alpha_{theta_v beta_a(u)}(b)
  auto aubv = [&](int a, int u, int b, int v) {
    return mS(al(u, a), al(thT(v, be(a, u)), b));
  };
  // u_a v_b = beta_a(u) beta_{theta_b alpha_u(a)}(v)
  auto uavb = [&](int u, int a, int v, int b) {
    return mT(be(a, u), be(thS(b, al(u, a)), v));
  };

  // (p1) a b_u c_v = a theta_b alpha_v(c) b_u c_v
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int c = 0; c < ns; ++c)
        for (int u = 0; u < nt; ++u)
          for (int v = 0; v < nt; ++v) {
            const int tail = aubv(b, u, c, v);
            if (mS(a, tail) != mS(mS(a, thS(b, al(v, c))), tail))
              return Verdict::fail("p1", {a, b, c, u, v});
          }
  // (r1) u v_a w_b = u theta_v beta_b(w) v_a w_b
  for (int u = 0; u < nt; ++u)
    for (int v = 0; v < nt; ++v)
      for (int w = 0; w < nt; ++w)
        for (int a = 0; a < ns; ++a)
          for (int b = 0; b < ns; ++b) {
            const int tail = uavb(v, a, w, b);
            if (mT(u, tail) != mT(mT(u, thT(v, be(b, w))), tail))
              return Verdict::fail("r1", {u, v, w, a, b});
          }
  // (p2) theta_a theta_b alpha_u = theta_{alpha_v(b)} alpha_{theta_u beta_b(v)}
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u)
        for (int v = 0; v < nt; ++v)
          for (int x = 0; x < ns; ++x)
            if (thS(a, thS(b, al(u, x))) != thS(al(v, b), al(thT(u, be(b, v)), x)))
              return Verdict::fail("p2", {a, b, u, v, x});
  // (r2) theta_u theta_v beta_a = theta_{beta_b(v)} beta_{theta_a alpha_v(b)}
  for (int u = 0; u < nt; ++u)
    for (int v = 0; v < nt; ++v)
      for (int a = 0; a < ns; ++a)
        for (int b = 0; b < ns; ++b)
          for (int y = 0; y < nt; ++y)
            if (thT(u, thT(v, be(a, y))) != thT(be(b, v), be(thS(a, al(v, b)), y)))
              return Verdict::fail("r2", {u, v, a, b, y});
  // (p3) theta_a(bc) = theta_{a theta_b alpha_u(c)}(bc)
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int c = 0; c < ns; ++c)
        for (int u = 0; u < nt; ++u) {
          const int bc = mS(b, c);
          if (thS(a, bc) != thS(mS(a, thS(b, al(u, c))), bc))
            return Verdict::fail("p3", {a, b, c, u});
        }
  // (r3) theta_u(vw) = theta_{u theta_v beta_a(w)}(vw)
  for (int u = 0; u < nt; ++u)
    for (int v = 0; v < nt; ++v)
      for (int w = 0; w < nt; ++w)
        for (int a = 0; a < ns; ++a) {
          const int vw = mT(v, w);
          if (thT(u, vw) != thT(mT(u, thT(v, be(a, w))), vw))
            return Verdict::fail("r3", {u, v, w, a});
        }
  // (p4) a_u b_v = alpha_{theta_{w v_b}(u_a)}(a alpha_v(b))
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u)
        for (int v = 0; v < nt; ++v)
          for (int w = 0; w < nt; ++w) {
            const int subscript = thT(mT(w, be(b, v)), be(thS(a, al(v, b)), u));
            if (aubv(a, u, b, v) != al(subscript, mS(a, al(v, b))))
              return Verdict::fail("p4", {a, b, u, v, w});
          }
  // (r4) u_a v_b = beta_{theta_{c b_v}(a_u)}(u beta_b(v))
  for (int u = 0; u < nt; ++u)
    for (int v = 0; v < nt; ++v)
      for (int a = 0; a < ns; ++a)
        for (int b = 0; b < ns; ++b)
          for (int c = 0; c < ns; ++c) {
            const int subscript = thS(mS(c, al(v, b)), al(thT(u, be(b, v)), a));
            if (uavb(u, a, v, b) != be(subscript, mT(u, be(b, v))))
              return Verdict::fail("r4", {u, v, a, b, c});
          }
  // (p5) theta_a = alpha_u theta_a
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int x = 0; x < ns; ++x)
        if (thS(a, x) != al(u, thS(a, x))) return Verdict::fail("p5", {a, u, x});
  // (r5) theta_u = beta_a theta_u
  for (int u = 0; u < nt; ++u)
    for (int a = 0; a < ns; ++a)
      for (int y = 0; y < nt; ++y)
        if (thT(u, y) != be(a, thT(u, y))) return Verdict::fail("r5", {u, a, y});

  return Verdict::ok();
}

PairMap build_ybe_from_pentagon_quadruple(const SolutionQuadruple& quad) {
  const Verdict ok = check_pentagon_quadruple(quad);
  if (!ok) throw PreconditionError(ok.condition_tag, ok.counterexample);
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
          first[i * n + j] =
              pair_index(quad.theta_S.theta(a, aub), sys.T.product(v, bu), nt);
          second[i * n + j] =
              pair_index(sys.S.product(a, aub), quad.theta_T.theta(v, bu), nt);
        }
  PairMap result = PairMap::from_tables(n, std::move(first), std::move(second));
  const Verdict oracle = verify_equation(result, Equation::Braid);
  if (!oracle)
    throw Error("pentagon quadruple output failed the braid oracle; condition layer is inconsistent");
  return result;
}

Verdict check_alpha_system(const SolutionQuadruple& quad) {
  const MatchedSystem& sys = quad.system;
  validate_matched_system(sys);
  if (sys.beta) throw PreconditionError("beta-present");
  const Verdict pe_s = check_pe_conditions(sys.S, quad.theta_S);
  if (!pe_s) throw PreconditionError("pe-S", pe_s.counterexample);
  // t must be an R-QYBE solution: reversed plus the QYBE conditions.
  if (!is_pe(sys.T, quad.theta_T)) throw PreconditionError("reversed-T");
  if (!is_pqybe(sys.T, quad.theta_T)) throw PreconditionError("r-qybe-T");

  const int ns = sys.S.order(), nt = sys.T.order();
  auto al = [&](int u, int a) { return sys.alpha_at(u, a); };
  auto thS = [&](int a, int x) { return quad.theta_S.theta(a, x); };
  auto thT = [&](int u, int y) { return quad.theta_T.theta(u, y); };
  auto mS = [&](int x, int y) { return sys.S.product(x, y); };
  auto mT = [&](int x, int y) { return sys.T.product(x, y); };
  auto aubv = [&](int a, int u, int b, int v) {
    return mS(al(u, a), al(thT(v, u), b));
  };

  // (p1) a b_u c_v = a theta_b alpha_v(c) b_u c_v
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int c = 0; c < ns; ++c)
        for (int u = 0; u < nt; ++u)
          for (int v = 0; v < nt; ++v) {
            const int tail = aubv(b, u, c, v);
            if (mS(a, tail) != mS(mS(a, thS(b, al(v, c))), tail))
              return Verdict::fail("p1", {a, b, c, u, v});
          }
  // (p2) theta_a theta_b alpha_u = theta_{alpha_v(b)} alpha_{theta_u(v)}
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u)
        for (int v = 0; v < nt; ++v)
          for (int x = 0; x < ns; ++x)
            if (thS(a, thS(b, al(u, x))) != thS(al(v, b), al(thT(u, v), x)))
              return Verdict::fail("p2", {a, b, u, v, x});
  // (p3) theta_a(bc) = theta_{a theta_b alpha_u(c)}(bc)
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int c = 0; c < ns; ++c)
        for (int u = 0; u < nt; ++u) {
          const int bc = mS(b, c);
          if (thS(a, bc) != thS(mS(a, thS(b, al(u, c))), bc))
            return Verdict::fail("p3", {a, b, c, u});
        }
  // (p4) a_u b_v = alpha_{theta_{wv}(u)}(a alpha_v(b))
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u)
        for (int v = 0; v < nt; ++v)
          for (int w = 0; w < nt; ++w)
            if (aubv(a, u, b, v) != al(thT(mT(w, v), u), mS(a, al(v, b))))
              return Verdict::fail("p4", {a, b, u, v, w});
  // (p5) theta_a = alpha_u theta_a
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int x = 0; x < ns; ++x)
        if (thS(a, x) != al(u, thS(a, x))) return Verdict::fail("p5", {a, u, x});

  return Verdict::ok();
}

PairMap build_ybe_from_alpha_system(const SolutionQuadruple& quad) {
  const Verdict ok = check_alpha_system(quad);
  if (!ok) throw PreconditionError(ok.condition_tag, ok.counterexample);
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
          first[i * n + j] =
              pair_index(quad.theta_S.theta(a, aub), sys.T.product(v, u), nt);
          second[i * n + j] =
              pair_index(sys.S.product(a, aub), quad.theta_T.theta(v, u), nt);
        }
  PairMap result = PairMap::from_tables(n, std::move(first), std::move(second));
  const Verdict oracle = verify_equation(result, Equation::Braid);
  if (!oracle)
    throw Error("alpha system output failed the braid oracle; condition layer is inconsistent");
  return result;
}

}  // namespace ybpe
