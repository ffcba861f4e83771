#include "ybpe/powers.hpp"

#include <algorithm>

namespace ybpe {

PowerProfile power_profile(const PairMap& map, int cap) {
  if (cap < 2) throw BadParamsError("power cap must be at least 2");
  std::vector<PairMap> powers;  // powers[j] = map^j, with map^0 = identity
  powers.push_back(PairMap::identity(map.order()));
  int index = -1, period = -1;
  for (int k = 1; k <= cap; ++k) {
    PairMap next = compose(map, powers.back());
    for (int j = 0; j < k; ++j)
      if (powers[j] == next) {
        index = j;
        period = k - j;
        break;
      }
    powers.push_back(std::move(next));
    if (index >= 0) break;
  }
  if (index < 0) {
    powers.erase(powers.begin());  // keep map^1..map^cap
    throw CapExceededError(std::move(powers));
  }
  PowerProfile profile;
  profile.index = index;
  profile.period = period;
  for (int j = 1; j <= index + period; ++j) {
    PowerVerdicts v;
    v.pentagon = verify_equation(powers[j], Equation::Pentagon).holds;
    v.qybe = verify_equation(powers[j], Equation::Qybe).holds;
    v.braid = verify_equation(powers[j], Equation::Braid).holds;
    profile.power_verdicts.push_back(v);
  }
  return profile;
}

Verdict verify_power_formula(const Semigroup& sg, const ThetaFamily& theta, int n) {
  if (n < 2) throw BadParamsError("power formula applies for n >= 2");
  if (!is_pqybe(sg, theta)) throw PreconditionError("pqybe");
  const PairMap s = assemble_product_form(sg, theta);
  const PairMap sn = power(s, n);
  const int order = sg.order();
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int t = theta.theta(a, b);
      const int expected_first = sg.product(sg.product(a, b), sg.element_power(t, n - 1));
      if (sn.first(a, b) != expected_first || sn.second(a, b) != t)
        return Verdict::fail("power-formula", {a, b});
    }
  if (classify(sg).idempotent) {
    if (!(power(s, 3) == power(s, 2))) return Verdict::fail("s3-equals-s2", {});
  }
  return Verdict::ok();
}

PowerTheoremReport verify_power_theorem(const PairMap& r) {
  const PairMap s = compose_flip_left(r);  // r = tau s
  auto decomposed = decompose_product_form(s);
  if (!decomposed) throw PreconditionError("product-form");
  const Semigroup& sg = decomposed->first;
  const ThetaFamily& theta = decomposed->second;
  if (!is_pqybe(sg, theta)) throw PreconditionError("pqybe");
  const PropertyReport props = classify(sg);
  if (!props.variety_s) throw PreconditionError("variety-s");

  const int n = sg.order();
  // theta restricted to S^2 must be one map; evaluate theta_bar through row 0.
  for (int w : product_image(sg))
    for (int a = 1; a < n; ++a)
      if (theta.theta(a, w) != theta.theta(0, w)) throw PreconditionError("theta-bar", {a, w});
  auto theta_bar = [&](int x) { return theta.theta(0, x); };

  const PairMap r2 = power(r, 2), r3 = power(r, 3), r4 = power(r, 4), r5 = power(r, 5);

  PowerTheoremReport rep;
  rep.r5_equals_r3 = (r5 == r3);
  rep.braid_r2 = verify_equation(r2, Equation::Braid).holds;
  rep.braid_r3 = verify_equation(r3, Equation::Braid).holds;
  rep.braid_r4 = verify_equation(r4, Equation::Braid).holds;

  rep.closed_form_r2 = rep.closed_form_r3 = true;
  rep.closed_form_r4 = rep.closed_form_r5 = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = sg.product(a, b);
      const int tab = theta.theta(a, b);      // theta_a(b)
      const int tb_ab = theta_bar(ab);        // theta_bar(ab)
      const int tb_a = theta_bar(a);          // theta_bar(a)
      const int t_ab_prod = sg.product(tab, ab);   // theta_a(b) ab
      const int tba_prod = sg.product(tb_a, ab);   // theta_bar(a) ab
      if (r2.first(a, b) != tb_ab || r2.second(a, b) != t_ab_prod)
        rep.closed_form_r2 = false;
      if (r3.first(a, b) != sg.product(tab, tb_ab) || r3.second(a, b) != tba_prod)
        rep.closed_form_r3 = false;
      if (r4.first(a, b) != sg.product(tb_a, tb_ab) || r4.second(a, b) != t_ab_prod)
        rep.closed_form_r4 = false;
      if (r5.first(a, b) != sg.product(tab, tb_ab) || r5.second(a, b) != tba_prod)
        rep.closed_form_r5 = false;
    }

  rep.carrier_idempotent = props.idempotent;
  if (rep.carrier_idempotent) rep.r4_equals_r2 = (r4 == r2);

  const bool all = rep.r5_equals_r3 && rep.braid_r2 && rep.braid_r3 && rep.braid_r4 &&
                   rep.closed_form_r2 && rep.closed_form_r3 && rep.closed_form_r4 &&
                   rep.closed_form_r5 && (!rep.carrier_idempotent || rep.r4_equals_r2);
  rep.verdict = all ? Verdict::ok() : Verdict::fail("power-theorem", {});
  return rep;
}

int identity_element(const Semigroup& sg) {
  const int n = sg.order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (sg.product(e, x) != x || sg.product(x, e) != x) { ok = false; break; }
    if (ok) return e;
  }
  return -1;
}

bool is_group(const Semigroup& sg) {
  const int e = identity_element(sg);
  if (e < 0) return false;
  const int n = sg.order();
  for (int x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (int y = 0; y < n; ++y)
      if (sg.product(x, y) == e && sg.product(y, x) == e) { has_inverse = true; break; }
    if (!has_inverse) return false;
  }
  return true;
}

KernelReport kernel(const Semigroup& sg, const ThetaFamily& theta) {
  if (!is_group(sg)) throw PreconditionError("group");
  const Verdict pe = check_pe_conditions(sg, theta);
  if (!pe) throw PreconditionError("pe", pe.counterexample);

  const int e = identity_element(sg);
  const int n = sg.order();
  KernelReport rep;
  for (int a = 0; a < n; ++a)
    if (theta.theta(e, a) == e) rep.kernel.push_back(a);

  std::vector<bool> in_kernel(n, false);
  for (int a : rep.kernel) in_kernel[a] = true;

  rep.is_subgroup = in_kernel[e];
  for (int a : rep.kernel) {
    for (int b : rep.kernel)
      if (!in_kernel[sg.product(a, b)]) rep.is_subgroup = false;
    bool inverse_inside = false;
    for (int b : rep.kernel)
      if (sg.product(a, b) == e) inverse_inside = true;
    if (!inverse_inside) rep.is_subgroup = false;
  }

  rep.is_normal = rep.is_subgroup;
  if (rep.is_normal) {
    for (int g = 0; g < n && rep.is_normal; ++g) {
      int g_inv = -1;
      for (int y = 0; y < n; ++y)
        if (sg.product(g, y) == e) { g_inv = y; break; }
      for (int a : rep.kernel)
        if (!in_kernel[sg.product(sg.product(g, a), g_inv)]) { rep.is_normal = false; break; }
    }
  }
  return rep;
}

}  // namespace ybpe
