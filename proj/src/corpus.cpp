#include "ybpe/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ybpe/enumeration.hpp"
#include "ybpe/equations.hpp"
#include "ybpe/matched.hpp"
#include "ybpe/named_solutions.hpp"
#include "ybpe/pentagon_quadruple.hpp"
#include "ybpe/powers.hpp"
#include "ybpe/product_form.hpp"
#include "ybpe/semigroup.hpp"

namespace ybpe {

namespace {

SelfMap sm(int n, std::vector<int> image) {
  return SelfMap{n, std::move(image), std::nullopt, std::nullopt};
}

ThetaFamily identity_theta(int n) {
  ThetaFamily t;
  t.order = n;
  t.table.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.table[x * n + y] = y;
  return t;
}

void add(Fixture& fix, std::string description, std::function<bool()> run) {
  fix.expectations.push_back({std::move(description), std::move(run)});
}

// Pointwise comparison of a map against a formula on raw pairs.
bool map_matches(const PairMap& m, const std::function<std::pair<int, int>(int, int)>& f) {
  for (int x = 0; x < m.order(); ++x)
    for (int y = 0; y < m.order(); ++y)
      if (m.apply(x, y) != f(x, y)) return false;
  return true;
}

// Product-carrier comparison: formula on ((a,u),(b,v)) -> ((s1,t1),(s2,t2)).
bool product_map_matches(
    const PairMap& m, int nt,
    const std::function<std::array<int, 4>(int, int, int, int)>& f) {
  const int n = m.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto [a, u] = pair_unindex(i, nt);
      const auto [b, v] = pair_unindex(j, nt);
      const std::array<int, 4> want = f(a, u, b, v);
      if (m.first(i, j) != pair_index(want[0], want[1], nt) ||
          m.second(i, j) != pair_index(want[2], want[3], nt))
        return false;
    }
  return true;
}

std::vector<std::vector<int>> constant_action_rows(int rows, const std::vector<int>& image) {
  return std::vector<std::vector<int>>(rows, image);
}

// Substitution endomorphism of the free [abc = adbc] semigroup on {x, y}
// sending both letters to x.
SelfMap free_s2_collapse() {
  // encoding of free_variety_s(2): letters 0..1, pairs 2..5, triples 6..13
  std::vector<int> image(14);
  image[0] = 0;
  image[1] = 0;
  for (int i = 2; i < 6; ++i) image[i] = 2;    // pair(x, x)
  for (int i = 6; i < 14; ++i) image[i] = 6;   // triple(x, x, x)
  return sm(14, std::move(image));
}

// ---- fixture builders --------------------------------------------------

Fixture fx_identity() {
  Fixture fix;
  fix.id = "identity";
  fix.note = "identity map on a two-element carrier";
  const PairMap id2 = PairMap::identity(2);
  add(fix, "pentagon holds", [id2] { return verify_equation(id2, Equation::Pentagon).holds; });
  add(fix, "qybe holds", [id2] { return verify_equation(id2, Equation::Qybe).holds; });
  add(fix, "index 0, period 1", [id2] {
    const PowerProfile p = power_profile(id2);
    return p.index == 0 && p.period == 1;
  });
  return fix;
}

Fixture fx_singleton() {
  Fixture fix;
  fix.id = "singleton";
  fix.note = "the unique map on a one-element carrier satisfies everything";
  add(fix, "full-map search finds exactly one map", [] {
    SearchSpec spec;
    spec.shape = SearchShape::FullMap;
    spec.order = 1;
    spec.mode = ResultMode::Collect;
    return enumerate_solutions(spec).count == 1;
  });
  add(fix, "it satisfies all four equations", [] {
    const PairMap m = PairMap::identity(1);
    return verify_equation(m, Equation::Pentagon).holds &&
           verify_equation(m, Equation::ReversedPentagon).holds &&
           verify_equation(m, Equation::Qybe).holds &&
           verify_equation(m, Equation::Braid).holds;
  });
  return fix;
}

Fixture fx_gamma_family() {
  Fixture fix;
  fix.id = "gamma-family";
  fix.note = "s(x,y) = (xy, gamma(y)) is a pentagon solution for every idempotent endomorphism";
  const std::vector<Semigroup> carriers = {left_zero(2), rectangular_band(2, 2),
                                           chain_semilattice(3), cyclic_group(4)};
  add(fix, "every gamma-solution passes the pentagon oracle", [carriers] {
    for (const Semigroup& sg : carriers)
      for (const SelfMap& gamma : idempotent_endomorphisms(sg)) {
        const PairMap s = gamma_solution(sg, gamma);
        if (!verify_equation(s, Equation::Pentagon).holds) return false;
        if (!is_pe(sg, constant_theta_family(sg.order(), gamma))) return false;
      }
    return true;
  });
  return fix;
}

Fixture fx_constant_family() {
  Fixture fix;
  fix.id = "constant-family";
  fix.note = "s(x,y) = (xy, e) is a pentagon solution for every idempotent element e";
  const std::vector<Semigroup> carriers = {left_zero(2), rectangular_band(2, 2),
                                           chain_semilattice(3), cyclic_group(4)};
  add(fix, "every constant solution passes the pentagon oracle", [carriers] {
    for (const Semigroup& sg : carriers)
      for (int e = 0; e < sg.order(); ++e) {
        if (sg.product(e, e) != e) continue;
        if (!verify_equation(constant_solution(sg, e), Equation::Pentagon).holds)
          return false;
      }
    return true;
  });
  return fix;
}

Fixture fx_militaru() {
  Fixture fix;
  fix.id = "militaru";
  fix.note = "s(x,y) = (f(x), g(y)) with commuting idempotent f, g";
  const PairMap small = militaru_solution(2, sm(2, {0, 0}), identity_map(2));
  const PairMap bigger = militaru_solution(3, sm(3, {0, 0, 2}), sm(3, {0, 1, 0}));
  add(fix, "pentagon and reversed pentagon hold", [small, bigger] {
    for (const PairMap& s : {small, bigger})
      if (!verify_equation(s, Equation::Pentagon).holds ||
          !verify_equation(s, Equation::ReversedPentagon).holds)
        return false;
    return true;
  });
  add(fix, "qybe holds", [small, bigger] {
    return verify_equation(small, Equation::Qybe).holds &&
           verify_equation(bigger, Equation::Qybe).holds;
  });
  add(fix, "s is idempotent as a map", [small, bigger] {
    return power(small, 2) == small && power(bigger, 2) == bigger;
  });
  add(fix, "non-commuting maps are rejected", [] {
    try {
      militaru_solution(3, sm(3, {0, 1, 0}), sm(3, {2, 1, 2}));
    } catch (const BadParamsError&) {
      return true;
    }
    return false;
  });
  return fix;
}

Fixture fx_inflation() {
  Fixture fix;
  fix.id = "inflation";
  fix.note = "inflations of carriers and of solutions";
  add(fix, "empty extension returns the base semigroup", [] {
    const Semigroup t = cyclic_group(2);
    return build_inflation(t, {}) == t;
  });
  add(fix, "singleton base with two extension points collapses every product", [] {
    const Semigroup s = build_inflation(left_zero(1), {0, 0});
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (s.product(a, b) != 0) return false;
    return true;
  });
  add(fix, "extension points multiply like their images", [] {
    const Semigroup z2 = cyclic_group(2);
    const Semigroup s = build_inflation(z2, {0});  // element 2 behaves like 0
    for (int a = 0; a < 3; ++a) {
      const int rep = (a == 2) ? 0 : a;
      for (int b = 0; b < 3; ++b) {
        const int repb = (b == 2) ? 0 : b;
        if (s.product(a, b) != z2.product(rep, repb)) return false;
      }
    }
    return true;
  });
  add(fix, "the inflated solution passes the pentagon oracle", [] {
    // base: s(a,b) = (a+b, 0) on Z_2, one extra point mapped to 0
    const Semigroup z2 = cyclic_group(2);
    const ThetaFamily theta = constant_theta_family(2, constant_map(2, 0));
    const PairMap inflated = inflate_solution(z2, theta, {0});
    return verify_equation(inflated, Equation::Pentagon).holds;
  });
  return fix;
}

Fixture fx_matched_gamma_delta() {
  Fixture fix;
  fix.id = "matched-gamma-delta";
  fix.note = "matched product of two gamma-type solutions via constant actions";
  const Semigroup S = left_zero(2), T = right_zero(2);
  const SelfMap gamma = constant_map(2, 0);  // idempotent endomorphism of S
  const SelfMap delta = constant_map(2, 1);  // idempotent endomorphism of T
  MatchedSystem sys{S, T, constant_action_rows(2, gamma.image),
                    constant_action_rows(2, delta.image)};
  const SolutionQuadruple quad{sys, constant_theta_family(2, gamma),
                               constant_theta_family(2, delta)};
  add(fix, "(S1) and (S2) hold", [sys] { return check_matched_semigroup(sys).holds; });
  add(fix, "(M1)-(M3) hold", [quad] { return full_quadruple_verdict(quad).holds; });
  add(fix, "the matched solution matches its displayed formula", [quad, S, T, gamma, delta] {
    const PairMap m = build_matched_solution(quad);
    return product_map_matches(m, 2, [&](int a, int u, int b, int v) {
      return std::array<int, 4>{S.product(a, gamma(b)), T.product(delta(u), v),
                                gamma(b), delta(v)};
    });
  });
  return fix;
}

Fixture fx_matched_mod3() {
  Fixture fix;
  fix.id = "matched-mod3";
  fix.note = "matched product of a projection carrier with the cyclic group of order 3";
  const int k = 3;
  const SelfMap f = sm(k, {0, 1, 0});
  const Semigroup S = left_projection(f);  // ab = f(a)
  const Semigroup T = cyclic_group(k);
  std::vector<std::vector<int>> beta(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int u = 0; u < k; ++u) beta[a][u] = (f(a) + u) % k;
  MatchedSystem sys{S, T, constant_action_rows(k, f.image), beta};
  const SolutionQuadruple quad{sys, constant_theta_family(k, f), identity_theta(k)};
  add(fix, "(S1) and (S2) hold", [sys] { return check_matched_semigroup(sys).holds; });
  add(fix, "the system is not of Zappa type", [sys] { return !check_zappa(sys).holds; });
  add(fix, "(M1)-(M3) hold", [quad] { return full_quadruple_verdict(quad).holds; });
  add(fix, "s |x| t(a,u;b,v) = (f(a), f(b)+u+v ; f(b), v)", [quad, f, k] {
    const PairMap m = build_matched_solution(quad);
    return product_map_matches(m, k, [&](int a, int u, int b, int v) {
      return std::array<int, 4>{f(a), (f(b) + u + v) % k, f(b), v};
    });
  });
  return fix;
}

Fixture fx_matched_3elt() {
  Fixture fix;
  fix.id = "matched-3elt";
  fix.note = "three-element factors with non-Zappa actions; embeddings present";
  const Semigroup S = adjoin_zero(left_zero(2));  // 0 absorbing, {1,2} left-zero
  const Semigroup T = right_zero(3);
  std::vector<int> gamma_img(3);
  for (int x = 0; x < 3; ++x) gamma_img[x] = S.product(1, x);  // 1*x
  const SelfMap gamma = sm(3, gamma_img);
  std::vector<std::vector<int>> alpha = {identity_map(3).image, gamma.image, gamma.image};
  std::vector<std::vector<int>> beta = {gamma.image, identity_map(3).image, gamma.image};
  MatchedSystem sys{S, T, alpha, beta};
  const SolutionQuadruple quad{sys, constant_theta_family(3, gamma), identity_theta(3)};

  add(fix, "gamma = (1 * -) is an idempotent endomorphism of S", [S, gamma] {
    return map_is_idempotent(gamma) && map_is_endomorphism(S, gamma);
  });
  add(fix, "(S1) and (S2) hold", [sys] { return check_matched_semigroup(sys).holds; });
  add(fix, "the system is not of Zappa type", [sys] { return !check_zappa(sys).holds; });
  add(fix, "the matched product is a 9-element semigroup", [sys] {
    return build_matched_semigroup(sys).order() == 9;
  });
  add(fix, "(S3)-(S6) hold with e_S = 1, e_T = 0 and the copies embed", [sys] {
    const EmbeddingReport rep = check_embeddings(sys);
    return rep.verdict.holds && rep.e_s == 1 && rep.e_t == 0 &&
           rep.s_copy_isomorphic && rep.t_copy_isomorphic;
  });
  add(fix, "a perturbed beta is caught by (S4)", [sys] {
    MatchedSystem broken = sys;
    (*broken.beta)[2][0] = 1;  // beta_2(e_T) != e_T
    const EmbeddingReport rep = check_embeddings(broken);
    return !rep.verdict.holds && rep.verdict.condition_tag == "S4" &&
           rep.verdict.counterexample == std::vector<int>{2};
  });
  // The non-identity beta rows never reach the displayed map: T is
  // right-zero, so beta_b(u)v = v, and theta_T is the identity family.
  // They do break (M3) as displayed, while the map itself still solves
  // the pentagon equation.
  add(fix, "(M1) and (M2) hold but (M3) fails at (0,0,2,0,2)", [quad] {
    const Verdict v = full_quadruple_verdict(quad);
    return !v.holds && v.condition_tag == "M3" &&
           v.counterexample == std::vector<int>{0, 0, 2, 0, 2};
  });
  add(fix, "the displayed map solves the pentagon equation and matches its formula",
      [quad, S, gamma, sys] {
        const MatchedSystem& s = quad.system;
        const int n = 9;
        std::vector<int> first(n * n), second(n * n);
        for (int a = 0; a < 3; ++a)
          for (int u = 0; u < 3; ++u)
            for (int b = 0; b < 3; ++b)
              for (int v = 0; v < 3; ++v) {
                const int i = pair_index(a, u, 3), j = pair_index(b, v, 3);
                const int aub = s.alpha[u][b];
                const int bu = (*s.beta)[b][u];
                first[i * n + j] =
                    pair_index(s.S.product(a, aub), s.T.product(bu, v), 3);
                second[i * n + j] =
                    pair_index(quad.theta_S.theta(a, aub), quad.theta_T.theta(bu, v), 3);
              }
        const PairMap m = PairMap::from_tables(n, first, second);
        if (!verify_equation(m, Equation::Pentagon).holds) return false;
        return product_map_matches(m, 3, [&](int a, int u, int b, int v) {
          return std::array<int, 4>{S.product(a, sys.alpha[u][b]), v, gamma(b), v};
        });
      });
  add(fix, "identity beta rows give the same map and satisfy (M1)-(M3)", [quad, S, gamma, sys] {
    SolutionQuadruple repaired = quad;
    *repaired.system.beta = std::vector<std::vector<int>>(3, identity_map(3).image);
    if (!full_quadruple_verdict(repaired).holds) return false;
    const PairMap m = build_matched_solution(repaired);
    return product_map_matches(m, 3, [&](int a, int u, int b, int v) {
      return std::array<int, 4>{S.product(a, sys.alpha[u][b]), v, gamma(b), v};
    });
  });
  return fix;
}

Fixture fx_monoid_quadruple() {
  Fixture fix;
  fix.id = "monoid-quadruple";
  fix.note = "three-element monoid times two-element monoid; the simplified "
             "conditions agree with (M1)-(M3) over every idempotent endomorphism";
  const Semigroup S = chain_semilattice(3);  // 1 > x > y as indices 0,1,2
  const Semigroup T = chain_semilattice(2);  // 1 > z

  auto quad_for = [S, T](const SelfMap& gamma) {
    std::vector<std::vector<int>> alpha = {identity_map(3).image, gamma.image};
    std::vector<std::vector<int>> beta = {identity_map(2).image, {0, 0}, {0, 0}};
    MatchedSystem sys{S, T, alpha, beta};
    return SolutionQuadruple{sys, constant_theta_family(3, gamma), identity_theta(2)};
  };

  add(fix, "simplified conditions agree with (M1)-(M3) for every idempotent endomorphism",
      [S, quad_for] {
        for (const SelfMap& gamma : idempotent_endomorphisms(S)) {
          const SolutionQuadruple quad = quad_for(gamma);
          const bool full = full_quadruple_verdict(quad).holds;
          const bool simplified = check_monoid_quadruple(quad).holds;
          if (full != simplified) return false;
        }
        return true;
      });
  add(fix, "at least one identity-preserving gamma gives a valid quadruple", [S, quad_for] {
    bool found = false;
    for (const SelfMap& gamma : idempotent_endomorphisms(S))
      if (gamma(0) == 0 && full_quadruple_verdict(quad_for(gamma)).holds) found = true;
    return found;
  });
  add(fix, "the matched solution follows the four-branch case split", [S, T, quad_for] {
    for (const SelfMap& gamma : idempotent_endomorphisms(S)) {
      if (gamma(0) != 0) continue;
      const SolutionQuadruple quad = quad_for(gamma);
      if (!full_quadruple_verdict(quad).holds) continue;
      const PairMap m = build_matched_solution(quad);
      const bool ok = product_map_matches(m, 2, [&](int a, int u, int b, int v) {
        if (b == 0 && u == 0) return std::array<int, 4>{a, v, 0, v};
        if (b == 0 && u != 0) return std::array<int, 4>{a, T.product(u, v), 0, v};
        if (u == 0) return std::array<int, 4>{S.product(a, b), v, gamma(b), v};
        return std::array<int, 4>{S.product(a, gamma(b)), v, gamma(b), v};
      });
      if (!ok) return false;
    }
    return true;
  });
  add(fix, "a beta swap breaks both the simplified and the full conditions", [quad_for, S] {
    SolutionQuadruple quad = quad_for(idempotent_endomorphisms(S).front());
    (*quad.system.beta)[1] = {1, 0};  // beta_x swaps T
    return !check_monoid_quadruple(quad).holds && !full_quadruple_verdict(quad).holds;
  });
  return fix;
}

Fixture fx_pqybe_left_identity() {
  Fixture fix;
  fix.id = "pqybe-left-identity";
  fix.note = "s(a,b) = (ab, e) with e a left identity is QYBE-compatible; on groups "
             "the constant-identity family is the only one";
  add(fix, "constant left identity gives a P-QYBE solution", [] {
    const std::vector<std::pair<Semigroup, int>> cases = {
        {right_zero(2), 0}, {chain_semilattice(2), 0}, {cyclic_group(2), 0}};
    for (const auto& [sg, e] : cases) {
      const ThetaFamily theta = constant_theta_family(sg.order(), constant_map(sg.order(), e));
      if (!is_pqybe(sg, theta)) return false;
      if (!verify_equation(assemble_product_form(sg, theta), Equation::Qybe).holds)
        return false;
    }
    return true;
  });
  add(fix, "on Z_2 and Z_3 the only P-QYBE family is constant at the identity", [] {
    for (int k : {2, 3}) {
      const Semigroup g = cyclic_group(k);
      const ThetaFamily expected = constant_theta_family(k, constant_map(k, 0));
      std::vector<int> table(static_cast<std::size_t>(k) * k, 0);
      int found = 0;
      bool expected_found = false;
      while (true) {
        ThetaFamily theta{k, table};
        if (is_pqybe(g, theta)) {
          ++found;
          if (theta == expected) expected_found = true;
        }
        int pos = k * k - 1;
        while (pos >= 0 && table[pos] == k - 1) table[pos--] = 0;
        if (pos < 0) break;
        ++table[pos];
      }
      if (found != 1 || !expected_found) return false;
    }
    return true;
  });
  add(fix, "the identity family on Z_2 fails (Y1)", [] {
    const Semigroup g = cyclic_group(2);
    try {
      const PqybeReport rep = check_pqybe_conditions(g, identity_theta(2));
      return !rep.verdict.holds && rep.verdict.condition_tag == "Y1";
    } catch (const PreconditionError&) {
      return false;
    }
  });
  return fix;
}

Fixture fx_left_quasi_normal() {
  Fixture fix;
  fix.id = "left-quasi-normal";
  fix.note = "s(a,b) = (ab, b) is QYBE-compatible exactly on left quasi-normal carriers";
  add(fix, "holds on left quasi-normal carriers", [] {
    const std::vector<Semigroup> carriers = {chain_semilattice(2), chain_semilattice(3),
                                             adjoin_zero(left_zero(2)),
                                             rectangular_band(2, 2)};
    for (const Semigroup& sg : carriers) {
      if (!classify(sg).left_quasi_normal) return false;
      if (!is_pqybe(sg, identity_theta(sg.order()))) return false;
    }
    return true;
  });
  add(fix, "fails on a carrier that is not left quasi-normal", [] {
    const Semigroup g = cyclic_group(2);
    return !classify(g).left_quasi_normal && !is_pqybe(g, identity_theta(2));
  });
  return fix;
}

Fixture fx_power_formula() {
  Fixture fix;
  fix.id = "power-formula";
  fix.note = "s^n(a,b) = (ab theta_a(b)^{n-1}, theta_a(b)) for QYBE-compatible "
             "product forms";
  add(fix, "closed form holds for n = 2..6 on the registered solutions", [] {
    struct Case { Semigroup sg; ThetaFamily theta; };
    const SelfMap band_gamma = sm(4, {0, 0, 2, 2});
    std::vector<Case> cases;
    cases.push_back({rectangular_band(2, 2), constant_theta_family(4, band_gamma)});
    cases.push_back({left_zero(2), constant_theta_family(2, constant_map(2, 0))});
    cases.push_back({chain_semilattice(2), identity_theta(2)});
    cases.push_back({left_projection(sm(3, {0, 0, 2})),
                     constant_theta_family(3, sm(3, {0, 1, 0}))});
    for (const auto& c : cases)
      for (int n = 2; n <= 6; ++n)
        if (!verify_power_formula(c.sg, c.theta, n).holds) return false;
    return true;
  });
  add(fix, "s^3 = s^2 on idempotent carriers", [] {
    const Semigroup band = rectangular_band(2, 2);
    const PairMap s = assemble_product_form(band, identity_theta(4));
    return power(s, 3) == power(s, 2);
  });
  return fix;
}

Fixture fx_gamma_power_degradation() {
  Fixture fix;
  fix.id = "gamma-power-degradation";
  fix.note = "a gamma-solution whose square is not a solution while its cube is";
  const Semigroup S = free_variety_s(2);
  const SelfMap gamma = free_s2_collapse();
  add(fix, "the carrier is in the variety [abc = adbc] and is not idempotent", [S] {
    const PropertyReport p = classify(S);
    return p.variety_s && !p.idempotent;
  });
  add(fix, "gamma is a non-identity idempotent endomorphism", [S, gamma] {
    return map_is_idempotent(gamma) && map_is_endomorphism(S, gamma) &&
           gamma.image != identity_map(14).image;
  });
  add(fix, "s is QYBE-compatible", [S, gamma] {
    return is_pqybe(S, constant_theta_family(14, gamma));
  });
  add(fix, "s^4 = s^3 but s^3 != s^2", [S, gamma] {
    const PairMap s = gamma_solution(S, gamma);
    return power(s, 4) == power(s, 3) && !(power(s, 3) == power(s, 2));
  });
  add(fix, "s^3 passes both oracles while s^2 passes neither", [S, gamma] {
    const PairMap s = gamma_solution(S, gamma);
    const PairMap s2 = power(s, 2), s3 = power(s, 3);
    return verify_equation(s3, Equation::Pentagon).holds &&
           verify_equation(s3, Equation::Qybe).holds &&
           !verify_equation(s2, Equation::Pentagon).holds &&
           !verify_equation(s2, Equation::Qybe).holds;
  });
  return fix;
}

Fixture fx_gamma_braid_powers() {
  Fixture fix;
  fix.id = "gamma-braid-powers";
  fix.note = "braid form r(a,b) = (gamma(b), ab): fifth power collapses to the third";
  struct Case { Semigroup sg; SelfMap gamma; };
  std::vector<Case> cases;
  cases.push_back({rectangular_band(2, 2), sm(4, {0, 0, 2, 2})});
  cases.push_back({free_variety_s(2), free_s2_collapse()});
  add(fix, "the power theorem report is fully positive", [cases] {
    for (const auto& c : cases) {
      const PairMap r = compose_flip_left(gamma_solution(c.sg, c.gamma));
      if (!verify_power_theorem(r).verdict.holds) return false;
    }
    return true;
  });
  add(fix, "r^2, r^3, r^4 match the gamma-specific displays", [cases] {
    for (const auto& c : cases) {
      const Semigroup& sg = c.sg;
      const SelfMap& gamma = c.gamma;
      const PairMap r = compose_flip_left(gamma_solution(sg, gamma));
      const PairMap r2 = power(r, 2), r3 = power(r, 3), r4 = power(r, 4);
      auto ok2 = map_matches(r2, [&](int a, int b) {
        const int ab = sg.product(a, b);
        return std::make_pair(gamma(ab), sg.product(gamma(b), ab));
      });
      auto ok3 = map_matches(r3, [&](int a, int b) {
        const int ab = sg.product(a, b);
        return std::make_pair(gamma(sg.product(sg.product(b, a), b)),
                              sg.product(gamma(a), ab));
      });
      auto ok4 = map_matches(r4, [&](int a, int b) {
        const int ab = sg.product(a, b);
        return std::make_pair(gamma(sg.product(sg.product(a, a), b)),
                              sg.product(gamma(b), ab));
      });
      if (!ok2 || !ok3 || !ok4) return false;
    }
    return true;
  });
  return fix;
}

Fixture fx_bab_braid_powers() {
  Fixture fix;
  fix.id = "bab-braid-powers";
  fix.note = "r(a,b) = (bab, ab): fourth power collapses to the second without idempotency";
  const Semigroup S = free_variety_s(2);
  ThetaFamily theta;
  theta.order = 14;
  theta.table.resize(14 * 14);
  for (int a = 0; a < 14; ++a)
    for (int b = 0; b < 14; ++b)
      theta.table[a * 14 + b] = S.product(S.product(b, a), b);
  add(fix, "theta_a(b) = bab is QYBE-compatible", [S, theta] { return is_pqybe(S, theta); });
  add(fix, "s^3 = s^2 and its powers pass both oracles", [S, theta] {
    const PairMap s = assemble_product_form(S, theta);
    const PairMap s2 = power(s, 2);
    return power(s, 3) == s2 && verify_equation(s2, Equation::Pentagon).holds &&
           verify_equation(s2, Equation::Qybe).holds;
  });
  add(fix, "r^4 = r^2 with r^2 = (aab, bab) and r^3 = (bab, aab)", [S, theta] {
    const PairMap r = compose_flip_left(assemble_product_form(S, theta));
    const PairMap r2 = power(r, 2), r3 = power(r, 3), r4 = power(r, 4);
    auto bab = [&](int a, int b) { return S.product(S.product(b, a), b); };
    auto aab = [&](int a, int b) { return S.product(S.product(a, a), b); };
    return r4 == r2 &&
           map_matches(r2, [&](int a, int b) { return std::make_pair(aab(a, b), bab(a, b)); }) &&
           map_matches(r3, [&](int a, int b) { return std::make_pair(bab(a, b), aab(a, b)); }) &&
           verify_equation(r2, Equation::Braid).holds &&
           verify_equation(r3, Equation::Braid).holds;
  });
  add(fix, "the carrier is not idempotent", [S] { return !classify(S).idempotent; });
  return fix;
}

Fixture fx_militaru_braid_powers() {
  Fixture fix;
  fix.id = "militaru-braid-powers";
  fix.note = "braid form of a Militaru solution on the carrier ab = f(a)";
  const SelfMap f = sm(3, {0, 0, 2}), g = sm(3, {0, 1, 0});
  const Semigroup S = left_projection(f);
  const ThetaFamily theta = constant_theta_family(3, g);
  add(fix, "the carrier is in the variety but not idempotent", [S] {
    const PropertyReport p = classify(S);
    return p.variety_s && !p.idempotent;
  });
  add(fix, "the product form agrees with the raw Militaru map", [S, theta, f, g] {
    return assemble_product_form(S, theta) == militaru_solution(3, f, g);
  });
  add(fix, "r^4 = r^2 with r^2 = (fg(a), fg(b)) and r^3 = (fg(b), fg(a))", [S, theta, f, g] {
    const PairMap r = compose_flip_left(assemble_product_form(S, theta));
    const PairMap r2 = power(r, 2), r3 = power(r, 3);
    auto fg = [&](int x) { return f(g(x)); };
    return power(r, 4) == r2 &&
           map_matches(r2, [&](int a, int b) { return std::make_pair(fg(a), fg(b)); }) &&
           map_matches(r3, [&](int a, int b) { return std::make_pair(fg(b), fg(a)); });
  });
  add(fix, "the full power theorem holds here as well", [S, theta] {
    const PairMap r = compose_flip_left(assemble_product_form(S, theta));
    return verify_power_theorem(r).verdict.holds;
  });
  return fix;
}

Fixture fx_rect_band_braid() {
  Fixture fix;
  fix.id = "rect-band-braid";
  fix.note = "on rectangular bands every idempotent endomorphism gives a braid "
             "solution with r^4 = r^2";
  const Semigroup band = rectangular_band(2, 2);
  add(fix, "power theorem holds for every idempotent endomorphism", [band] {
    for (const SelfMap& tb : idempotent_endomorphisms(band)) {
      const PairMap r = compose_flip_left(gamma_solution(band, tb));
      const PowerTheoremReport rep = verify_power_theorem(r);
      if (!rep.verdict.holds || !rep.carrier_idempotent || !rep.r4_equals_r2) return false;
    }
    return true;
  });
  // The band-specific square display reads theta_bar(a) where the general
  // form has theta_bar(ab); the two agree exactly when theta_bar(ab) =
  // theta_bar(a), which holds for the endomorphisms whose second
  // coordinate is constant.  The cube display holds for all of them since
  // bab = b on a band.
  add(fix, "cube display holds for every theta; square display when theta_bar(ab) = theta_bar(a)",
      [band] {
        int square_checked = 0;
        for (const SelfMap& tb : idempotent_endomorphisms(band)) {
          const PairMap r = compose_flip_left(gamma_solution(band, tb));
          const PairMap r2 = power(r, 2), r3 = power(r, 3);
          const bool ok3 = map_matches(r3, [&](int a, int b) {
            return std::make_pair(tb(b), band.product(tb(a), band.product(a, b)));
          });
          if (!ok3) return false;
          bool collapses = true;
          for (int a = 0; a < 4 && collapses; ++a)
            for (int b = 0; b < 4; ++b)
              if (tb(band.product(a, b)) != tb(a)) { collapses = false; break; }
          if (!collapses) continue;
          ++square_checked;
          const bool ok2 = map_matches(r2, [&](int a, int b) {
            return std::make_pair(tb(a), band.product(tb(b), band.product(a, b)));
          });
          if (!ok2) return false;
        }
        return square_checked > 0;
      });
  return fix;
}

Fixture fx_ybe_product_w_s() {
  Fixture fix;
  fix.id = "ybe-product-w-s";
  fix.note = "alpha-only construction: constant-square solution times a reversed "
             "QYBE solution";
  struct Case { Semigroup S, T; int k; };
  std::vector<Case> cases;
  cases.push_back({left_zero(2), left_zero(2), 0});
  cases.push_back({null_semigroup(3), rectangular_band(2, 2), 0});
  auto quad_for = [](const Case& c) {
    const int k2 = c.S.product(c.k, c.k);
    MatchedSystem sys{c.S, c.T,
                      constant_action_rows(c.T.order(), constant_map(c.S.order(), k2).image),
                      std::nullopt};
    return SolutionQuadruple{sys,
                             constant_theta_family(c.S.order(), constant_map(c.S.order(), k2)),
                             identity_theta(c.T.order())};
  };
  add(fix, "the first carrier is in the variety [abc = abdbc, a^3 = a^2]", [cases] {
    for (const auto& c : cases)
      if (!classify(c.S).variety_w) return false;
    return true;
  });
  add(fix, "(p1)-(p5) hold", [cases, quad_for] {
    for (const auto& c : cases)
      if (!check_alpha_system(quad_for(c)).holds) return false;
    return true;
  });
  add(fix, "r matches (k^2, vu ; a k^2, u) and r^5 = r^3", [cases, quad_for] {
    for (const auto& c : cases) {
      const int k2 = c.S.product(c.k, c.k);
      const PairMap r = build_ybe_from_alpha_system(quad_for(c));
      const int nt = c.T.order();
      const bool shape = product_map_matches(r, nt, [&](int a, int u, int, int v) {
        return std::array<int, 4>{k2, c.T.product(v, u), c.S.product(a, k2), u};
      });
      if (!shape || !(power(r, 5) == power(r, 3))) return false;
    }
    return true;
  });
  add(fix, "r^2, r^3, r^4 pass the braid oracle and match their displays", [cases, quad_for] {
    for (const auto& c : cases) {
      const int k2 = c.S.product(c.k, c.k);
      const PairMap r = build_ybe_from_alpha_system(quad_for(c));
      const int nt = c.T.order();
      const PairMap r2 = power(r, 2), r3 = power(r, 3), r4 = power(r, 4);
      for (const PairMap* p : {&r2, &r3, &r4})
        if (!verify_equation(*p, Equation::Braid).holds) return false;
      auto uvu = [&](int u, int v) { return c.T.product(c.T.product(u, v), u); };
      auto vvu = [&](int u, int v) { return c.T.product(c.T.product(v, v), u); };
      const bool ok2 = product_map_matches(r2, nt, [&](int, int u, int, int v) {
        return std::array<int, 4>{k2, uvu(u, v), k2, c.T.product(v, u)};
      });
      const bool ok3 = product_map_matches(r3, nt, [&](int, int u, int, int v) {
        return std::array<int, 4>{k2, vvu(u, v), k2, uvu(u, v)};
      });
      const bool ok4 = product_map_matches(r4, nt, [&](int, int u, int, int v) {
        return std::array<int, 4>{k2, uvu(u, v), k2, vvu(u, v)};
      });
      if (!ok2 || !ok3 || !ok4) return false;
    }
    return true;
  });
  // On the null carrier alpha is material: flipping one alpha entry at the
  // image of the product surfaces as a (p4) failure.
  add(fix, "a flipped alpha entry is caught by (p4)", [cases, quad_for] {
    SolutionQuadruple quad = quad_for(cases[1]);
    quad.system.alpha[1][0] = 1;
    const Verdict v = check_alpha_system(quad);
    if (v.holds || v.condition_tag != "p4") return false;
    bool threw = false;
    try {
      build_ybe_from_alpha_system(quad);
    } catch (const PreconditionError& e) {
      threw = (e.tag == "p4") && !e.witness.empty();
    }
    return threw;
  });
  return fix;
}

Fixture fx_ybe_right_zero_band() {
  Fixture fix;
  fix.id = "ybe-right-zero-band";
  fix.note = "alpha-only construction: right-zero solution times a rectangular band";
  struct Case { int m; SelfMap phi; };
  std::vector<Case> cases;
  cases.push_back({2, sm(2, {0, 0})});
  cases.push_back({3, sm(3, {0, 1, 0})});
  const Semigroup T = rectangular_band(2, 2);
  auto quad_for = [T](const Case& c) {
    MatchedSystem sys{right_zero(c.m), T,
                      constant_action_rows(T.order(), c.phi.image), std::nullopt};
    return SolutionQuadruple{sys, constant_theta_family(c.m, c.phi), identity_theta(T.order())};
  };
  add(fix, "the right-zero solution is QYBE-compatible", [cases] {
    for (const auto& c : cases) {
      auto dec = decompose_product_form(right_zero_solution(c.m, c.phi));
      if (!dec || !is_pqybe(dec->first, dec->second)) return false;
    }
    return true;
  });
  add(fix, "(p1)-(p5) hold", [cases, quad_for] {
    for (const auto& c : cases)
      if (!check_alpha_system(quad_for(c)).holds) return false;
    return true;
  });
  add(fix, "r = (phi(b), vu ; phi(b), u), r^3 = r, r^2 matches its display", [cases, quad_for, T] {
    for (const auto& c : cases) {
      const PairMap r = build_ybe_from_alpha_system(quad_for(c));
      const int nt = T.order();
      const bool shape = product_map_matches(r, nt, [&](int, int u, int b, int v) {
        return std::array<int, 4>{c.phi(b), T.product(v, u), c.phi(b), u};
      });
      const PairMap r2 = power(r, 2);
      const bool ok2 = product_map_matches(r2, nt, [&](int, int u, int b, int v) {
        return std::array<int, 4>{c.phi(b), u, c.phi(b), T.product(v, u)};
      });
      if (!shape || !ok2 || !(power(r, 3) == r) ||
          !verify_equation(r2, Equation::Braid).holds)
        return false;
    }
    return true;
  });
  return fix;
}

Fixture fx_ybe_band_projection() {
  Fixture fix;
  fix.id = "ybe-band-projection";
  fix.note = "full pentagon quadruple: rectangular band times the carrier uv = f(u)";
  const Semigroup S = rectangular_band(2, 2);
  const SelfMap gamma = sm(4, {0, 0, 2, 2});
  const SelfMap f = sm(3, {0, 1, 0});
  const Semigroup T = left_projection(f);
  MatchedSystem sys{S, T, constant_action_rows(3, gamma.image),
                    constant_action_rows(4, f.image)};
  const SolutionQuadruple quad{sys, constant_theta_family(4, gamma),
                               constant_theta_family(3, f)};
  add(fix, "(p1)-(p5) and (r1)-(r5) hold", [quad] {
    return check_pentagon_quadruple(quad).holds;
  });
  add(fix, "r matches (gamma(b), f(v) ; a gamma(b), f(u))", [quad, S, gamma, f] {
    const PairMap r = build_ybe_from_pentagon_quadruple(quad);
    return product_map_matches(r, 3, [&](int a, int u, int b, int v) {
      return std::array<int, 4>{gamma(b), f(v), S.product(a, gamma(b)), f(u)};
    });
  });
  add(fix, "r^4 = r^2 with the displayed squares and cubes", [quad, S, gamma, f] {
    const PairMap r = build_ybe_from_pentagon_quadruple(quad);
    const PairMap r2 = power(r, 2), r3 = power(r, 3);
    const bool ok2 = product_map_matches(r2, 3, [&](int a, int u, int b, int v) {
      return std::array<int, 4>{gamma(S.product(a, b)), f(u), gamma(b), f(v)};
    });
    const bool ok3 = product_map_matches(r3, 3, [&](int a, int u, int b, int v) {
      return std::array<int, 4>{gamma(b), f(v), gamma(S.product(a, b)), f(u)};
    });
    return power(r, 4) == r2 && ok2 && ok3 &&
           verify_equation(r2, Equation::Braid).holds &&
           verify_equation(r3, Equation::Braid).holds;
  });
  return fix;
}

Fixture fx_ybe_groups() {
  Fixture fix;
  fix.id = "ybe-groups";
  fix.note = "pentagon quadruples on groups force constant actions; idempotent "
             "endomorphisms give r^3 = r^2";
  struct Case { Semigroup G; SelfMap alpha_bar, beta_bar; };
  std::vector<Case> cases;
  cases.push_back({cyclic_group(4), constant_map(4, 0), constant_map(4, 0)});
  {
    std::vector<int> a3(6), b4(6);
    for (int x = 0; x < 6; ++x) { a3[x] = (3 * x) % 6; b4[x] = (4 * x) % 6; }
    cases.push_back({cyclic_group(6), sm(6, a3), sm(6, b4)});
  }
  auto quad_for = [](const Case& c) {
    const int n = c.G.order();
    MatchedSystem sys{c.G, c.G, constant_action_rows(n, c.alpha_bar.image),
                      constant_action_rows(n, c.beta_bar.image)};
    return SolutionQuadruple{sys, constant_theta_family(n, constant_map(n, 0)),
                             constant_theta_family(n, constant_map(n, 0))};
  };
  add(fix, "both instances are pentagon quadruples", [cases, quad_for] {
    for (const auto& c : cases)
      if (!check_pentagon_quadruple(quad_for(c)).holds) return false;
    return true;
  });
  add(fix, "r^n matches (1, bb^{n-1}(v) bb(u) ; aa^{n-1}(a) aa(b), 1) for n = 2..5",
      [cases, quad_for] {
        for (const auto& c : cases) {
          const PairMap r = build_ybe_from_pentagon_quadruple(quad_for(c));
          const int n = c.G.order();
          auto iterate = [&](const SelfMap& m, int x, int times) {
            for (int i = 0; i < times; ++i) x = m(x);
            return x;
          };
          for (int exp = 2; exp <= 5; ++exp) {
            const PairMap rn = power(r, exp);
            const bool ok = product_map_matches(rn, n, [&](int a, int u, int b, int v) {
              return std::array<int, 4>{
                  0, c.G.product(iterate(c.beta_bar, v, exp - 1), c.beta_bar(u)),
                  c.G.product(iterate(c.alpha_bar, a, exp - 1), c.alpha_bar(b)), 0};
            });
            if (!ok) return false;
          }
        }
        return true;
      });
  add(fix, "r^3 = r^2", [cases, quad_for] {
    for (const auto& c : cases) {
      const PairMap r = build_ybe_from_pentagon_quadruple(quad_for(c));
      if (!(power(r, 3) == power(r, 2))) return false;
    }
    return true;
  });
  add(fix, "unequal alpha rows break the conditions", [cases, quad_for] {
    SolutionQuadruple quad = quad_for(cases[0]);
    quad.system.alpha[1] = identity_map(4).image;
    return !check_pentagon_quadruple(quad).holds;
  });
  return fix;
}

Fixture fx_group_kernels() {
  Fixture fix;
  fix.id = "group-kernels";
  fix.note = "kernels of product-form pentagon solutions on cyclic groups";
  add(fix, "constant-identity family on Z_4 has the whole group as kernel", [] {
    const KernelReport rep = kernel(cyclic_group(4), constant_theta_family(4, constant_map(4, 0)));
    return rep.kernel == std::vector<int>{0, 1, 2, 3} && rep.is_subgroup && rep.is_normal;
  });
  add(fix, "identity family on Z_2 has the trivial kernel", [] {
    const KernelReport rep = kernel(cyclic_group(2), identity_theta(2));
    return rep.kernel == std::vector<int>{0} && rep.is_subgroup && rep.is_normal;
  });
  add(fix, "the projection endomorphism of Z_6 has kernel {0, 2, 4}", [] {
    std::vector<int> e3(6);
    for (int x = 0; x < 6; ++x) e3[x] = (3 * x) % 6;
    const KernelReport rep = kernel(cyclic_group(6), constant_theta_family(6, sm(6, e3)));
    return rep.kernel == std::vector<int>{0, 2, 4} && rep.is_subgroup && rep.is_normal;
  });
  add(fix, "non-groups are rejected", [] {
    try {
      kernel(left_zero(2), identity_theta(2));
    } catch (const PreconditionError& e) {
      return e.tag == std::string("group");
    }
    return false;
  });
  return fix;
}

Fixture fx_index_period() {
  Fixture fix;
  fix.id = "index-period";
  fix.note = "index/period profiles of the braid forms of two QYBE-compatible solutions";
  add(fix, "identity map: (0, 1)", [] {
    const PowerProfile p = power_profile(PairMap::identity(2));
    return p.index == 0 && p.period == 1;
  });
  add(fix, "2x2 band, s = (ab, b): r has (1, 2), s has (1, 1)", [] {
    const Semigroup band = rectangular_band(2, 2);
    const PairMap s = assemble_product_form(band, identity_theta(4));
    const PairMap r = compose_flip_left(s);
    const PowerProfile pr = power_profile(r), ps = power_profile(s);
    return pr.index == 1 && pr.period == 2 && ps.index == 1 && ps.period == 1;
  });
  add(fix, "Z_2, s = (ab, 0): r has (1, 1), s has (1, 1)", [] {
    const Semigroup g = cyclic_group(2);
    const PairMap s = assemble_product_form(g, constant_theta_family(2, constant_map(2, 0)));
    const PairMap r = compose_flip_left(s);
    const PowerProfile pr = power_profile(r), ps = power_profile(s);
    return pr.index == 1 && pr.period == 1 && ps.index == 1 && ps.period == 1;
  });
  add(fix, "degenerate left-zero case: r is the flip with (0, 2)", [] {
    const PairMap s = assemble_product_form(left_zero(2), identity_theta(2));
    const PairMap r = compose_flip_left(s);
    const PowerProfile p = power_profile(r);
    return r == PairMap::flip(2) && p.index == 0 && p.period == 2;
  });
  return fix;
}

Fixture fx_enumeration_right_zero() {
  Fixture fix;
  fix.id = "enumeration-right-zero";
  fix.note = "the only product-form pentagon solutions on a right-zero pair are "
             "(b, phi(b)) with phi idempotent";
  add(fix, "exactly the three expected solutions at order 2", [] {
    SearchSpec spec;
    spec.shape = SearchShape::ProductFormTheta;
    spec.target = TargetEquations::Pentagon;
    spec.mode = ResultMode::Collect;
    spec.carrier = right_zero(2);
    const EnumerationResult res = enumerate_solutions(spec);
    if (res.count != 3) return false;
    std::vector<PairMap> expected;
    for (const auto& phi : {identity_map(2), constant_map(2, 0), constant_map(2, 1)})
      expected.push_back(right_zero_solution(2, phi));
    std::sort(expected.begin(), expected.end());
    return res.solutions == expected;
  });
  return fix;
}

Fixture fx_enumeration_band_classification() {
  Fixture fix;
  fix.id = "enumeration-band-classification";
  fix.note = "QYBE-compatible product forms on bands are exactly the "
             "gamma-solutions";
  add(fix, "2x2 rectangular band agrees with the prediction", [] {
    return classify_pqybe_solutions(rectangular_band(2, 2)).agrees;
  });
  add(fix, "left-zero order 2 agrees with the prediction", [] {
    return classify_pqybe_solutions(left_zero(2)).agrees;
  });
  add(fix, "Z_2 is rejected: not in the variety", [] {
    try {
      classify_pqybe_solutions(cyclic_group(2));
    } catch (const PreconditionError& e) {
      return e.tag == std::string("variety-s");
    }
    return false;
  });
  return fix;
}

Fixture fx_lqn_braid_witness() {
  Fixture fix;
  fix.id = "lqn-braid-witness";
  fix.note = "a left quasi-normal carrier outside the variety where r = (b, ab) has "
             "r^5 = r^3 but some power fails the braid oracle";
  add(fix, "a witness of order at most 4 exists", [] {
    for (int order = 2; order <= 4; ++order)
      for (const Semigroup& sg : enumerate_semigroups(order)) {
        const PropertyReport p = classify(sg);
        if (!p.left_quasi_normal || p.variety_s) continue;
        const PairMap r = compose_flip_left(
            assemble_product_form(sg, identity_theta(sg.order())));
        if (!(power(r, 5) == power(r, 3))) continue;
        const bool all_powers_solve =
            verify_equation(power(r, 2), Equation::Braid).holds &&
            verify_equation(power(r, 3), Equation::Braid).holds &&
            verify_equation(power(r, 4), Equation::Braid).holds;
        if (!all_powers_solve) return true;
      }
    return false;
  });
  return fix;
}

Fixture fx_enumeration_full_map_2() {
  Fixture fix;
  fix.id = "enumeration-full-map-2";
  fix.note = "full map space on a bare pair, checked against the plain oracle";
  add(fix, "search count equals the direct oracle count", [] {
    SearchSpec spec;
    spec.shape = SearchShape::FullMap;
    spec.order = 2;
    const std::uint64_t searched = enumerate_solutions(spec).count;
    std::uint64_t direct = 0;
    for (int code = 0; code < 256; ++code) {
      int digits[4], c = code;
      for (int i = 0; i < 4; ++i) { digits[i] = c % 4; c /= 4; }
      std::vector<int> first(4), second(4);
      for (int i = 0; i < 4; ++i) { first[i] = digits[i] / 2; second[i] = digits[i] % 2; }
      if (verify_equation(PairMap::from_tables(2, first, second), Equation::Pentagon).holds)
        ++direct;
    }
    return searched == direct;
  });
  return fix;
}

using FixtureBuilder = Fixture (*)();

const std::vector<std::pair<std::string, FixtureBuilder>>& registry() {
  static const std::vector<std::pair<std::string, FixtureBuilder>> reg = {
      {"identity", fx_identity},
      {"singleton", fx_singleton},
      {"gamma-family", fx_gamma_family},
      {"constant-family", fx_constant_family},
      {"militaru", fx_militaru},
      {"inflation", fx_inflation},
      {"matched-gamma-delta", fx_matched_gamma_delta},
      {"matched-mod3", fx_matched_mod3},
      {"matched-3elt", fx_matched_3elt},
      {"monoid-quadruple", fx_monoid_quadruple},
      {"pqybe-left-identity", fx_pqybe_left_identity},
      {"left-quasi-normal", fx_left_quasi_normal},
      {"power-formula", fx_power_formula},
      {"gamma-power-degradation", fx_gamma_power_degradation},
      {"gamma-braid-powers", fx_gamma_braid_powers},
      {"bab-braid-powers", fx_bab_braid_powers},
      {"militaru-braid-powers", fx_militaru_braid_powers},
      {"rect-band-braid", fx_rect_band_braid},
      {"ybe-product-w-s", fx_ybe_product_w_s},
      {"ybe-right-zero-band", fx_ybe_right_zero_band},
      {"ybe-band-projection", fx_ybe_band_projection},
      {"ybe-groups", fx_ybe_groups},
      {"group-kernels", fx_group_kernels},
      {"index-period", fx_index_period},
      {"enumeration-right-zero", fx_enumeration_right_zero},
      {"enumeration-band-classification", fx_enumeration_band_classification},
      {"lqn-braid-witness", fx_lqn_braid_witness},
      {"enumeration-full-map-2", fx_enumeration_full_map_2},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& corpus_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, _] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

Fixture fixture(const std::string& id) {
  for (const auto& [fid, builder] : registry())
    if (fid == id) return builder();
  throw UnknownFixtureError("unknown fixture: " + id);
}

std::vector<ExpectationOutcome> run_fixture(const std::string& id) {
  const Fixture fix = fixture(id);
  std::vector<ExpectationOutcome> out;
  for (const Expectation& e : fix.expectations) {
    bool pass = false;
    try {
      pass = e.run();
    } catch (...) {
      pass = false;
    }
    out.push_back({fix.id, e.description, pass});
  }
  return out;
}

std::vector<ExpectationOutcome> run_all_fixtures() {
  std::vector<ExpectationOutcome> out;
  for (const std::string& id : corpus_ids()) {
    auto results = run_fixture(id);
    out.insert(out.end(), results.begin(), results.end());
  }
  return out;
}

}  // namespace ybpe
