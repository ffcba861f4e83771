#include <doctest.h>

#include <random>

#include "ybpe/matched.hpp"
#include "ybpe/named_solutions.hpp"

using namespace ybpe;

namespace {

ThetaFamily identity_theta(int n) {
  ThetaFamily t{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.table[x * n + y] = y;
  return t;
}

std::vector<std::vector<int>> identity_rows(int rows, int n) {
  return std::vector<std::vector<int>>(rows, identity_map(n).image);
}

MatchedSystem trivial_system(const Semigroup& S, const Semigroup& T) {
  return MatchedSystem{S, T, identity_rows(T.order(), S.order()),
                       identity_rows(S.order(), T.order())};
}

}  // namespace

TEST_CASE("identity actions give matched systems for any pair of carriers") {
  // (S1) with trivial actions asks exactly that products stay products.
  for (const Semigroup& S : {left_zero(2), cyclic_group(3), chain_semilattice(2)})
    for (const Semigroup& T : {right_zero(2), cyclic_group(2)}) {
      const MatchedSystem sys = trivial_system(S, T);
      CHECK(check_matched_semigroup(sys).holds);
      const Semigroup prod = build_matched_semigroup(sys);
      CHECK(prod.order() == S.order() * T.order());
      // the direct product table
      for (int a = 0; a < S.order(); ++a)
        for (int u = 0; u < T.order(); ++u)
          for (int b = 0; b < S.order(); ++b)
            for (int v = 0; v < T.order(); ++v)
              CHECK(prod.product(pair_index(a, u, T.order()), pair_index(b, v, T.order())) ==
                    pair_index(S.product(a, b), T.product(u, v), T.order()));
    }
}

TEST_CASE("zappa conditions") {
  SUBCASE("identity actions on monoids pass") {
    const MatchedSystem sys = trivial_system(cyclic_group(2), cyclic_group(2));
    CHECK(check_zappa(sys).holds);
    CHECK(check_matched_semigroup(sys).holds);
  }
  SUBCASE("zappa implies matched on randomized identity-or-endo actions") {
    std::mt19937 rng(99);
    const Semigroup S = chain_semilattice(2), T = chain_semilattice(2);
    const auto endos_s = idempotent_endomorphisms(S);
    const auto endos_t = idempotent_endomorphisms(T);
    std::uniform_int_distribution<int> ps(0, static_cast<int>(endos_s.size()) - 1);
    std::uniform_int_distribution<int> pt(0, static_cast<int>(endos_t.size()) - 1);
    int zappa_hits = 0;
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<std::vector<int>> alpha(T.order()), beta(S.order());
      for (auto& row : alpha) row = endos_s[ps(rng)].image;
      for (auto& row : beta) row = endos_t[pt(rng)].image;
      const MatchedSystem sys{S, T, alpha, beta};
      if (check_zappa(sys).holds) {
        ++zappa_hits;
        CHECK(check_matched_semigroup(sys).holds);
      }
    }
    CHECK(zappa_hits > 0);
  }
}

TEST_CASE("build_matched_semigroup enforces the conditions") {
  // break (S1): S = Z_2 with a constant alpha that is not an endomorphism row
  MatchedSystem sys = trivial_system(cyclic_group(2), cyclic_group(2));
  sys.alpha[0] = {1, 1};
  const Verdict v = check_matched_semigroup(sys);
  CHECK(!v.holds);
  CHECK_THROWS_AS(build_matched_semigroup(sys), PreconditionError);
}

TEST_CASE("matched quadruple of gamma-type solutions") {
  const Semigroup S = left_zero(2), T = right_zero(2);
  const SelfMap gamma = constant_map(2, 0), delta = constant_map(2, 1);
  const MatchedSystem sys{S, T, std::vector<std::vector<int>>(2, gamma.image),
                          std::vector<std::vector<int>>(2, delta.image)};
  const SolutionQuadruple quad{sys, constant_theta_family(2, gamma),
                               constant_theta_family(2, delta)};
  const QuadrupleReport rep = check_matched_quadruple(quad);
  CHECK(rep.verdict.holds);
  const PairMap sol = build_matched_solution(quad);
  CHECK(verify_equation(sol, Equation::Pentagon).holds);
}

TEST_CASE("soundness on randomized small systems: conditions imply the oracle") {
  std::mt19937 rng(2025);
  const std::vector<Semigroup> pool = {left_zero(2),  right_zero(2),
                                       cyclic_group(2), chain_semilattice(2),
                                       null_semigroup(2)};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  int holds_count = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Semigroup& S = pool[pick(rng)];
    const Semigroup& T = pool[pick(rng)];
    auto random_rows = [&](int rows, int n) {
      std::vector<std::vector<int>> out(rows, std::vector<int>(n));
      std::uniform_int_distribution<int> elem(0, n - 1);
      for (auto& row : out) {
        if (coin(rng)) {
          row = identity_map(n).image;
        } else {
          for (int& v : row) v = elem(rng);
        }
      }
      return out;
    };
    MatchedSystem sys{S, T, random_rows(T.order(), S.order()),
                      random_rows(S.order(), T.order())};
    ThetaFamily theta_s{S.order(), std::vector<int>(S.order() * S.order())};
    ThetaFamily theta_t{T.order(), std::vector<int>(T.order() * T.order())};
    std::uniform_int_distribution<int> es(0, S.order() - 1), et(0, T.order() - 1);
    for (int& v : theta_s.table) v = es(rng);
    for (int& v : theta_t.table) v = et(rng);
    const SolutionQuadruple quad{sys, theta_s, theta_t};
    if (full_quadruple_verdict(quad).holds) {
      ++holds_count;
      CHECK(verify_equation(build_matched_solution(quad), Equation::Pentagon).holds);
    }
  }
  CHECK(holds_count > 0);  // the sample must actually exercise the builder
}

TEST_CASE("embeddings on the direct product") {
  const MatchedSystem sys = trivial_system(cyclic_group(2), cyclic_group(3));
  const EmbeddingReport rep = check_embeddings(sys);
  CHECK(rep.verdict.holds);
  CHECK(rep.e_s == 0);
  CHECK(rep.e_t == 0);
  CHECK(rep.s_copy_isomorphic);
  CHECK(rep.t_copy_isomorphic);
}

TEST_CASE("embeddings need one-sided identities") {
  // left-zero has no left identity for T's role (needs a left identity in T)
  const MatchedSystem sys{cyclic_group(2), left_zero(2),
                          identity_rows(2, 2), identity_rows(2, 2)};
  CHECK_THROWS_AS(check_embeddings(sys), PreconditionError);
}

TEST_CASE("monoid quadruple precondition") {
  const Semigroup S = left_zero(2);  // not a monoid
  const MatchedSystem sys = trivial_system(S, cyclic_group(2));
  const SolutionQuadruple quad{sys, identity_theta(2), identity_theta(2)};
  CHECK_THROWS_AS(check_monoid_quadruple(quad), PreconditionError);
}

TEST_CASE("the shortcut form of (M2) is reported when it applies") {
  // identity actions between two monoids, constant-identity theta families:
  // S has a right identity and (S5)/(S6) hold, so the shortcut is in scope.
  const Semigroup S = chain_semilattice(3), T = chain_semilattice(2);
  const MatchedSystem sys = trivial_system(S, T);
  const SolutionQuadruple quad{sys, constant_theta_family(3, constant_map(3, 0)),
                               identity_theta(2)};
  const QuadrupleReport rep = check_matched_quadruple(quad);
  CHECK(rep.verdict.holds);
  CHECK(rep.m2prime_applicable);
  CHECK(rep.m2prime_holds);
  CHECK(rep.m2prime_matches_m2);
}

TEST_CASE("whenever the shortcut form of (M2) applies it agrees with (M2)") {
  std::mt19937 rng(4096);
  const std::vector<Semigroup> pool = {chain_semilattice(2), chain_semilattice(3),
                                       cyclic_group(2), left_zero(2), right_zero(2)};
  int applicable = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Semigroup& S = pool[rng() % pool.size()];
    const Semigroup& T = pool[rng() % pool.size()];
    const auto endos_s = idempotent_endomorphisms(S);
    const auto endos_t = idempotent_endomorphisms(T);
    std::vector<std::vector<int>> alpha, beta;
    for (int u = 0; u < T.order(); ++u)
      alpha.push_back(rng() % 2 ? identity_map(S.order()).image
                                : endos_s[rng() % endos_s.size()].image);
    for (int a = 0; a < S.order(); ++a)
      beta.push_back(rng() % 2 ? identity_map(T.order()).image
                               : endos_t[rng() % endos_t.size()].image);
    MatchedSystem sys{S, T, alpha, beta};
    const SolutionQuadruple quad{
        sys,
        rng() % 2 ? constant_theta_family(S.order(), endos_s[rng() % endos_s.size()])
                  : identity_theta(S.order()),
        rng() % 2 ? constant_theta_family(T.order(), endos_t[rng() % endos_t.size()])
                  : identity_theta(T.order())};
    try {
      const QuadrupleReport rep = check_matched_quadruple(quad);
      if (rep.m2prime_applicable) {
        ++applicable;
        CHECK(rep.m2prime_matches_m2);
      }
    } catch (const PreconditionError&) {
    }
  }
  CHECK(applicable > 0);
}

TEST_CASE("linearization of the product carrier is a bijection") {
  for (int ns = 1; ns <= 5; ++ns)
    for (int nt = 1; nt <= 5; ++nt) {
      std::vector<bool> seen(ns * nt, false);
      for (int a = 0; a < ns; ++a)
        for (int u = 0; u < nt; ++u) {
          const int idx = pair_index(a, u, nt);
          REQUIRE(idx >= 0);
          REQUIRE(idx < ns * nt);
          CHECK(!seen[idx]);
          seen[idx] = true;
          CHECK(pair_unindex(idx, nt) == std::pair<int, int>{a, u});
        }
    }
}
