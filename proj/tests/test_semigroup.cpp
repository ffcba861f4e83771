#include <doctest.h>

#include <random>

#include "ybpe/semigroup.hpp"

using namespace ybpe;

TEST_CASE("from_table accepts the small known carriers") {
  CHECK(Semigroup::from_table(1, {{0}}).order() == 1);
  CHECK(Semigroup::from_table(2, {{0, 0}, {1, 1}}).order() == 2);  // left-zero
  // two-element semilattice with 0 as identity
  const Semigroup t = Semigroup::from_table(2, {{0, 1}, {1, 1}});
  CHECK(classify(t).monoid);
}

TEST_CASE("from_table reports the first violating triple") {
  try {
    Semigroup::from_table(2, {{1, 0}, {0, 0}});
    FAIL("expected NotAssociativeError");
  } catch (const NotAssociativeError& e) {
    CHECK(e.x == 0);
    CHECK(e.y == 0);
    CHECK(e.z == 1);  // (00)1 = 1*1 = 0, 0(01) = 0*0 = 1
  }
  CHECK_THROWS_AS(Semigroup::from_table(2, {{0, 2}, {0, 0}}), OutOfRangeError);
  CHECK_THROWS_AS(Semigroup::from_table(0, {}), BadParamsError);
}

TEST_CASE("construction accepts a random table iff no violating triple exists") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> dist(0, 2);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<int> flat(9);
    for (int& v : flat) v = dist(rng);
    bool violating = false;
    for (int x = 0; x < 3 && !violating; ++x)
      for (int y = 0; y < 3 && !violating; ++y)
        for (int z = 0; z < 3; ++z)
          if (flat[flat[x * 3 + y] * 3 + z] != flat[x * 3 + flat[y * 3 + z]]) {
            violating = true;
            break;
          }
    bool accepted = true;
    try {
      Semigroup::from_flat(3, flat);
    } catch (const NotAssociativeError&) {
      accepted = false;
    }
    CHECK(accepted == !violating);
  }
}

TEST_CASE("classify on the stock carriers") {
  const PropertyReport lz = classify(left_zero(2));
  CHECK(lz.left_zero);
  CHECK(lz.idempotent);
  CHECK(lz.variety_s);
  CHECK(lz.variety_w);
  CHECK(lz.rectangular_band);
  CHECK(lz.s2_equals_s);
  CHECK(lz.left_identities.empty());
  CHECK(lz.right_identities == std::vector<int>{0, 1});

  const PropertyReport rz = classify(right_zero(2));
  CHECK(rz.right_zero);
  CHECK(rz.variety_s);
  CHECK(rz.rectangular_band);
  CHECK(rz.left_identities == std::vector<int>{0, 1});

  const PropertyReport z2 = classify(cyclic_group(2));
  CHECK(z2.group);
  CHECK(z2.monoid);
  CHECK(z2.s2_equals_s);
  CHECK(!z2.variety_s);
  // witness for abc != adbc in Z_2: a=b=c=0, d=1
  const Semigroup g = cyclic_group(2);
  CHECK(g.product(0, 0, 0) != g.product(g.product(0, 1), g.product(0, 0)));

  const PropertyReport band = classify(rectangular_band(2, 2));
  CHECK(band.rectangular_band);
  CHECK(band.idempotent);
  CHECK(band.variety_s);
  CHECK(!band.monoid);
}

TEST_CASE("classify flag implications hold on every order-3 table sample") {
  // rectangular band => idempotent and variety S; variety S => left quasi-normal
  const std::vector<Semigroup> sample = {
      left_zero(3), right_zero(3), null_semigroup(3), chain_semilattice(3),
      cyclic_group(3), adjoin_zero(left_zero(2)), rectangular_band(3, 1),
      left_projection(SelfMap{3, {0, 1, 0}, std::nullopt, std::nullopt})};
  for (const Semigroup& sg : sample) {
    const PropertyReport p = classify(sg);
    if (p.rectangular_band) {
      CHECK(p.idempotent);
      CHECK(p.variety_s);
    }
    if (p.variety_s) CHECK(p.left_quasi_normal);
  }
}

TEST_CASE("idempotent endomorphisms of the named carriers") {
  CHECK(idempotent_endomorphisms(left_zero(1)).size() == 1);

  const auto lz = idempotent_endomorphisms(left_zero(2));
  REQUIRE(lz.size() == 3);  // const0, const1, identity in lexicographic order
  CHECK(lz[0].image == std::vector<int>{0, 0});
  CHECK(lz[1].image == std::vector<int>{0, 1});
  CHECK(lz[2].image == std::vector<int>{1, 1});

  const auto z4 = idempotent_endomorphisms(cyclic_group(4));
  REQUIRE(z4.size() == 2);
  CHECK(z4[0].image == std::vector<int>{0, 0, 0, 0});
  CHECK(z4[1].image == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("idempotent endomorphisms: exhaustive cross-check at order <= 3") {
  for (const Semigroup& sg : {left_zero(3), cyclic_group(3), chain_semilattice(3)}) {
    const auto listed = idempotent_endomorphisms(sg);
    int direct = 0;
    std::vector<int> image(3, 0);
    while (true) {
      SelfMap m{3, image, std::nullopt, std::nullopt};
      if (map_is_idempotent(m) && map_is_endomorphism(sg, m)) ++direct;
      int pos = 2;
      while (pos >= 0 && image[pos] == 2) image[pos--] = 0;
      if (pos < 0) break;
      ++image[pos];
    }
    CHECK(static_cast<int>(listed.size()) == direct);
    for (const SelfMap& m : listed) {
      CHECK(map_is_idempotent(m));
      CHECK(map_is_endomorphism(sg, m));
    }
  }
}

TEST_CASE("inflation") {
  SUBCASE("empty extension is the base") {
    CHECK(build_inflation(cyclic_group(3), {}) == cyclic_group(3));
  }
  SUBCASE("singleton base") {
    const Semigroup s = build_inflation(left_zero(1), {0, 0});
    CHECK(s.order() == 3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(s.product(a, b) == 0);
  }
  SUBCASE("phi out of range is rejected") {
    CHECK_THROWS_AS(build_inflation(cyclic_group(2), {5}), OutOfRangeError);
  }
  SUBCASE("inflations always validate") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const Semigroup base = (trial % 2) ? cyclic_group(2 + trial % 3) : left_zero(2);
      std::vector<int> phi(1 + trial % 3);
      for (int& v : phi) v = static_cast<int>(rng() % base.order());
      CHECK_NOTHROW(build_inflation(base, phi));
    }
  }
}

TEST_CASE("standard carriers have the advertised shapes") {
  const Semigroup band = rectangular_band(2, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(band.product(i, j) == (i / 2) * 2 + (j % 2));

  const Semigroup s3 = adjoin_zero(left_zero(2));
  CHECK(s3.product(0, 2) == 0);
  CHECK(s3.product(2, 0) == 0);
  CHECK(s3.product(1, 2) == 1);
  CHECK(s3.product(2, 1) == 2);

  const Semigroup chain = chain_semilattice(3);
  CHECK(chain.product(0, 2) == 2);
  CHECK(chain.product(1, 2) == 2);
  CHECK(classify(chain).monoid);

  CHECK(standard_semigroup("left-zero", {2}) == left_zero(2));
  CHECK(standard_semigroup("rectangular-band", {2, 3}) == rectangular_band(2, 3));
  CHECK(standard_semigroup("left-zero-with-zero", {2}) == adjoin_zero(left_zero(2)));
  CHECK(standard_semigroup("left-projection", {0, 1, 0}) ==
        left_projection(SelfMap{3, {0, 1, 0}, std::nullopt, std::nullopt}));
  CHECK_THROWS_AS(standard_semigroup("nonsense", {1}), BadParamsError);
  CHECK_THROWS_AS(standard_semigroup("left-zero", {}), BadParamsError);
}

TEST_CASE("the free [abc = adbc] carrier") {
  const Semigroup f2 = free_variety_s(2);
  CHECK(f2.order() == 14);
  const PropertyReport p = classify(f2);
  CHECK(p.variety_s);
  CHECK(!p.idempotent);
  CHECK(!p.s2_equals_s);
  // triple products remember first, penultimate and last letters:
  // x*(y*x) and x*(x*x) differ
  const int x = 0, y = 1;
  CHECK(f2.product(x, f2.product(y, x)) != f2.product(x, f2.product(x, x)));
}
