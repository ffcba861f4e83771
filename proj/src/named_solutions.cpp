#include "ybpe/named_solutions.hpp"

namespace ybpe {

PairMap gamma_solution(const Semigroup& sg, const SelfMap& gamma) {
  if (gamma.domain_order != sg.order()) throw BadParamsError("gamma order mismatch");
  if (!map_is_idempotent(gamma)) throw BadParamsError("gamma must be idempotent");
  if (!map_is_endomorphism(sg, gamma)) throw BadParamsError("gamma must be an endomorphism");
  return assemble_product_form(sg, constant_theta_family(sg.order(), gamma));
}

PairMap constant_solution(const Semigroup& sg, int e) {
  if (e < 0 || e >= sg.order()) throw BadParamsError("element out of range");
  if (sg.product(e, e) != e) throw BadParamsError("element must be idempotent");
  return assemble_product_form(sg, constant_theta_family(sg.order(), constant_map(sg.order(), e)));
}

PairMap militaru_solution(int order, const SelfMap& f, const SelfMap& g) {
  if (f.domain_order != order || g.domain_order != order)
    throw BadParamsError("map order mismatch");
  if (!map_is_idempotent(f)) throw BadParamsError("f must be idempotent");
  if (!map_is_idempotent(g)) throw BadParamsError("g must be idempotent");
  for (int x = 0; x < order; ++x)
    if (f.image[g.image[x]] != g.image[f.image[x]]) throw BadParamsError("fg != gf");
  std::vector<int> first(static_cast<std::size_t>(order) * order), second(first.size());
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      first[x * order + y] = f.image[x];
      second[x * order + y] = g.image[y];
    }
  return PairMap::from_tables(order, std::move(first), std::move(second));
}

PairMap right_zero_solution(int order, const SelfMap& phi) {
  if (phi.domain_order != order) throw BadParamsError("phi order mismatch");
  if (!map_is_idempotent(phi)) throw BadParamsError("phi must be idempotent");
  std::vector<int> first(static_cast<std::size_t>(order) * order), second(first.size());
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      first[a * order + b] = b;
      second[a * order + b] = phi.image[b];
    }
  return PairMap::from_tables(order, std::move(first), std::move(second));
}

PairMap inflate_solution(const Semigroup& T, const ThetaFamily& thetaT,
                         const std::vector<int>& phi) {
  if (thetaT.order != T.order()) throw BadParamsError("theta order mismatch");
  const Semigroup inflated = build_inflation(T, phi);
  const SelfMap bar = inflation_extension_map(T, phi);
  const int n = inflated.order();
  std::vector<int> first(static_cast<std::size_t>(n) * n), second(first.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      first[a * n + b] = inflated.product(a, b);
      second[a * n + b] = thetaT.theta(bar(a), bar(b));
    }
  return PairMap::from_tables(n, std::move(first), std::move(second));
}

PairMap build_named_solution(const NamedSolutionSpec& spec) {
  auto self_map = [](int order, const std::vector<int>& image) {
    if (static_cast<int>(image.size()) != order)
      throw BadParamsError("self-map must have one entry per element");
    for (int v : image)
      if (v < 0 || v >= order) throw BadParamsError("self-map entry out of range");
    return SelfMap{order, image, std::nullopt, std::nullopt};
  };
  if (spec.kind == "gamma") {
    if (!spec.semigroup) throw BadParamsError("gamma solution needs a semigroup");
    return gamma_solution(*spec.semigroup, self_map(spec.semigroup->order(), spec.map_a));
  }
  if (spec.kind == "constant") {
    if (!spec.semigroup) throw BadParamsError("constant solution needs a semigroup");
    return constant_solution(*spec.semigroup, spec.element);
  }
  if (spec.kind == "militaru") {
    return militaru_solution(spec.order, self_map(spec.order, spec.map_a),
                             self_map(spec.order, spec.map_b));
  }
  if (spec.kind == "right-zero") {
    return right_zero_solution(spec.order, self_map(spec.order, spec.map_a));
  }
  if (spec.kind == "inflation") {
    if (!spec.semigroup || !spec.theta)
      throw BadParamsError("inflation needs the base semigroup and theta");
    return inflate_solution(*spec.semigroup, *spec.theta, spec.map_a);
  }
  throw BadParamsError("unknown solution kind: " + spec.kind);
}

}  // namespace ybpe
