#include "ybpe/product_form.hpp"

#include <algorithm>

namespace ybpe {

SelfMap ThetaFamily::row(int x) const {
  SelfMap m;
  m.domain_order = order;
  m.image.assign(table.begin() + x * order, table.begin() + (x + 1) * order);
  return m;
}

ThetaFamily theta_from_rows(const std::vector<std::vector<int>>& rows) {
  ThetaFamily t;
  t.order = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != t.order)
      throw BadParamsError("theta rows must be square");
    for (int v : row)
      if (v < 0 || v >= t.order) throw BadParamsError("theta entry out of range");
    t.table.insert(t.table.end(), row.begin(), row.end());
  }
  return t;
}

ThetaFamily constant_theta_family(int order, const SelfMap& m) {
  if (m.domain_order != order) throw BadParamsError("self-map order mismatch");
  ThetaFamily t;
  t.order = order;
  t.table.reserve(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    t.table.insert(t.table.end(), m.image.begin(), m.image.end());
  return t;
}

PairMap assemble_product_form(const Semigroup& sg, const ThetaFamily& theta) {
  const int n = sg.order();
  if (theta.order != n) throw BadParamsError("theta order must match the carrier");
  std::vector<int> first(static_cast<std::size_t>(n) * n), second(first.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      first[x * n + y] = sg.product(x, y);
      second[x * n + y] = theta.theta(x, y);
    }
  return PairMap::from_tables(n, std::move(first), std::move(second));
}

std::optional<std::pair<Semigroup, ThetaFamily>> decompose_product_form(const PairMap& map) {
  const int n = map.order();
  std::vector<int> flat = map.first_table();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (flat[flat[x * n + y] * n + z] != flat[x * n + flat[y * n + z]])
          return std::nullopt;
  Semigroup sg = Semigroup::from_flat(n, std::move(flat));
  ThetaFamily theta;
  theta.order = n;
  theta.table = map.second_table();
  return std::make_pair(std::move(sg), std::move(theta));
}

Verdict check_pe_conditions(const Semigroup& sg, const ThetaFamily& theta) {
  const int n = sg.order();
  if (theta.order != n) throw BadParamsError("theta order must match the carrier");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (sg.product(theta.theta(x, y), theta.theta(sg.product(x, y), z)) !=
            theta.theta(x, sg.product(y, z)))
          return Verdict::fail("pe2", {x, y, z});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (theta.theta(theta.theta(x, y), theta.theta(sg.product(x, y), z)) !=
            theta.theta(y, z))
          return Verdict::fail("pe3", {x, y, z});
  return Verdict::ok();
}

PqybeReport check_pqybe_conditions(const Semigroup& sg, const ThetaFamily& theta) {
  const Verdict pe = check_pe_conditions(sg, theta);
  if (!pe) throw PreconditionError("pe", pe.counterexample);

  const int n = sg.order();
  PqybeReport rep;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (sg.product(a, b, c) !=
            sg.product(sg.product(sg.product(a, theta.theta(b, c)), b), c)) {
          rep.verdict = Verdict::fail("Y1", {a, b, c});
          return rep;
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int y = 0; y < n; ++y)
        if (theta.theta(a, theta.theta(b, y)) != theta.theta(b, y)) {
          rep.verdict = Verdict::fail("Y2", {a, b, y});
          return rep;
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int bc = sg.product(b, c);
        if (theta.theta(a, bc) != theta.theta(theta.theta(b, c), bc)) {
          rep.verdict = Verdict::fail("Y3", {a, b, c});
          return rep;
        }
      }
  rep.verdict = Verdict::ok();

  rep.each_theta_idempotent = true;
  for (int a = 0; a < n && rep.each_theta_idempotent; ++a)
    for (int y = 0; y < n; ++y)
      if (theta.theta(a, theta.theta(a, y)) != theta.theta(a, y)) {
        rep.each_theta_idempotent = false;
        break;
      }

  const std::vector<int> image = product_image(sg);
  rep.agree_on_image = true;
  for (int w : image)
    for (int a = 1; a < n; ++a)
      if (theta.theta(a, w) != theta.theta(0, w)) {
        rep.agree_on_image = false;
        break;
      }

  rep.law_theta_ab = true;
  for (int a = 0; a < n && rep.law_theta_ab; ++a)
    for (int b = 0; b < n && rep.law_theta_ab; ++b)
      for (int y = 0; y < n; ++y)
        if (theta.theta(sg.product(a, b), y) != theta.theta(b, y)) {
          rep.law_theta_ab = false;
          break;
        }

  rep.image_is_whole = static_cast<int>(image.size()) == n;
  if (rep.image_is_whole && rep.agree_on_image) {
    SelfMap common = theta.row(0);
    common.is_idempotent = map_is_idempotent(common);
    common.is_endomorphism = map_is_endomorphism(sg, common);
    rep.common_theta = std::move(common);
  }
  return rep;
}

bool is_pe(const Semigroup& sg, const ThetaFamily& theta) {
  return check_pe_conditions(sg, theta).holds;
}

bool is_pqybe(const Semigroup& sg, const ThetaFamily& theta) {
  if (!is_pe(sg, theta)) return false;
  return check_pqybe_conditions(sg, theta).verdict.holds;
}

}  // namespace ybpe
