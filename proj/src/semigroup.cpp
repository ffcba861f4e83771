#include "ybpe/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace ybpe {

Semigroup Semigroup::from_flat(int order, std::vector<int> flat) {
  if (order < 1) throw BadParamsError("order must be at least 1");
  if (static_cast<int>(flat.size()) != order * order)
    throw BadParamsError("table must have order*order entries");
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int v = flat[x * order + y];
      if (v < 0 || v >= order)
        throw OutOfRangeError(x, y, "table entry out of range at (" +
                                        std::to_string(x) + "," + std::to_string(y) + ")");
    }
  // First violating triple in lexicographic order.
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      for (int z = 0; z < order; ++z)
        if (flat[flat[x * order + y] * order + z] != flat[x * order + flat[y * order + z]])
          throw NotAssociativeError(x, y, z);
  return Semigroup(order, std::move(flat));
}

Semigroup Semigroup::from_table(int order, const std::vector<std::vector<int>>& table) {
  if (static_cast<int>(table.size()) != order)
    throw BadParamsError("table must have exactly `order` rows");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order)
      throw BadParamsError("table rows must have exactly `order` entries");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat(order, std::move(flat));
}

int Semigroup::element_power(int x, int k) const {
  int acc = x;
  for (int i = 1; i < k; ++i) acc = product(acc, x);
  return acc;
}

std::vector<std::vector<int>> Semigroup::rows() const {
  std::vector<std::vector<int>> out(order_);
  for (int x = 0; x < order_; ++x)
    out[x].assign(table_.begin() + x * order_, table_.begin() + (x + 1) * order_);
  return out;
}

SelfMap identity_map(int n) {
  SelfMap m;
  m.domain_order = n;
  m.image.resize(n);
  std::iota(m.image.begin(), m.image.end(), 0);
  m.is_idempotent = true;
  return m;
}

SelfMap constant_map(int n, int value) {
  SelfMap m;
  m.domain_order = n;
  m.image.assign(n, value);
  return m;
}

bool map_is_idempotent(const SelfMap& m) {
  for (int x = 0; x < m.domain_order; ++x)
    if (m.image[m.image[x]] != m.image[x]) return false;
  return true;
}

bool map_is_endomorphism(const Semigroup& sg, const SelfMap& m) {
  const int n = sg.order();
  if (m.domain_order != n) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m.image[sg.product(x, y)] != sg.product(m.image[x], m.image[y])) return false;
  return true;
}

PropertyReport classify(const Semigroup& sg) {
  const int n = sg.order();
  PropertyReport rep;

  rep.idempotent = true;
  for (int x = 0; x < n; ++x)
    if (sg.product(x, x) != x) { rep.idempotent = false; break; }

  for (int e = 0; e < n; ++e) {
    bool left = true, right = true;
    for (int x = 0; x < n; ++x) {
      if (sg.product(e, x) != x) left = false;
      if (sg.product(x, e) != x) right = false;
    }
    if (left) rep.left_identities.push_back(e);
    if (right) rep.right_identities.push_back(e);
  }
  int identity = -1;
  for (int e : rep.left_identities)
    if (std::find(rep.right_identities.begin(), rep.right_identities.end(), e) !=
        rep.right_identities.end()) {
      identity = e;
      break;
    }
  rep.monoid = identity >= 0;

  rep.group = rep.monoid;
  if (rep.group) {
    // Cancellative monoid on a finite carrier: rows and columns are permutations.
    for (int x = 0; x < n && rep.group; ++x) {
      std::vector<bool> row_seen(n, false), col_seen(n, false);
      for (int y = 0; y < n; ++y) {
        row_seen[sg.product(x, y)] = true;
        col_seen[sg.product(y, x)] = true;
      }
      for (int y = 0; y < n; ++y)
        if (!row_seen[y] || !col_seen[y]) { rep.group = false; break; }
    }
  }

  std::vector<bool> in_image(n, false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) in_image[sg.product(x, y)] = true;
  rep.s2_equals_s = std::all_of(in_image.begin(), in_image.end(), [](bool b) { return b; });

  rep.variety_s = true;
  for (int a = 0; a < n && rep.variety_s; ++a)
    for (int b = 0; b < n && rep.variety_s; ++b)
      for (int c = 0; c < n && rep.variety_s; ++c) {
        const int abc = sg.product(a, b, c);
        for (int d = 0; d < n; ++d)
          if (sg.product(sg.product(a, d), sg.product(b, c)) != abc) {
            rep.variety_s = false;
            break;
          }
      }

  rep.variety_w = true;
  for (int a = 0; a < n && rep.variety_w; ++a)
    if (sg.element_power(a, 3) != sg.element_power(a, 2)) rep.variety_w = false;
  for (int a = 0; a < n && rep.variety_w; ++a)
    for (int b = 0; b < n && rep.variety_w; ++b)
      for (int c = 0; c < n && rep.variety_w; ++c) {
        const int abc = sg.product(a, b, c);
        for (int d = 0; d < n; ++d)
          if (sg.product(sg.product(sg.product(a, b), d), sg.product(b, c)) != abc) {
            rep.variety_w = false;
            break;
          }
      }

  rep.left_quasi_normal = true;
  for (int a = 0; a < n && rep.left_quasi_normal; ++a)
    for (int b = 0; b < n && rep.left_quasi_normal; ++b)
      for (int c = 0; c < n; ++c)
        if (sg.product(a, b, c) != sg.product(sg.product(a, c), sg.product(b, c))) {
          rep.left_quasi_normal = false;
          break;
        }

  rep.rectangular_band = rep.idempotent;
  for (int a = 0; a < n && rep.rectangular_band; ++a)
    for (int b = 0; b < n && rep.rectangular_band; ++b)
      for (int c = 0; c < n; ++c)
        if (sg.product(a, b, c) != sg.product(a, c)) {
          rep.rectangular_band = false;
          break;
        }

  rep.left_zero = true;
  rep.right_zero = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (sg.product(x, y) != x) rep.left_zero = false;
      if (sg.product(x, y) != y) rep.right_zero = false;
    }

  return rep;
}

std::vector<SelfMap> idempotent_endomorphisms(const Semigroup& sg) {
  const int n = sg.order();
  std::vector<SelfMap> out;
  std::vector<int> image(n, 0);
  // Odometer over all n^n self-maps, lexicographic in the image array.
  while (true) {
    SelfMap m{n, image, std::nullopt, std::nullopt};
    if (map_is_idempotent(m) && map_is_endomorphism(sg, m)) {
      m.is_idempotent = true;
      m.is_endomorphism = true;
      out.push_back(std::move(m));
    }
    int pos = n - 1;
    while (pos >= 0 && image[pos] == n - 1) image[pos--] = 0;
    if (pos < 0) break;
    ++image[pos];
  }
  return out;
}

std::vector<int> product_image(const Semigroup& sg) {
  const int n = sg.order();
  std::vector<bool> seen(n, false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) seen[sg.product(x, y)] = true;
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

SelfMap inflation_extension_map(const Semigroup& T, const std::vector<int>& phi) {
  const int nt = T.order();
  const int n = nt + static_cast<int>(phi.size());
  SelfMap bar;
  bar.domain_order = n;
  bar.image.resize(n);
  for (int a = 0; a < nt; ++a) bar.image[a] = a;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] < 0 || phi[i] >= nt)
      throw OutOfRangeError(static_cast<int>(i), phi[i], "phi must map into T");
    bar.image[nt + static_cast<int>(i)] = phi[i];
  }
  bar.is_idempotent = true;  // phi lands in T where bar is the identity
  return bar;
}

Semigroup build_inflation(const Semigroup& T, const std::vector<int>& phi) {
  const SelfMap bar = inflation_extension_map(T, phi);
  const int n = bar.domain_order;
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[a * n + b] = T.product(bar(a), bar(b));
  return Semigroup::from_flat(n, std::move(flat));
}

Semigroup left_zero(int n) {
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) flat[x * n + y] = x;
  return Semigroup::from_flat(n, std::move(flat));
}

Semigroup right_zero(int n) {
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) flat[x * n + y] = y;
  return Semigroup::from_flat(n, std::move(flat));
}

Semigroup null_semigroup(int n) {
  return Semigroup::from_flat(n, std::vector<int>(static_cast<std::size_t>(n) * n, 0));
}

Semigroup rectangular_band(int m, int k) {
  if (m < 1 || k < 1) throw BadParamsError("rectangular band needs positive dimensions");
  const int n = m * k;
  // element i*k + j represents the pair (i, j); (i,j)(p,q) = (i,q)
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) flat[x * n + y] = (x / k) * k + (y % k);
  return Semigroup::from_flat(n, std::move(flat));
}

Semigroup cyclic_group(int k) {
  if (k < 1) throw BadParamsError("cyclic group needs positive order");
  std::vector<int> flat(static_cast<std::size_t>(k) * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) flat[x * k + y] = (x + y) % k;
  return Semigroup::from_flat(k, std::move(flat));
}

Semigroup chain_semilattice(int n) {
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) flat[x * n + y] = std::max(x, y);
  return Semigroup::from_flat(n, std::move(flat));
}

Semigroup adjoin_zero(const Semigroup& sg) {
  const int n = sg.order() + 1;
  std::vector<int> flat(static_cast<std::size_t>(n) * n, 0);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) flat[x * n + y] = sg.product(x - 1, y - 1) + 1;
  return Semigroup::from_flat(n, std::move(flat));
}

Semigroup left_projection(const SelfMap& f) {
  if (!map_is_idempotent(f))
    throw BadParamsError("left projection carrier needs an idempotent map");
  const int n = f.domain_order;
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) flat[x * n + y] = f.image[x];
  return Semigroup::from_flat(n, std::move(flat));
}

Semigroup free_variety_s(int generators) {
  if (generators < 1) throw BadParamsError("need at least one generator");
  const int g = generators;
  // Normal forms: letters (g), words of length two (g^2) and
  // (first, penultimate, last) triples (g^3) for everything longer.
  const int n = g + g * g + g * g * g;
  const int pair_base = g;
  const int triple_base = g + g * g;
  auto pair_of = [&](int a, int b) { return pair_base + a * g + b; };
  auto triple_of = [&](int f, int p, int l) { return triple_base + (f * g + p) * g + l; };
  // Decompose an element into (first letter, penultimate letter or -1, last letter).
  auto parts = [&](int e, int& first, int& penult, int& last) {
    if (e < pair_base) {
      first = e; penult = -1; last = e;
    } else if (e < triple_base) {
      int w = e - pair_base;
      first = w / g; penult = w / g; last = w % g;
    } else {
      int w = e - triple_base;
      first = w / (g * g); penult = (w / g) % g; last = w % g;
    }
  };
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xf, xp, xl, yf, yp, yl;
      parts(x, xf, xp, xl);
      parts(y, yf, yp, yl);
      (void)xp;
      (void)yf;
      int prod;
      if (x < pair_base && y < pair_base) {
        prod = pair_of(x, y);
      } else if (y < pair_base) {
        // concatenation ends ...(last of x)(y)
        prod = triple_of(xf, xl, y);
      } else {
        // y has length >= 2: its penultimate and last survive
        prod = triple_of(xf, yp, yl);
      }
      flat[x * n + y] = prod;
    }
  return Semigroup::from_flat(n, std::move(flat));
}

Semigroup standard_semigroup(const std::string& kind, const std::vector<int>& params) {
  auto arg = [&](std::size_t i) -> int {
    if (i >= params.size()) throw BadParamsError("missing parameter for kind " + kind);
    return params[i];
  };
  if (kind == "left-zero") return left_zero(arg(0));
  if (kind == "right-zero") return right_zero(arg(0));
  if (kind == "null") return null_semigroup(arg(0));
  if (kind == "rectangular-band") return rectangular_band(arg(0), arg(1));
  if (kind == "cyclic-group") return cyclic_group(arg(0));
  if (kind == "chain-semilattice") return chain_semilattice(arg(0));
  if (kind == "free-variety-s") return free_variety_s(arg(0));
  // params are the image array of the idempotent projection
  if (kind == "left-projection")
    return left_projection(SelfMap{static_cast<int>(params.size()), params,
                                   std::nullopt, std::nullopt});
  // the absorbing element sits at index 0, a left-zero pair above it
  if (kind == "left-zero-with-zero") return adjoin_zero(left_zero(arg(0)));
  throw BadParamsError("unknown semigroup kind: " + kind);
}

}  // namespace ybpe
