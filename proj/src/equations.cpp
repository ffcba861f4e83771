#include "ybpe/equations.hpp"

namespace ybpe {

PairMap PairMap::from_tables(int order, std::vector<int> first, std::vector<int> second) {
  if (order < 1) throw BadParamsError("order must be at least 1");
  const std::size_t cells = static_cast<std::size_t>(order) * order;
  if (first.size() != cells || second.size() != cells)
    throw BadParamsError("output tables must have order*order entries");
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      if (first[x * order + y] < 0 || first[x * order + y] >= order)
        throw OutOfRangeError(x, y, "first table entry out of range");
      if (second[x * order + y] < 0 || second[x * order + y] >= order)
        throw OutOfRangeError(x, y, "second table entry out of range");
    }
  return PairMap(order, std::move(first), std::move(second));
}

PairMap PairMap::identity(int n) {
  std::vector<int> first(static_cast<std::size_t>(n) * n), second(first.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      first[x * n + y] = x;
      second[x * n + y] = y;
    }
  return PairMap(n, std::move(first), std::move(second));
}

PairMap PairMap::flip(int n) {
  std::vector<int> first(static_cast<std::size_t>(n) * n), second(first.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      first[x * n + y] = y;
      second[x * n + y] = x;
    }
  return PairMap(n, std::move(first), std::move(second));
}

bool PairMap::operator<(const PairMap& o) const {
  if (order_ != o.order_) return order_ < o.order_;
  if (first_ != o.first_) return first_ < o.first_;
  return second_ < o.second_;
}

const char* equation_name(Equation eq) {
  switch (eq) {
    case Equation::Pentagon: return "pentagon";
    case Equation::ReversedPentagon: return "reversed-pentagon";
    case Equation::Qybe: return "qybe";
    case Equation::Braid: return "braid";
  }
  return "?";
}

std::optional<Equation> equation_from_name(const std::string& name) {
  if (name == "pentagon") return Equation::Pentagon;
  if (name == "reversed-pentagon" || name == "reversed_pentagon")
    return Equation::ReversedPentagon;
  if (name == "qybe") return Equation::Qybe;
  if (name == "braid") return Equation::Braid;
  return std::nullopt;
}

std::array<int, 3> apply_leg(const PairMap& m, int leg, std::array<int, 3> t) {
  switch (leg) {
    case 12: {
      auto [a, b] = m.apply(t[0], t[1]);
      return {a, b, t[2]};
    }
    case 23: {
      auto [a, b] = m.apply(t[1], t[2]);
      return {t[0], a, b};
    }
    case 13: {
      auto [a, b] = m.apply(t[0], t[2]);
      return {a, t[1], b};
    }
    default:
      throw BadParamsError("leg must be 12, 13 or 23");
  }
}

namespace {

// Application order: first listed factor acts first.
struct LegSequences {
  std::vector<int> lhs, rhs;
};

LegSequences sequences_for(Equation eq) {
  switch (eq) {
    case Equation::Pentagon:          // s23 s13 s12 = s12 s23
      return {{12, 13, 23}, {23, 12}};
    case Equation::ReversedPentagon:  // t12 t13 t23 = t23 t12
      return {{23, 13, 12}, {12, 23}};
    case Equation::Qybe:              // s23 s13 s12 = s12 s13 s23
      return {{12, 13, 23}, {23, 13, 12}};
    case Equation::Braid:             // r12 r23 r12 = r23 r12 r23
      return {{12, 23, 12}, {23, 12, 23}};
  }
  return {};
}

}  // namespace

Verdict verify_equation(const PairMap& map, Equation eq) {
  const int n = map.order();
  const LegSequences seq = sequences_for(eq);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        std::array<int, 3> lhs{x, y, z}, rhs{x, y, z};
        for (int leg : seq.lhs) lhs = apply_leg(map, leg, lhs);
        for (int leg : seq.rhs) rhs = apply_leg(map, leg, rhs);
        if (lhs != rhs) return Verdict::fail(equation_name(eq), {x, y, z});
      }
  return Verdict::ok();
}

PairMap conjugate_flip(const PairMap& map) {
  const int n = map.order();
  std::vector<int> first(static_cast<std::size_t>(n) * n), second(first.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      // (tau s tau)(x,y) = tau(s(y,x))
      first[x * n + y] = map.second(y, x);
      second[x * n + y] = map.first(y, x);
    }
  return PairMap::from_tables(n, std::move(first), std::move(second));
}

PairMap compose_flip_left(const PairMap& map) {
  const int n = map.order();
  std::vector<int> first(static_cast<std::size_t>(n) * n), second(first.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      first[x * n + y] = map.second(x, y);
      second[x * n + y] = map.first(x, y);
    }
  return PairMap::from_tables(n, std::move(first), std::move(second));
}

PairMap transform(const PairMap& map, Transform kind) {
  return kind == Transform::ConjugateFlip ? conjugate_flip(map) : compose_flip_left(map);
}

PairMap compose(const PairMap& f, const PairMap& g) {
  if (f.order() != g.order()) throw BadParamsError("composing maps of different orders");
  const int n = f.order();
  std::vector<int> first(static_cast<std::size_t>(n) * n), second(first.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = g.apply(x, y);
      first[x * n + y] = f.first(a, b);
      second[x * n + y] = f.second(a, b);
    }
  return PairMap::from_tables(n, std::move(first), std::move(second));
}

PairMap power(const PairMap& map, int exponent) {
  if (exponent < 1) throw BadParamsError("power exponent must be at least 1");
  PairMap acc = map;
  for (int i = 1; i < exponent; ++i) acc = compose(map, acc);
  return acc;
}

}  // namespace ybpe
