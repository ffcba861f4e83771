// Finite semigroups as dense Cayley tables over {0..n-1}, plus the
// structural predicates and standard carriers used by the solution engine.

#ifndef YBPE_SEMIGROUP_HPP_
#define YBPE_SEMIGROUP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ybpe/errors.hpp"
#include "ybpe/verdict.hpp"

namespace ybpe {

// A finite semigroup on {0..n-1}.  Construction validates associativity;
// instances are immutable afterwards and safe to share across threads.
class Semigroup {
 public:
  // Validates entry ranges and associativity; throws OutOfRangeError or
  // NotAssociativeError (first violating triple in lexicographic order).
  static Semigroup from_table(int order, const std::vector<std::vector<int>>& table);
  static Semigroup from_flat(int order, std::vector<int> flat);

  int order() const { return order_; }
  int product(int x, int y) const { return table_[x * order_ + y]; }
  int product(int x, int y, int z) const { return product(product(x, y), z); }
  // x^k in the semigroup, k >= 1.
  int element_power(int x, int k) const;

  const std::vector<int>& flat_table() const { return table_; }
  std::vector<std::vector<int>> rows() const;

  bool operator==(const Semigroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  Semigroup(int order, std::vector<int> flat)
      : order_(order), table_(std::move(flat)) {}
  int order_;
  std::vector<int> table_;  // row-major, table_[x*n+y] = x*y
};

// A self-map of {0..n-1}.  The optional flags cache properties that were
// established when the map was produced; they are never guessed.
struct SelfMap {
  int domain_order = 0;
  std::vector<int> image;
  std::optional<bool> is_idempotent;
  std::optional<bool> is_endomorphism;

  int operator()(int x) const { return image[x]; }
  bool operator==(const SelfMap& o) const {
    return domain_order == o.domain_order && image == o.image;
  }
};

SelfMap identity_map(int n);
SelfMap constant_map(int n, int value);

bool map_is_idempotent(const SelfMap& m);                       // m(m(x)) = m(x)
bool map_is_endomorphism(const Semigroup& sg, const SelfMap& m);  // m(xy) = m(x)m(y)

// Structural flags computed by direct quantifier elimination over all
// tuples (triples, quadruples where the law demands it).
struct PropertyReport {
  bool idempotent = false;            // x*x = x for all x
  std::vector<int> left_identities;   // e with e*x = x for all x
  std::vector<int> right_identities;  // e with x*e = x for all x
  bool monoid = false;                // two-sided identity exists
  bool group = false;
  bool s2_equals_s = false;           // the image of the product is everything
  bool variety_s = false;             // abc = adbc for all a,b,c,d
  bool variety_w = false;             // abc = abdbc for all a,b,c,d, and a^3 = a^2
  bool left_quasi_normal = false;     // abc = acbc for all a,b,c
  bool rectangular_band = false;      // idempotent and abc = ac
  bool left_zero = false;             // xy = x
  bool right_zero = false;            // xy = y
};

PropertyReport classify(const Semigroup& sg);

// All self-maps m with m∘m = m and m(xy) = m(x)m(y), in lexicographic
// order of their image arrays.  Cost n^n; meant for small carriers.
std::vector<SelfMap> idempotent_endomorphisms(const Semigroup& sg);

// Image of the product map, as a sorted list of elements.
std::vector<int> product_image(const Semigroup& sg);

// Inflation of T: carrier T ⊔ X with T first (indices 0..|T|-1), X after;
// phi maps X into T and a*b = phi_bar(a)*phi_bar(b).  phi is given as a
// vector of length |X| with entries in [0,|T|).
Semigroup build_inflation(const Semigroup& T, const std::vector<int>& phi);
// phi_bar as a self-map of the inflated carrier.
SelfMap inflation_extension_map(const Semigroup& T, const std::vector<int>& phi);

// Standard carriers.
Semigroup left_zero(int n);                 // xy = x
Semigroup right_zero(int n);                // xy = y
Semigroup null_semigroup(int n);            // xy = 0
Semigroup rectangular_band(int m, int k);   // pairs (i,j), (i,j)(p,q) = (i,q)
Semigroup cyclic_group(int k);              // Z_k, identity 0
Semigroup chain_semilattice(int n);         // xy = max(x,y), identity 0
Semigroup adjoin_zero(const Semigroup& sg); // new absorbing element at index 0
Semigroup left_projection(const SelfMap& f);  // xy = f(x), f idempotent
// Free semigroup on `generators` letters in the variety [abc = adbc]:
// words of length <= 2 plus (first, penultimate, last) triples.
Semigroup free_variety_s(int generators);

// Dispatcher used by the CLI and the corpus; kind is one of
// "left-zero", "right-zero", "null", "rectangular-band", "cyclic-group",
// "chain-semilattice", "free-variety-s"; params as each builder expects.
Semigroup standard_semigroup(const std::string& kind, const std::vector<int>& params);

}  // namespace ybpe

#endif  // YBPE_SEMIGROUP_HPP_
