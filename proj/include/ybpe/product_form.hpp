// Product-form solutions s(x,y) = (xy, theta_x(y)): extraction from raw
// pair maps, and the condition systems equivalent to the pentagon and
// quantum Yang-Baxter oracles for this shape.

#ifndef YBPE_PRODUCT_FORM_HPP_
#define YBPE_PRODUCT_FORM_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "ybpe/equations.hpp"
#include "ybpe/semigroup.hpp"

namespace ybpe {

// Per-element self-maps theta_x, stored as one n x n table.
struct ThetaFamily {
  int order = 0;
  std::vector<int> table;  // table[x*n+y] = theta_x(y)

  int theta(int x, int y) const { return table[x * order + y]; }
  SelfMap row(int x) const;
  bool operator==(const ThetaFamily& o) const {
    return order == o.order && table == o.table;
  }
};

ThetaFamily theta_from_rows(const std::vector<std::vector<int>>& rows);
// Every theta_x equal to the same self-map.
ThetaFamily constant_theta_family(int order, const SelfMap& m);

// s(x,y) = (xy, theta_x(y)) as a PairMap.
PairMap assemble_product_form(const Semigroup& sg, const ThetaFamily& theta);

// If the first output table is an associative operation, returns the
// semigroup it defines together with theta read off the second table.
std::optional<std::pair<Semigroup, ThetaFamily>> decompose_product_form(const PairMap& map);

// Pentagon conditions for the product form, checked over all triples:
//   (pe2)  theta_x(y) theta_{xy}(z) = theta_x(yz)
//   (pe3)  theta_{theta_x(y)} theta_{xy} = theta_y
// Holds iff the assembled map passes the pentagon oracle.
Verdict check_pe_conditions(const Semigroup& sg, const ThetaFamily& theta);

// Structure facts reported alongside the QYBE condition verdict.
struct PqybeReport {
  Verdict verdict;
  // The following are filled in only when the verdict holds.
  bool each_theta_idempotent = false;
  bool agree_on_image = false;     // all theta_a coincide on S^2
  bool law_theta_ab = false;       // theta_{ab} = theta_b
  bool image_is_whole = false;     // S^2 = S
  std::optional<SelfMap> common_theta;  // the common idempotent endomorphism when S^2 = S
};

// QYBE conditions on top of a pentagon solution:
//   (Y1)  abc = a theta_b(c) bc
//   (Y2)  theta_a theta_b = theta_b
//   (Y3)  theta_a(bc) = theta_{theta_b(c)}(bc)
// Throws PreconditionError{"pe"} if (sg, theta) fails the pentagon
// conditions.  Holds iff the assembled map passes the QYBE oracle.
PqybeReport check_pqybe_conditions(const Semigroup& sg, const ThetaFamily& theta);

// Non-throwing conveniences used by searches and tests.
bool is_pe(const Semigroup& sg, const ThetaFamily& theta);
bool is_pqybe(const Semigroup& sg, const ThetaFamily& theta);

}  // namespace ybpe

#endif  // YBPE_PRODUCT_FORM_HPP_
