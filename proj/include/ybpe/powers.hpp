// Power analysis of solutions: index/period profiles, the closed form of
// iterated product-form solutions, the r^5 = r^3 theorem for carriers in
// the variety [abc = adbc], and kernels of solutions on groups.

#ifndef YBPE_POWERS_HPP_
#define YBPE_POWERS_HPP_

#include <vector>

#include "ybpe/equations.hpp"
#include "ybpe/product_form.hpp"

namespace ybpe {

struct PowerVerdicts {
  bool pentagon = false;
  bool qybe = false;
  bool braid = false;
};

// Minimal (index, period) of the sequence f^0 = id, f^1, f^2, ...:
// index is the least j such that f^j recurs later, period the least k >= 1
// with f^{index+k} = f^{index}.  power_verdicts[j-1] covers f^j for
// j = 1..index+period.
struct PowerProfile {
  int index = 0;
  int period = 1;
  std::vector<PowerVerdicts> power_verdicts;
};

// Thrown when no repeat shows up within `cap` powers; carries the powers
// computed so far (f^1..f^cap).
class CapExceededError : public Error {
 public:
  std::vector<PairMap> powers_computed;
  explicit CapExceededError(std::vector<PairMap> powers)
      : Error("no repeated power within cap"), powers_computed(std::move(powers)) {}
};

PowerProfile power_profile(const PairMap& map, int cap = 64);

// Compares power(s, n) for s(a,b) = (ab, theta_a(b)) against the closed
// form (ab theta_a(b)^{n-1}, theta_a(b)), n >= 2; on idempotent carriers
// also asserts s^3 = s^2.  Requires (sg, theta) to pass the QYBE
// conditions (throws PreconditionError{"pqybe"} otherwise).
Verdict verify_power_formula(const Semigroup& sg, const ThetaFamily& theta, int n);

struct PowerTheoremReport {
  Verdict verdict;  // overall: everything below that applies
  bool r5_equals_r3 = false;
  bool braid_r2 = false, braid_r3 = false, braid_r4 = false;
  bool closed_form_r2 = false, closed_form_r3 = false;
  bool closed_form_r4 = false, closed_form_r5 = false;
  bool carrier_idempotent = false;
  bool r4_equals_r2 = false;  // checked only when the carrier is idempotent
};

// For r = tau s with s a QYBE-compatible product-form solution on a
// carrier in the variety [abc = adbc]: asserts r^5 = r^3 pointwise, that
// r^2, r^3, r^4 pass the braid oracle, and that r^2..r^5 match their
// closed forms in terms of theta restricted to S^2.  On idempotent
// carriers additionally asserts r^4 = r^2.
// Throws PreconditionError with tag "product-form", "pqybe", "variety-s"
// or "theta-bar" when the respective requirement fails.
PowerTheoremReport verify_power_theorem(const PairMap& r);

struct KernelReport {
  std::vector<int> kernel;  // {a : theta_1(a) = 1}, sorted
  bool is_subgroup = false;
  bool is_normal = false;
};

// Kernel of a product-form pentagon solution on a group: the preimage of
// the identity under theta_1.  Subgroup closure and normality are checked
// directly, never assumed.  Throws PreconditionError{"group"} when the
// carrier is not a group and PreconditionError{"pe"} when (sg, theta)
// fails the pentagon conditions.
KernelReport kernel(const Semigroup& sg, const ThetaFamily& theta);

bool is_group(const Semigroup& sg);
// Index of the two-sided identity, or -1.
int identity_element(const Semigroup& sg);

}  // namespace ybpe

#endif  // YBPE_POWERS_HPP_
