// Exhaustive search for solutions on small carriers: the raw map space
// streamed through the oracles, and a pruned depth-first search over
// theta tables for product-form solutions.  Deterministic results
// independent of the worker count.

#ifndef YBPE_ENUMERATION_HPP_
#define YBPE_ENUMERATION_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ybpe/equations.hpp"
#include "ybpe/product_form.hpp"
#include "ybpe/semigroup.hpp"

namespace ybpe {

enum class SearchShape { FullMap, ProductFormTheta };
enum class TargetEquations { Pentagon, Qybe, Both };
enum class ResultMode { Count, Collect };

struct SearchSpec {
  SearchShape shape = SearchShape::ProductFormTheta;
  TargetEquations target = TargetEquations::Pentagon;
  ResultMode mode = ResultMode::Count;
  std::size_t collect_limit = 100000;
  int workers = 1;
  bool force = false;  // override the size guards
  // FullMap: bare carrier size.  ProductFormTheta: the carrier semigroup.
  int order = 0;
  std::optional<Semigroup> carrier;
};

struct EnumerationResult {
  std::uint64_t count = 0;
  // Collect mode: solutions in lexicographic order of the concatenated
  // (first, second) tables.
  std::vector<PairMap> solutions;
  std::uint64_t candidates = 0;  // leaves examined (FullMap) / nodes (theta search)
  double elapsed_seconds = 0.0;
};

// FullMap is guarded at order <= 3 ((n^2)^(n^2) candidates) and
// ProductFormTheta at order <= 4 (n^(n^2) theta tables, pruned); larger
// specs throw SpecTooLargeError unless force is set.  Counts and collected
// lists are identical for any worker count.
EnumerationResult enumerate_solutions(const SearchSpec& spec);

struct ClassificationReport {
  bool agrees = false;
  std::vector<PairMap> enumerated;      // product-form P-QYBE solutions found
  std::vector<PairMap> predicted;       // gamma-solutions over idempotent endomorphisms
  std::vector<PairMap> only_enumerated; // symmetric difference
  std::vector<PairMap> only_predicted;
};

// For a carrier in the variety [abc = adbc] with S^2 = S: enumerates all
// product-form solutions passing both oracles and compares the set with
// {(ab, gamma(b)) : gamma idempotent endomorphism}.  Throws
// PreconditionError{"variety-s"} or {"s2"}.
ClassificationReport classify_pqybe_solutions(const Semigroup& sg);

// All associative tables of the given order, by pruned depth-first search,
// in lexicographic table order.  Practical for order <= 4.
std::vector<Semigroup> enumerate_semigroups(int order);

}  // namespace ybpe

#endif  // YBPE_ENUMERATION_HPP_
