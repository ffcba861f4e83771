#include "ybpe/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

namespace ybpe {

namespace {

// ---- raw map space ---------------------------------------------------

// Early-exit equation checks on flat output tables.
bool pentagon_holds(const int* F, const int* G, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int ab = F[x * n + y], t1 = G[x * n + y];
      for (int z = 0; z < n; ++z) {
        const int c = F[ab * n + z], d = G[ab * n + z];
        const int e = F[t1 * n + d], f = G[t1 * n + d];
        const int g = F[y * n + z], h = G[y * n + z];
        if (c != F[x * n + g] || e != G[x * n + g] || f != h) return false;
      }
    }
  return true;
}

bool qybe_holds(const int* F, const int* G, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int ab = F[x * n + y], t1 = G[x * n + y];
      for (int z = 0; z < n; ++z) {
        const int c = F[ab * n + z], d = G[ab * n + z];
        const int e = F[t1 * n + d], f = G[t1 * n + d];
        const int g = F[y * n + z], h = G[y * n + z];
        const int i = F[x * n + h], j = G[x * n + h];
        const int k = F[i * n + g], l = G[i * n + g];
        if (c != k || e != l || f != j) return false;
      }
    }
  return true;
}

bool full_map_target_ok(const int* F, const int* G, int n, TargetEquations target) {
  switch (target) {
    case TargetEquations::Pentagon: return pentagon_holds(F, G, n);
    case TargetEquations::Qybe: return qybe_holds(F, G, n);
    case TargetEquations::Both: return pentagon_holds(F, G, n) && qybe_holds(F, G, n);
  }
  return false;
}

struct ChunkResult {
  std::uint64_t count = 0;
  std::uint64_t candidates = 0;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> found;  // (first, second)
};

EnumerationResult run_full_map(const SearchSpec& spec) {
  const int n = spec.order;
  if (n < 1) throw BadParamsError("full-map search needs a positive carrier size");
  if (n > 3 && !spec.force)
    throw SpecTooLargeError("full-map search beyond order 3 needs the force flag");

  const int cells = n * n;
  const int values = n * n;  // packed (first, second) per cell
  // Fixed-depth split of the candidate space into chunks.
  const int prefix_len = (n >= 2) ? 2 : 0;
  std::uint64_t chunk_count = 1;
  for (int i = 0; i < prefix_len; ++i) chunk_count *= values;

  const bool collecting = spec.mode == ResultMode::Collect;
  std::vector<ChunkResult> chunks(chunk_count);
  std::atomic<std::uint64_t> next_chunk{0};

  auto worker_fn = [&]() {
    std::vector<int> digits(cells), F(cells), S(cells);
    while (true) {
      const std::uint64_t chunk = next_chunk.fetch_add(1);
      if (chunk >= chunk_count) return;
      ChunkResult& out = chunks[chunk];
      // Seed the prefix digits from the chunk index (most significant first).
      std::uint64_t rest = chunk;
      for (int i = prefix_len - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(rest % values);
        rest /= values;
      }
      for (int i = prefix_len; i < cells; ++i) digits[i] = 0;
      for (int i = 0; i < cells; ++i) {
        F[i] = digits[i] / n;
        S[i] = digits[i] % n;
      }
      while (true) {
        ++out.candidates;
        if (full_map_target_ok(F.data(), S.data(), n, spec.target)) {
          ++out.count;
          if (collecting && out.found.size() < spec.collect_limit)
            out.found.emplace_back(F, S);
        }
        // Odometer over the suffix digits.
        int pos = cells - 1;
        while (pos >= prefix_len && digits[pos] == values - 1) {
          digits[pos] = 0;
          F[pos] = 0;
          S[pos] = 0;
          --pos;
        }
        if (pos < prefix_len) break;
        ++digits[pos];
        F[pos] = digits[pos] / n;
        S[pos] = digits[pos] % n;
      }
    }
  };

  const int workers = std::max(1, spec.workers);
  const auto start = std::chrono::steady_clock::now();
  if (workers == 1) {
    worker_fn();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn);
    for (auto& t : pool) t.join();
  }
  const auto stop = std::chrono::steady_clock::now();

  EnumerationResult result;
  result.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
  for (std::uint64_t c = 0; c < chunk_count; ++c) {
    result.count += chunks[c].count;
    result.candidates += chunks[c].candidates;
    if (collecting)
      for (auto& [f, s] : chunks[c].found) {
        if (result.solutions.size() >= spec.collect_limit) break;
        result.solutions.push_back(PairMap::from_tables(n, f, s));
      }
  }
  std::sort(result.solutions.begin(), result.solutions.end());
  return result;
}

// ---- pruned theta search ----------------------------------------------

// Per-triple scalar consequences of the target oracles on the product
// form s(x,y) = (xy, theta_x(y)); each is checked as soon as every cell
// it reads is assigned.
enum class InstanceKind : std::uint8_t { Pe2, Pe3, Q1, Q2, Q3 };

struct Instance {
  InstanceKind kind;
  std::uint8_t a, b, c;
};

class ThetaSearch {
 public:
  ThetaSearch(const Semigroup& sg, TargetEquations target)
      : sg_(sg), n_(sg.order()), theta_(static_cast<std::size_t>(n_) * n_, -1) {
    const bool pentagon =
        target == TargetEquations::Pentagon || target == TargetEquations::Both;
    const bool qybe = target == TargetEquations::Qybe || target == TargetEquations::Both;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) {
          const auto A = static_cast<std::uint8_t>(a);
          const auto B = static_cast<std::uint8_t>(b);
          const auto C = static_cast<std::uint8_t>(c);
          if (pentagon) {
            instances_.push_back({InstanceKind::Pe2, A, B, C});
            instances_.push_back({InstanceKind::Pe3, A, B, C});
          }
          if (qybe) {
            instances_.push_back({InstanceKind::Q1, A, B, C});
            instances_.push_back({InstanceKind::Q2, A, B, C});
            instances_.push_back({InstanceKind::Q3, A, B, C});
          }
        }
    done_.assign(instances_.size(), 0);
    trail_.resize(theta_.size());
  }

  // Assigns cell `depth` to `value`; false if some decided instance fails.
  bool push(int depth, int value) {
    theta_[depth] = value;
    ++nodes_;
    for (std::size_t i = 0; i < instances_.size(); ++i) {
      if (done_[i]) continue;
      const int e = eval(instances_[i]);
      if (e == 0) return false;  // caller pops; partial trail is undone there
      if (e == 1) {
        done_[i] = 1;
        trail_[depth].push_back(static_cast<int>(i));
      }
    }
    return true;
  }

  void pop(int depth) {
    for (int i : trail_[depth]) done_[i] = 0;
    trail_[depth].clear();
    theta_[depth] = -1;
  }

  const std::vector<int>& theta() const { return theta_; }
  std::uint64_t nodes() const { return nodes_; }
  int cells() const { return static_cast<int>(theta_.size()); }

 private:
  int cell(int x, int y) const { return theta_[x * n_ + y]; }

  // -1 unknown (cells missing), 0 violated, 1 satisfied
  int eval(const Instance& ins) const {
    const int a = ins.a, b = ins.b, c = ins.c;
    const int ab = sg_.product(a, b), bc = sg_.product(b, c);
    switch (ins.kind) {
      case InstanceKind::Pe2: {
        const int p = cell(a, b);
        if (p < 0) return -1;
        const int q = cell(ab, c);
        if (q < 0) return -1;
        const int r = cell(a, bc);
        if (r < 0) return -1;
        return sg_.product(p, q) == r ? 1 : 0;
      }
      case InstanceKind::Pe3: {
        const int p = cell(a, b);
        if (p < 0) return -1;
        const int q = cell(ab, c);
        if (q < 0) return -1;
        const int lhs = cell(p, q);
        if (lhs < 0) return -1;
        const int rhs = cell(b, c);
        if (rhs < 0) return -1;
        return lhs == rhs ? 1 : 0;
      }
      case InstanceKind::Q1: {
        const int tbc = cell(b, c);
        if (tbc < 0) return -1;
        return sg_.product(ab, c) == sg_.product(sg_.product(a, tbc), bc) ? 1 : 0;
      }
      case InstanceKind::Q2: {
        const int p = cell(a, b);
        if (p < 0) return -1;
        const int q = cell(ab, c);
        if (q < 0) return -1;
        const int tbc = cell(b, c);
        if (tbc < 0) return -1;
        const int rhs = cell(sg_.product(a, tbc), bc);
        if (rhs < 0) return -1;
        return sg_.product(p, q) == rhs ? 1 : 0;
      }
      case InstanceKind::Q3: {
        const int p = cell(a, b);
        if (p < 0) return -1;
        const int q = cell(ab, c);
        if (q < 0) return -1;
        const int lhs = cell(p, q);
        if (lhs < 0) return -1;
        const int tbc = cell(b, c);
        if (tbc < 0) return -1;
        const int rhs = cell(a, tbc);
        if (rhs < 0) return -1;
        return lhs == rhs ? 1 : 0;
      }
    }
    return -1;
  }

  const Semigroup& sg_;
  int n_;
  std::vector<int> theta_;
  std::vector<Instance> instances_;
  std::vector<char> done_;
  std::vector<std::vector<int>> trail_;
  std::uint64_t nodes_ = 0;
};

struct ThetaChunkResult {
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  std::vector<std::vector<int>> found;  // theta tables
};

void theta_dfs(ThetaSearch& search, int depth, const Semigroup& sg,
               TargetEquations target, ThetaChunkResult& out) {
  const int n = sg.order();
  if (depth == search.cells()) {
    // Leaf: every instance is decided; re-verify against the oracles anyway.
    ThetaFamily theta{n, search.theta()};
    const PairMap map = assemble_product_form(sg, theta);
    const bool pentagon_target =
        target == TargetEquations::Pentagon || target == TargetEquations::Both;
    const bool qybe_target =
        target == TargetEquations::Qybe || target == TargetEquations::Both;
    if (pentagon_target && !verify_equation(map, Equation::Pentagon).holds) return;
    if (qybe_target && !verify_equation(map, Equation::Qybe).holds) return;
    ++out.count;
    out.found.push_back(search.theta());
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (search.push(depth, v)) theta_dfs(search, depth + 1, sg, target, out);
    search.pop(depth);
  }
}

EnumerationResult run_theta_search(const SearchSpec& spec) {
  if (!spec.carrier) throw BadParamsError("product-form search needs a carrier semigroup");
  const Semigroup& sg = *spec.carrier;
  const int n = sg.order();
  if (n > 4 && !spec.force)
    throw SpecTooLargeError("product-form search beyond order 4 needs the force flag");

  const int cells = n * n;
  const int workers = std::max(1, spec.workers);
  // Split the assignment tree at a fixed depth into independent subtrees.
  int prefix_len = 0;
  if (n >= 2) {
    prefix_len = static_cast<int>(
        std::ceil(std::log(8.0 * workers) / std::log(static_cast<double>(n))));
    prefix_len = std::clamp(prefix_len, 0, cells);
  }
  std::uint64_t chunk_count = 1;
  for (int i = 0; i < prefix_len; ++i) chunk_count *= n;

  std::vector<ThetaChunkResult> chunks(chunk_count);
  std::atomic<std::uint64_t> next_chunk{0};

  auto worker_fn = [&]() {
    while (true) {
      const std::uint64_t chunk = next_chunk.fetch_add(1);
      if (chunk >= chunk_count) return;
      ThetaSearch search(sg, spec.target);
      // Seed the prefix assignment; skip the subtree on violation.
      std::uint64_t rest = chunk;
      std::vector<int> prefix(prefix_len);
      for (int i = prefix_len - 1; i >= 0; --i) {
        prefix[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      bool viable = true;
      int seeded = 0;
      for (; seeded < prefix_len; ++seeded)
        if (!search.push(seeded, prefix[seeded])) {
          viable = false;
          ++seeded;
          break;
        }
      if (viable) theta_dfs(search, prefix_len, sg, spec.target, chunks[chunk]);
      chunks[chunk].nodes = search.nodes();
      for (int i = seeded - 1; i >= 0; --i) search.pop(i);
    }
  };

  const auto start = std::chrono::steady_clock::now();
  if (workers == 1) {
    worker_fn();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn);
    for (auto& t : pool) t.join();
  }
  const auto stop = std::chrono::steady_clock::now();

  EnumerationResult result;
  result.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
  const bool collecting = spec.mode == ResultMode::Collect;
  for (std::uint64_t c = 0; c < chunk_count; ++c) {
    result.count += chunks[c].count;
    result.candidates += chunks[c].nodes;
    if (collecting)
      for (auto& theta_table : chunks[c].found) {
        if (result.solutions.size() >= spec.collect_limit) break;
        result.solutions.push_back(
            assemble_product_form(sg, ThetaFamily{n, theta_table}));
      }
  }
  std::sort(result.solutions.begin(), result.solutions.end());
  return result;
}

}  // namespace

EnumerationResult enumerate_solutions(const SearchSpec& spec) {
  if (spec.shape == SearchShape::FullMap) return run_full_map(spec);
  return run_theta_search(spec);
}

ClassificationReport classify_pqybe_solutions(const Semigroup& sg) {
  const PropertyReport props = classify(sg);
  if (!props.variety_s) throw PreconditionError("variety-s");
  if (!props.s2_equals_s) throw PreconditionError("s2");

  SearchSpec spec;
  spec.shape = SearchShape::ProductFormTheta;
  spec.target = TargetEquations::Both;
  spec.mode = ResultMode::Collect;
  spec.collect_limit = std::numeric_limits<std::size_t>::max();
  spec.carrier = sg;

  ClassificationReport rep;
  rep.enumerated = enumerate_solutions(spec).solutions;
  for (const SelfMap& gamma : idempotent_endomorphisms(sg))
    rep.predicted.push_back(
        assemble_product_form(sg, constant_theta_family(sg.order(), gamma)));
  std::sort(rep.predicted.begin(), rep.predicted.end());

  std::set_difference(rep.enumerated.begin(), rep.enumerated.end(),
                      rep.predicted.begin(), rep.predicted.end(),
                      std::back_inserter(rep.only_enumerated));
  std::set_difference(rep.predicted.begin(), rep.predicted.end(),
                      rep.enumerated.begin(), rep.enumerated.end(),
                      std::back_inserter(rep.only_predicted));
  rep.agrees = rep.only_enumerated.empty() && rep.only_predicted.empty();
  return rep;
}

namespace {

// Lazy associativity instance: (xy)z = x(yz) once all four cells exist.
struct AssocSearch {
  int n;
  std::vector<int> table;  // -1 unassigned

  int cell(int x, int y) const { return table[x * n + y]; }

  bool consistent_so_far() const {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int xy = cell(x, y);
        if (xy < 0) continue;
        for (int z = 0; z < n; ++z) {
          const int yz = cell(y, z);
          if (yz < 0) continue;
          const int left = cell(xy, z), right = cell(x, yz);
          if (left < 0 || right < 0) continue;
          if (left != right) return false;
        }
      }
    return true;
  }
};

void assoc_dfs(AssocSearch& s, int depth, std::vector<Semigroup>& out) {
  if (depth == s.n * s.n) {
    out.push_back(Semigroup::from_flat(s.n, s.table));
    return;
  }
  for (int v = 0; v < s.n; ++v) {
    s.table[depth] = v;
    if (s.consistent_so_far()) assoc_dfs(s, depth + 1, out);
    s.table[depth] = -1;
  }
}

}  // namespace

std::vector<Semigroup> enumerate_semigroups(int order) {
  if (order < 1) throw BadParamsError("order must be positive");
  if (order > 4) throw SpecTooLargeError("semigroup enumeration is limited to order 4");
  AssocSearch s;
  s.n = order;
  s.table.assign(static_cast<std::size_t>(order) * order, -1);
  std::vector<Semigroup> out;
  assoc_dfs(s, 0, out);
  return out;
}

}  // namespace ybpe
