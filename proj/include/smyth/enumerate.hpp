#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "smyth/error.hpp"
#include "smyth/point_set.hpp"
#include "smyth/poset.hpp"

namespace smyth {

/// Calls `f(antichain)` for every antichain of `p`, the empty one first.
///
/// In a proper preorder only the least index of each equivalence class may be
/// picked, so every up-set is produced by exactly one antichain. `f` returns
/// false to stop early.
template <class F>
void for_each_antichain(const Preorder& p, F&& f) {
  const auto n = p.size();
  PointSet reps(n);
  for (std::size_t x = 0; x < n; ++x)
    if (p.is_class_representative(x)) reps.insert(x);

  bool stop = false;
  PointSet chosen(n);
  auto rec = [&](auto&& self, const PointSet& candidates) -> void {
    if (stop) return;
    if (!f(chosen)) {
      stop = true;
      return;
    }
    candidates.for_each([&](std::size_t i) {
      if (stop) return;
      PointSet rest = candidates - (p.up(i) | p.down(i));
      for (auto j = rest.first(); j && *j < i; j = rest.next(*j + 1)) rest.erase(*j);
      chosen.insert(i);
      self(self, rest);
      chosen.erase(i);
    });
  };
  rec(rec, reps);
}

/// Every up-set of `p` (including the empty one) in canonical order.
inline std::vector<PointSet> up_sets(const Preorder& p, std::size_t cap) {
  std::vector<PointSet> out;
  for_each_antichain(p, [&](const PointSet& a) {
    if (out.size() >= cap)
      throw ResourceError("up-set enumeration exceeded cap of " + std::to_string(cap));
    out.push_back(p.up_set(a));
    return true;
  });
  sort_canonical(out);
  return out;
}

/// Calls `f(subset)` for every subset of {0..n-1}; n is limited to 30.
template <class F>
void for_each_subset(std::size_t n, F&& f) {
  if (n > 30) throw ResourceError("subset enumeration over more than 30 points");
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) f(PointSet::from_mask(n, m));
}

inline std::vector<std::string> numbered_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

namespace detail {

// Relation of an n-point preorder (n <= 8) packed row-major into 64 bits.
inline std::uint64_t pack(const std::vector<std::uint64_t>& rows) {
  std::uint64_t code = 0;
  const auto n = rows.size();
  for (std::size_t i = 0; i < n; ++i) code |= rows[i] << (i * n);
  return code;
}

inline bool transitive(const std::vector<std::uint64_t>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::uint64_t r = rows[i];
    while (r != 0) {
      auto j = static_cast<std::size_t>(std::countr_zero(r));
      r &= r - 1;
      if ((rows[j] & ~rows[i]) != 0) return false;
    }
  }
  return true;
}

inline std::uint64_t canonical_code(const std::vector<std::uint64_t>& rows) {
  const auto n = rows.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::uint64_t> image(n);
  do {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t row = 0;
      for (std::size_t j = 0; j < n; ++j)
        if ((rows[i] >> j) & 1U) row |= std::uint64_t{1} << perm[j];
      image[perm[i]] = row;
    }
    best = std::min(best, pack(image));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::vector<PointSet> rows_to_sets(const std::vector<std::uint64_t>& rows) {
  std::vector<PointSet> out;
  for (auto r : rows) out.push_back(PointSet::from_mask(rows.size(), r));
  return out;
}

}  // namespace detail

/// One representative of every isomorphism class of n-element posets
/// (n <= 7). Each class has a natural labelling, so only relations with
/// x < y implying index(x) < index(y) are scanned.
inline std::vector<Poset> posets_up_to_iso(std::size_t n) {
  if (n == 0 || n > 7) throw InvalidInput("poset enumeration supports 1..7 elements");
  std::vector<Pair> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<Poset> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<std::uint64_t> rows(n);
  for (std::uint64_t m = 0; m < total; ++m) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = std::uint64_t{1} << i;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((m >> k) & 1U) rows[slots[k].first] |= std::uint64_t{1} << slots[k].second;
    if (!detail::transitive(rows)) continue;
    if (!seen.insert(detail::canonical_code(rows)).second) continue;
    out.push_back(Poset::from_up_rows(numbered_names(n), detail::rows_to_sets(rows)));
  }
  return out;
}

/// One representative of every isomorphism class of n-point preorders
/// (n <= 5), i.e. of every finite topology on n points up to homeomorphism.
inline std::vector<Preorder> preorders_up_to_iso(std::size_t n) {
  if (n == 0 || n > 5) throw InvalidInput("preorder enumeration supports 1..5 points");
  std::vector<Pair> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<Preorder> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<std::uint64_t> rows(n);
  for (std::uint64_t m = 0; m < total; ++m) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = std::uint64_t{1} << i;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((m >> k) & 1U) rows[slots[k].first] |= std::uint64_t{1} << slots[k].second;
    if (!detail::transitive(rows)) continue;
    if (!seen.insert(detail::canonical_code(rows)).second) continue;
    out.push_back(Preorder::from_up_rows(numbered_names(n), detail::rows_to_sets(rows)));
  }
  return out;
}

/// Seeded generator with a platform-independent output sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return v % bound;
  }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Random DAG on n nodes (edge i->j, i<j, with probability num/den), closed
/// transitively, with labels shuffled.
inline Poset random_poset(std::size_t n, std::uint64_t num, std::uint64_t den, Rng& rng) {
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);
  std::vector<Pair> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(num, den)) edges.emplace_back(label[i], label[j]);
  return Poset::from_generators(numbered_names(n), edges);
}

/// Random lattice on n >= 2 elements: a bottom, a top, and a random poset in
/// between; resampled until every pair has a join and a meet.
inline Poset random_lattice(std::size_t n, Rng& rng) {
  if (n < 2) throw InvalidInput("random lattices need at least two elements");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const std::uint64_t num = 1 + rng.below(4);
    std::vector<Pair> edges;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      edges.emplace_back(0, i);
      edges.emplace_back(i, n - 1);
      for (std::size_t j = i + 1; j + 1 < n; ++j)
        if (rng.chance(num, 6)) edges.emplace_back(i, j);
    }
    if (n == 2) edges.emplace_back(0, 1);
    auto p = Poset::from_generators(numbered_names(n), edges);
    if (!p.lattice_failure()) return p;
  }
  throw ResourceError("no lattice found after 100000 attempts");
}

}  // namespace smyth
