#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "smyth/enumerate.hpp"
#include "smyth/error.hpp"
#include "smyth/limits.hpp"
#include "smyth/point_set.hpp"
#include "smyth/poset.hpp"

namespace smyth {

/// D(L) for a finite lattice L: the nonempty up-sets of L under reverse
/// inclusion. Elements are addressed by index; `element(i)` is the up-set.
///
/// The lattice operations are available twice: `join`/`meet` use the set
/// formulas (intersection and union), `lub`/`glb` search the order. The
/// checks below compare one against the other.
class Frame {
 public:
  Frame(Poset lattice, std::vector<PointSet> elements)
      : lattice_(std::move(lattice)), elements_(std::move(elements)) {
    const auto n = elements_.size();
    for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], i);
    above_.assign(n, PointSet(n));
    below_.assign(n, PointSet(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq(i, j)) {
          above_[i].insert(j);
          below_[j].insert(i);
        }
  }

  const Poset& lattice() const { return lattice_; }
  const std::vector<PointSet>& elements() const { return elements_; }
  const PointSet& element(std::size_t i) const { return elements_.at(i); }
  std::size_t size() const { return elements_.size(); }

  std::size_t index_of(const PointSet& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) throw InvalidInput(format(k) + " is not a nonempty up-set of the lattice");
    return it->second;
  }

  /// {1_L}.
  std::size_t top() const { return index_of(PointSet::singleton(lattice_.size(), *lattice_.top())); }
  /// L itself.
  std::size_t bottom() const { return index_of(PointSet::full(lattice_.size())); }

  /// i <= j iff element i contains element j.
  bool leq(std::size_t i, std::size_t j) const { return elements_[j].is_subset_of(elements_[i]); }

  /// Intersection of the members; the empty family gives the bottom.
  std::size_t join(const PointSet& family) const {
    auto k = PointSet::full(lattice_.size());
    family.for_each([&](std::size_t i) { k &= elements_[i]; });
    return index_of(k);
  }

  /// Union of the members; the empty family gives the top.
  std::size_t meet(const PointSet& family) const {
    if (family.empty()) return top();
    PointSet k(lattice_.size());
    family.for_each([&](std::size_t i) { k |= elements_[i]; });
    return index_of(k);
  }

  std::size_t join(std::size_t a, std::size_t b) const { return index_of(elements_[a] & elements_[b]); }
  std::size_t meet(std::size_t a, std::size_t b) const { return index_of(elements_[a] | elements_[b]); }

  /// Least upper bound found by scanning the order.
  std::optional<std::size_t> lub(const PointSet& family) const {
    auto ub = PointSet::full(size());
    family.for_each([&](std::size_t i) { ub &= above_[i]; });
    std::optional<std::size_t> out;
    ub.for_each([&](std::size_t u) {
      if (!out && ub.is_subset_of(above_[u])) out = u;
    });
    return out;
  }

  /// Greatest lower bound found by scanning the order.
  std::optional<std::size_t> glb(const PointSet& family) const {
    auto lb = PointSet::full(size());
    family.for_each([&](std::size_t i) { lb &= below_[i]; });
    std::optional<std::size_t> out;
    lb.for_each([&](std::size_t l) {
      if (!out && lb.is_subset_of(below_[l])) out = l;
    });
    return out;
  }

  std::string format(const PointSet& k) const { return format_set(lattice_.names(), k); }

 private:
  Poset lattice_;
  std::vector<PointSet> elements_;
  std::unordered_map<PointSet, std::size_t, PointSetHash> index_;
  std::vector<PointSet> above_, below_;
};

/// Validates `lattice` and lists its nonempty up-sets by removing minimal
/// points one at a time, starting from L. Throws ResourceError past
/// `limits.element_cap`.
inline Frame build_frame(const Poset& lattice, const Limits& limits = {}) {
  if (auto bad = lattice.lattice_failure())
    throw InvalidInput("not a lattice: '" + lattice.name(bad->first) + "' and '" +
                       lattice.name(bad->second) + "' lack a join or meet");
  if (!lattice.top() || !lattice.bottom()) throw InvalidInput("lattice lacks a top or bottom");
  std::unordered_set<PointSet, PointSetHash> seen;
  std::deque<PointSet> queue{PointSet::full(lattice.size())};
  seen.insert(queue.front());
  while (!queue.empty()) {
    auto u = std::move(queue.front());
    queue.pop_front();
    lattice.minimal(u).for_each([&](std::size_t x) {
      auto v = u;
      v.erase(x);
      if (v.empty() || !seen.insert(v).second) return;
      if (seen.size() > limits.element_cap)
        throw ResourceError("D(L) has more than " + std::to_string(limits.element_cap) + " elements");
      queue.push_back(std::move(v));
    });
  }
  std::vector<PointSet> elements(seen.begin(), seen.end());
  sort_canonical(elements);
  return Frame(lattice, std::move(elements));
}

/// Checks that the set formulas agree with the order on `family`; throws
/// PropertyViolation naming the family otherwise.
inline void check_join_meet(const Frame& fr, const PointSet& family) {
  auto describe = [&] {
    std::string s = "[";
    family.for_each([&](std::size_t i) { s += (s.size() > 1 ? "," : "") + fr.format(fr.element(i)); });
    return s + "]";
  };
  if (fr.lub(family) != fr.join(family))
    throw PropertyViolation("join of " + describe() + " is not the intersection");
  if (fr.glb(family) != fr.meet(family)) throw PropertyViolation("meet of " + describe() + " is not the union");
}

struct FrameLawReport {
  bool value = true;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  /// A failing (a, S), S as a family of element indices.
  std::optional<std::pair<std::size_t, PointSet>> witness;
};

/// a meet (join S) == join {a meet s : s in S}, with lub/glb taken from the
/// order. Every (a, S) when there are at most 12 elements; otherwise every a
/// against every S of at most two members plus `samples` random pairs.
inline FrameLawReport frame_law_check(const Frame& fr, std::uint64_t seed = 0, std::size_t samples = 1000) {
  FrameLawReport r;
  r.seed = seed;
  const auto n = fr.size();
  std::vector<std::vector<std::size_t>> glb2(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      PointSet pair(n);
      pair.insert(a);
      pair.insert(b);
      glb2[a][b] = *fr.glb(pair);
    }
  auto check = [&](std::size_t a, const PointSet& s) {
    ++r.checks;
    auto lhs = glb2[a][*fr.lub(s)];
    PointSet parts(n);
    s.for_each([&](std::size_t i) { parts.insert(glb2[a][i]); });
    if (lhs == *fr.lub(parts)) return true;
    r.value = false;
    r.witness = {a, s};
    return false;
  };
  if (n <= 12) {
    for (std::size_t a = 0; a < n && r.value; ++a)
      for_each_subset(n, [&](const PointSet& s) {
        if (r.value) check(a, s);
      });
    return r;
  }
  r.exhaustive = false;
  for (std::size_t a = 0; a < n && r.value; ++a)
    for (std::size_t i = 0; i < n && r.value; ++i)
      for (std::size_t j = i; j < n && r.value; ++j) {
        PointSet s(n);
        s.insert(i);
        s.insert(j);
        check(a, s);
      }
  Rng rng(seed);
  for (std::size_t k = 0; k < samples && r.value; ++k) {
    PointSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (rng.chance(1, 2)) s.insert(i);
    check(rng.below(n), s);
  }
  return r;
}

/// join {c : a meet c <= b}, asserted to satisfy c <= (a => b) iff
/// a meet c <= b for every c.
inline std::size_t heyting_implication(const Frame& fr, std::size_t a, std::size_t b) {
  PointSet candidates(fr.size());
  for (std::size_t c = 0; c < fr.size(); ++c)
    if (fr.leq(fr.meet(a, c), b)) candidates.insert(c);
  auto h = fr.lub(candidates);
  if (!h) throw PropertyViolation("implication has no supremum");
  for (std::size_t c = 0; c < fr.size(); ++c)
    if (fr.leq(c, *h) != candidates.contains(c))
      throw PropertyViolation("residuation fails at " + fr.format(fr.element(c)));
  return *h;
}

struct ResiduationReport {
  bool value = true;
  bool exhaustive = true;
  std::size_t triples = 0;
  /// A failing (a, b, c).
  std::optional<std::array<std::size_t, 3>> witness;
};

/// Residuation for every (a, b, c) when there are at most `exhaustive_limit`
/// elements, otherwise for every (a, b) against `samples` random c.
inline ResiduationReport residuation_check(const Frame& fr, std::uint64_t seed = 0,
                                           std::size_t exhaustive_limit = 40, std::size_t samples = 1000) {
  ResiduationReport r;
  const auto n = fr.size();
  r.exhaustive = n <= exhaustive_limit;
  Rng rng(seed);
  for (std::size_t a = 0; a < n && r.value; ++a)
    for (std::size_t b = 0; b < n && r.value; ++b) {
      std::size_t h;
      try {
        h = heyting_implication(fr, a, b);
      } catch (const PropertyViolation&) {
        r.value = false;
        r.witness = std::array<std::size_t, 3>{a, b, 0};
        break;
      }
      std::size_t rounds = r.exhaustive ? n : std::min(n, samples / n + 1);
      for (std::size_t k = 0; k < rounds; ++k) {
        auto c = r.exhaustive ? k : rng.below(n);
        ++r.triples;
        if (fr.leq(c, h) != fr.leq(fr.meet(a, c), b)) {
          r.value = false;
          r.witness = std::array<std::size_t, 3>{a, b, c};
          break;
        }
      }
    }
  return r;
}

struct PrimeReport {
  /// Prime elements, by index.
  std::vector<std::size_t> primes;
  /// Every up(x) is prime.
  bool principal_prime = true;
  /// Every K is the meet of {up(x) : x in K}.
  bool principal_decomposition = true;
  /// Every element is the meet of the primes above it.
  bool spatial = true;
  std::optional<std::size_t> witness;
};

/// p is prime iff a meet b <= p implies a <= p or b <= p, checked over all
/// pairs. The top counts as prime, as the definition admits it.
inline PrimeReport primes_and_spatiality(const Frame& fr) {
  PrimeReport r;
  const auto n = fr.size();
  const auto& lat = fr.lattice();
  PointSet prime(n);
  for (std::size_t p = 0; p < n; ++p) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = a; b < n && ok; ++b)
        if (fr.leq(fr.meet(a, b), p) && !fr.leq(a, p) && !fr.leq(b, p)) ok = false;
    if (ok) {
      prime.insert(p);
      r.primes.push_back(p);
    }
  }
  std::vector<std::size_t> principal(lat.size());
  for (std::size_t x = 0; x < lat.size(); ++x) {
    principal[x] = fr.index_of(lat.up(x));
    if (!prime.contains(principal[x])) {
      r.principal_prime = false;
      if (!r.witness) r.witness = principal[x];
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    PointSet parts(n);
    fr.element(k).for_each([&](std::size_t x) { parts.insert(principal[x]); });
    if (fr.glb(parts) != k) {
      r.principal_decomposition = false;
      if (!r.witness) r.witness = k;
    }
    PointSet primes_above = prime & PointSet::from(n, [&] {
      std::vector<std::size_t> up;
      for (std::size_t p = 0; p < n; ++p)
        if (fr.leq(k, p)) up.push_back(p);
      return up;
    }());
    if (fr.glb(primes_above) != k) {
      r.spatial = false;
      if (!r.witness) r.witness = k;
    }
  }
  return r;
}

}  // namespace smyth
