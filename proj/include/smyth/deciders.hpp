#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "smyth/enumerate.hpp"
#include "smyth/error.hpp"
#include "smyth/limits.hpp"
#include "smyth/poset.hpp"
#include "smyth/scott.hpp"
#include "smyth/top_space.hpp"

namespace smyth {

struct Specialization {
  Preorder preorder;
  bool t0 = true;
  /// Least pair of distinct points with identical closures.
  std::optional<Pair> t0_failure;

  Poset poset() const {
    if (!t0) throw InvalidInput("specialization preorder is not antisymmetric (space is not T0)");
    return Poset(preorder);
  }
};

/// x <= y iff x lies in cl({y}).
inline Specialization specialization(const TopSpace& space) {
  std::vector<PointSet> up(space.size(), PointSet(space.size()));
  for (std::size_t y = 0; y < space.size(); ++y)
    space.point_closure(y).for_each([&](std::size_t x) { up[x].insert(y); });
  Specialization s{Preorder::from_up_rows(space.names(), std::move(up)), true, std::nullopt};
  s.t0_failure = s.preorder.antisymmetry_failure();
  s.t0 = !s.t0_failure;
  return s;
}

/// The open family used by definitional deciders, or nullopt when the
/// structural route applies.
inline std::optional<std::vector<PointSet>> definitional_opens(const TopSpace& space,
                                                               const Limits& limits, Method m) {
  if (m == Method::structural) return std::nullopt;
  if (m == Method::definitional) {
    auto family = space.enumerate_opens(std::size_t{1} << 20);
    if (!family) throw ResourceError("too many open sets for a definitional check");
    return family;
  }
  return space.enumerate_opens(limits.definitional_opens);
}

inline std::vector<PointSet> closed_sets(const std::vector<PointSet>& opens) {
  std::vector<PointSet> closed;
  closed.reserve(opens.size());
  for (const auto& u : opens) closed.push_back(u.complement());
  sort_canonical(closed);
  return closed;
}

inline std::optional<PointSet> lex_min(const std::vector<PointSet>& sets) {
  if (sets.empty()) return std::nullopt;
  return *std::min_element(sets.begin(), sets.end(), lex_less);
}

/// Intersection of all opens containing `s`, checked against the up-closure
/// of `s` in the specialization preorder.
inline PointSet saturation(const TopSpace& space, const PointSet& s, const Limits& limits = {}) {
  PointSet sat = space.full_set();
  if (auto opens = definitional_opens(space, limits, Method::automatic)) {
    for (const auto& u : *opens)
      if (s.is_subset_of(u)) sat &= u;
  } else {
    sat = space.open_hull(s);
  }
  if (sat != space.specialization_preorder().up_set(s))
    throw PropertyViolation("saturation of " + space.format(s) +
                            " differs from its specialization up-closure");
  return sat;
}

inline bool is_saturated(const TopSpace& space, const PointSet& s, const Limits& limits = {}) {
  return saturation(space, s, limits) == s;
}

/// Opens from `cover` forming a finite subcover of `s`, or nullopt when
/// `cover` does not cover `s`.
inline std::optional<std::vector<PointSet>> finite_subcover(const std::vector<PointSet>& cover,
                                                            const PointSet& s) {
  std::vector<PointSet> chosen;
  PointSet left = s;
  for (const auto& u : cover) {
    if (left.empty()) break;
    if (u.intersects(left)) {
      chosen.push_back(u);
      left -= u;
    }
  }
  if (!left.empty()) return std::nullopt;
  return chosen;
}

/// Every open cover of `s` has a finite subcover. A finite space has finitely
/// many opens, so any cover is itself finite; the check extracts a subcover
/// from the cover by minimal neighbourhoods, the finest cover available.
inline bool is_compact(const TopSpace& space, const PointSet& s) {
  std::vector<PointSet> cover;
  s.for_each([&](std::size_t x) { cover.push_back(space.neighbourhood(x)); });
  return finite_subcover(cover, s).has_value();
}

/// Nonempty saturated compact subsets, in canonical order. Each saturated set
/// is the up-closure of its minimal points, so antichains of the
/// specialization preorder are enumerated instead of all subsets.
inline std::vector<PointSet> saturated_compact_sets(const TopSpace& space, const Limits& limits = {}) {
  const auto order = space.specialization_preorder();
  std::vector<PointSet> out;
  for_each_antichain(order, [&](const PointSet& a) {
    if (a.empty()) return true;
    if (out.size() >= limits.element_cap)
      throw ResourceError("more than " + std::to_string(limits.element_cap) +
                          " nonempty saturated compact sets");
    out.push_back(order.up_set(a));
    return true;
  });
  sort_canonical(out);
  std::optional<std::vector<PointSet>> opens = definitional_opens(space, limits, Method::automatic);
  for (const auto& k : out) {
    PointSet sat = space.full_set();
    if (opens) {
      for (const auto& u : *opens)
        if (k.is_subset_of(u)) sat &= u;
    } else {
      sat = space.open_hull(k);
    }
    if (sat != k || !is_compact(space, k))
      throw PropertyViolation("enumerated set " + space.format(k) + " is not saturated compact");
  }
  return out;
}

struct ClosedFamily {
  std::vector<PointSet> sets;
  Method method = Method::definitional;
};

namespace detail {

// `a` is irreducible: nonempty and not inside a union of two closed sets
// neither of which contains it.
inline bool irreducible_against(const PointSet& a, const std::vector<PointSet>& closed) {
  if (a.empty()) return false;
  std::vector<const PointSet*> missing;
  for (const auto& f : closed)
    if (!a.is_subset_of(f)) missing.push_back(&f);
  for (std::size_t i = 0; i < missing.size(); ++i)
    for (std::size_t j = i; j < missing.size(); ++j)
      if (a.is_subset_of(*missing[i] | *missing[j])) return false;
  return true;
}

}  // namespace detail

/// Whether an arbitrary subset is irreducible.
inline bool is_irreducible(const TopSpace& space, const PointSet& a, const Limits& limits = {},
                           Method m = Method::automatic) {
  if (auto opens = definitional_opens(space, limits, m))
    return detail::irreducible_against(a, closed_sets(*opens));
  // Finite spaces: A is irreducible iff some a in A has A inside cl({a}).
  bool found = false;
  a.for_each([&](std::size_t x) { found = found || a.is_subset_of(space.point_closure(x)); });
  return found;
}

/// All irreducible closed sets, in canonical order.
inline ClosedFamily irreducible_closed_sets(const TopSpace& space, const Limits& limits = {},
                                            Method m = Method::automatic) {
  ClosedFamily out;
  if (auto opens = definitional_opens(space, limits, m)) {
    auto closed = closed_sets(*opens);
    for (const auto& f : closed)
      if (detail::irreducible_against(f, closed)) out.sets.push_back(f);
    out.method = Method::definitional;
  } else {
    for (std::size_t x = 0; x < space.size(); ++x) out.sets.push_back(space.point_closure(x));
    sort_canonical(out.sets);
    out.method = Method::structural;
  }
  return out;
}

/// Points whose closure is exactly `f`.
inline PointSet generic_points(const TopSpace& space, const PointSet& f) {
  PointSet out(space.size());
  for (std::size_t x = 0; x < space.size(); ++x)
    if (space.point_closure(x) == f) out.insert(x);
  return out;
}

struct SoberResult {
  bool value = true;
  Method method = Method::definitional;
  std::size_t irreducible_count = 0;
  /// Lexicographically least irreducible closed set without exactly one
  /// generic point, and the generic points it does have.
  std::optional<PointSet> witness;
  PointSet witness_generic_points;
};

inline SoberResult is_sober(const TopSpace& space, const Limits& limits = {},
                            Method m = Method::automatic) {
  auto family = irreducible_closed_sets(space, limits, m);
  SoberResult r;
  r.method = family.method;
  r.irreducible_count = family.sets.size();
  std::vector<PointSet> failing;
  for (const auto& f : family.sets)
    if (generic_points(space, f).count() != 1) failing.push_back(f);
  if (auto w = lex_min(failing)) {
    r.value = false;
    r.witness = *w;
    r.witness_generic_points = generic_points(space, *w);
  }
  return r;
}

struct WellFilteredResult {
  bool value = true;
  Method method = Method::definitional;
  /// False when the space is not T0; the verdict then extends the definition.
  bool t0_hypothesis = true;
  std::size_t families_checked = 0;
  std::vector<PointSet> witness_family;
  std::optional<PointSet> witness_open;
};

namespace detail {

inline double binomial_sum(std::size_t n, std::size_t k) {
  double total = 0, term = 1;
  for (std::size_t i = 1; i <= k && i <= n; ++i) {
    term = term * static_cast<double>(n - i + 1) / static_cast<double>(i);
    total += term;
  }
  return total;
}

// Smallest family containing `family` closed under binary intersection.
inline std::vector<PointSet> intersection_closure(std::vector<PointSet> family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto meet = family[i] & family[j];
      if (std::find(family.begin(), family.end(), meet) == family.end()) family.push_back(meet);
    }
  sort_canonical(family);
  return family;
}

inline bool family_filtered(const std::vector<PointSet>& family) {
  if (family.empty()) return false;
  for (const auto& a : family)
    for (const auto& b : family) {
      const auto meet = a & b;
      if (std::none_of(family.begin(), family.end(), [&](const PointSet& c) { return c.is_subset_of(meet); }))
        return false;
    }
  return true;
}

}  // namespace detail

/// For every filtered family F of saturated compact sets and open U with
/// the intersection of F inside U, some member of F lies inside U.
///
/// The definitional route checks families generated (under intersection) by
/// antichains of at most `limits.family_bound` members of D(X), or every
/// subfamily when `limits.exhaustive_families` is set.
inline WellFilteredResult is_well_filtered(const TopSpace& space, const Limits& limits = {},
                                           Method m = Method::automatic) {
  WellFilteredResult r;
  r.t0_hypothesis = specialization(space).t0;
  auto opens = definitional_opens(space, limits, m);
  std::vector<PointSet> elements;
  if (opens) {
    try {
      elements = saturated_compact_sets(space, limits);
    } catch (const ResourceError&) {
      if (m == Method::definitional) throw;
      opens.reset();
    }
  }
  if (opens && m == Method::automatic && !limits.exhaustive_families) {
    double work = detail::binomial_sum(elements.size(), limits.family_bound) *
                  static_cast<double>(opens->size());
    if (work > static_cast<double>(limits.family_work)) opens.reset();
  }
  if (!opens) {
    // A filtered family of subsets of a finite set is finite and so contains
    // its own intersection.
    r.method = Method::structural;
    return r;
  }
  r.method = Method::definitional;

  std::unordered_set<PointSet, PointSetHash> members(elements.begin(), elements.end());
  auto check_family = [&](const std::vector<PointSet>& family) {
    if (!detail::family_filtered(family)) return true;
    ++r.families_checked;
    PointSet meet = space.full_set();
    for (const auto& k : family) meet &= k;
    std::vector<PointSet> escaped;
    for (const auto& u : *opens) {
      if (!meet.is_subset_of(u)) continue;
      if (std::none_of(family.begin(), family.end(), [&](const PointSet& k) { return k.is_subset_of(u); }))
        escaped.push_back(u);
    }
    if (auto u = lex_min(escaped)) {
      r.value = false;
      r.witness_family = family;
      r.witness_open = *u;
      return false;
    }
    return true;
  };

  if (limits.exhaustive_families) {
    if (elements.size() > 16)
      throw ResourceError("exhaustive filtered-family search needs |D(X)| <= 16");
    const std::uint64_t total = std::uint64_t{1} << elements.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      std::vector<PointSet> family;
      for (std::size_t i = 0; i < elements.size(); ++i)
        if ((mask >> i) & 1U) family.push_back(elements[i]);
      if (!check_family(family)) break;
    }
    return r;
  }

  std::vector<std::size_t> gens;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (stop) return;
    if (!gens.empty()) {
      std::vector<PointSet> family;
      for (auto g : gens) family.push_back(elements[g]);
      family = detail::intersection_closure(std::move(family));
      bool inside = std::all_of(family.begin(), family.end(),
                                [&](const PointSet& k) { return members.count(k) > 0; });
      if (inside && !check_family(family)) {
        stop = true;
        return;
      }
    }
    if (gens.size() == limits.family_bound) return;
    for (std::size_t i = start; i < elements.size() && !stop; ++i) {
      bool comparable = std::any_of(gens.begin(), gens.end(), [&](std::size_t g) {
        return elements[g].is_subset_of(elements[i]) || elements[i].is_subset_of(elements[g]);
      });
      if (comparable) continue;
      gens.push_back(i);
      self(self, i + 1);
      gens.pop_back();
    }
  };
  rec(rec, 0);
  return r;
}

struct DSpaceResult {
  bool value = true;
  Method method = Method::definitional;
  std::optional<Pair> t0_failure;
  std::optional<PointSet> directed_without_sup;
  std::optional<PointSet> non_scott_open;
};

/// T0, the specialization order is a dcpo, and every open is Scott open in it.
inline DSpaceResult is_d_space(const TopSpace& space, const Limits& limits = {},
                               Method m = Method::automatic) {
  DSpaceResult r;
  auto spec = specialization(space);
  if (!spec.t0) {
    r.value = false;
    r.t0_failure = spec.t0_failure;
    r.method = Method::definitional;
    return r;
  }
  const auto order = spec.poset();
  bool definitional = m == Method::definitional ||
                      (m == Method::automatic && order.size() <= limits.directed_subset_points);
  if (!definitional) {
    // Directed subsets of a finite poset contain their maximum, and opens are
    // up-sets of the specialization order.
    r.method = Method::structural;
    return r;
  }
  Limits wide = limits;
  wide.directed_subset_points = std::max(limits.directed_subset_points, order.size());
  auto directed = directed_subsets(order, wide);
  std::vector<PointSet> no_sup;
  for (const auto& d : directed)
    if (!d.sup) no_sup.push_back(d.members);
  if (auto w = lex_min(no_sup)) {
    r.value = false;
    r.directed_without_sup = *w;
    return r;
  }
  // Minimal neighbourhoods form a basis; Scott opens are closed under unions.
  std::vector<PointSet> bad;
  for (std::size_t x = 0; x < space.size(); ++x)
    if (!is_scott_open(order, directed, space.neighbourhood(x))) bad.push_back(space.neighbourhood(x));
  if (auto w = lex_min(bad)) {
    r.value = false;
    r.non_scott_open = *w;
  }
  return r;
}

struct CoherenceResult {
  bool value = true;
  Method method = Method::definitional;
  std::size_t pairs_checked = 0;
  std::optional<Pair> witness;  // indices into `elements`
  std::vector<PointSet> elements;
};

/// The intersection of any two compact saturated sets is compact.
inline CoherenceResult is_coherent(const TopSpace& space, const Limits& limits = {},
                                   Method m = Method::automatic) {
  CoherenceResult r;
  if (m != Method::structural) {
    try {
      r.elements = saturated_compact_sets(space, limits);
    } catch (const ResourceError&) {
      if (m == Method::definitional) throw;
      m = Method::structural;
    }
  }
  if (m == Method::structural) {
    // Every subset of a finite space is compact.
    r.method = Method::structural;
    return r;
  }
  for (std::size_t i = 0; i < r.elements.size(); ++i)
    for (std::size_t j = i; j < r.elements.size(); ++j) {
      ++r.pairs_checked;
      if (!is_compact(space, r.elements[i] & r.elements[j])) {
        r.value = false;
        r.witness = Pair{i, j};
        return r;
      }
    }
  return r;
}

struct SpaceReport {
  bool t0 = true;
  std::optional<Pair> t0_failure;
  SoberResult sober;
  WellFilteredResult well_filtered;
  DSpaceResult d_space;
  CoherenceResult coherent;
};

/// Runs every decider and asserts sober => well-filtered => d-space on T0
/// spaces.
inline SpaceReport analyze(const TopSpace& space, const Limits& limits = {},
                           Method m = Method::automatic) {
  SpaceReport r;
  auto spec = specialization(space);
  r.t0 = spec.t0;
  r.t0_failure = spec.t0_failure;
  r.sober = is_sober(space, limits, m);
  r.well_filtered = is_well_filtered(space, limits, m);
  r.d_space = is_d_space(space, limits, m);
  r.coherent = is_coherent(space, limits, m);
  if (r.t0) {
    if (r.sober.value && !r.well_filtered.value)
      throw PropertyViolation("space is sober but the filtered-family search found a witness");
    if (r.well_filtered.value && !r.d_space.value)
      throw PropertyViolation("space is well-filtered but not a d-space");
  }
  return r;
}

}  // namespace smyth
