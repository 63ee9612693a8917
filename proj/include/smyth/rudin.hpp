#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smyth/deciders.hpp"
#include "smyth/error.hpp"
#include "smyth/limits.hpp"
#include "smyth/point_set.hpp"
#include "smyth/powerspace.hpp"

namespace smyth {

/// The chosen set and the five clauses it was checked against.
struct RudinResult {
  PointSet set;
  bool closed = false;
  bool irreducible = false;
  bool within = false;
  bool meets_all = false;
  bool minimal = false;

  bool verified() const { return closed && irreducible && within && meets_all && minimal; }
};

namespace detail {

inline bool meets_all(const PowerSpace& ps, const PointSet& family, const PointSet& s) {
  bool ok = true;
  family.for_each([&](std::size_t i) { ok = ok && ps.element(i).intersects(s); });
  return ok;
}

inline std::vector<PointSet> base_closed_sets(const PowerSpace& ps, const Limits& limits) {
  auto opens = ps.base().enumerate_opens(limits.definitional_opens);
  if (!opens) throw ResourceError("base space has too many open sets for the minimal-set search");
  auto closed = closed_sets(*opens);
  sort_canonical(closed);
  return closed;
}

}  // namespace detail

/// A closed irreducible subset of `c` that meets every member of the family
/// and has no proper closed subset that does. Closed subsets of `c` are tried
/// by size, then lexicographically; the first that meets every member wins.
inline RudinResult rudin_minimal(const PowerSpace& ps, const PointSet& family, const PointSet& c,
                                 const Limits& limits = {}) {
  const auto& base = ps.base();
  if (family.ground_size() != ps.size()) throw InvalidInput("family is not over the power space's elements");
  if (family.empty()) throw InvalidInput("precondition failed: family is empty");
  if (!base.is_closed(c)) throw InvalidInput("precondition failed: " + base.format(c) + " is not closed");
  family.for_each([&](std::size_t i) {
    if (!ps.element(i).intersects(c))
      throw InvalidInput("precondition failed: " + base.format(c) + " misses member " +
                         base.format(ps.element(i)));
  });
  if (!is_irreducible(ps.uv(), family, limits))
    throw InvalidInput("precondition failed: family " + ps.format(family) +
                       " is not irreducible in the upper Vietoris topology");

  const auto closed = detail::base_closed_sets(ps, limits);
  std::optional<PointSet> hit;
  for (const auto& f : closed)
    if (f.is_subset_of(c) && detail::meets_all(ps, family, f)) {
      hit = f;
      break;
    }
  if (!hit) throw PropertyViolation("no closed subset of " + base.format(c) + " meets every member");

  RudinResult r;
  r.set = *hit;
  r.closed = base.is_closed(r.set);
  r.irreducible = is_irreducible(base, r.set, limits);
  r.within = r.set.is_subset_of(c);
  r.meets_all = detail::meets_all(ps, family, r.set);
  r.minimal = true;
  for (const auto& f : closed)
    if (f != r.set && f.is_subset_of(r.set) && detail::meets_all(ps, family, f)) r.minimal = false;
  return r;
}

struct UnionResult {
  PointSet set;
  bool member = false;
};

/// Union of a nonempty compact family in D(X), checked to lie in D(X).
inline UnionResult union_of_compact_family(const PowerSpace& ps, const PointSet& family) {
  if (family.ground_size() != ps.size()) throw InvalidInput("family is not over the power space's elements");
  if (family.empty()) throw InvalidInput("family is empty");
  if (!is_compact(ps.uv(), family)) throw InvalidInput("family " + ps.format(family) + " is not compact");
  UnionResult r{ps.base().empty_set(), false};
  family.for_each([&](std::size_t i) { r.set |= ps.element(i); });
  r.member = ps.index_of(r.set).has_value();
  return r;
}

struct WellFilteredTransfer {
  WellFilteredResult base;
  WellFilteredResult upper;
  DSpaceResult upper_d_space;
  bool agree = false;
  /// X well-filtered, D(X) a d-space and D(X) well-filtered all coincide.
  bool three_way = false;
};

/// Runs the well-filteredness decider on X and on D(X) with its upper
/// Vietoris topology, and the d-space decider on D(X).
inline WellFilteredTransfer wf_transfer_check(const TopSpace& space, const Limits& limits = {}) {
  if (!specialization(space).t0) throw InvalidInput("well-filteredness transfer needs a T0 space");
  WellFilteredTransfer r;
  const auto ps = build_powerspace(space, limits);
  r.base = is_well_filtered(space, limits);
  r.upper = is_well_filtered(ps.uv(), limits);
  r.upper_d_space = is_d_space(ps.uv(), limits);
  r.agree = r.base.value == r.upper.value;
  r.three_way = r.agree && r.base.value == r.upper_d_space.value;
  return r;
}

}  // namespace smyth
