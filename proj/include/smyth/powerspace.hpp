#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "smyth/deciders.hpp"
#include "smyth/error.hpp"
#include "smyth/limits.hpp"
#include "smyth/point_set.hpp"
#include "smyth/poset.hpp"
#include "smyth/scott.hpp"
#include "smyth/top_space.hpp"

namespace smyth {

/// The Smyth power space D(X): the nonempty saturated compact subsets of a
/// finite space X, with the upper Vietoris topology (basis: box(U) for U
/// open in X) and the reverse-inclusion order.
///
/// Element i is below element j in `order()` iff elements()[i] contains
/// elements()[j]. Families of elements are PointSets over the element list.
class PowerSpace {
 public:
  PowerSpace(TopSpace base, std::vector<PointSet> elements)
      : base_(std::move(base)), elements_(std::move(elements)) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      index_.emplace(elements_[i], i);
      names.push_back(base_.format(elements_[i]));
    }
    const auto n = elements_.size();
    std::vector<PointSet> up(n, PointSet(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (elements_[j].is_subset_of(elements_[i])) up[i].insert(j);
    order_ = Poset::from_up_rows(names, up);
    // The smallest uv-open around K is box of the smallest open around K.
    std::vector<PointSet> nbhd;
    for (const auto& k : elements_) nbhd.push_back(box_unchecked(base_.open_hull(k)));
    uv_ = TopSpace::from_neighbourhoods(std::move(names), std::move(nbhd));
  }

  const TopSpace& base() const { return base_; }
  const std::vector<PointSet>& elements() const { return elements_; }
  const PointSet& element(std::size_t i) const { return elements_.at(i); }
  std::size_t size() const { return elements_.size(); }

  /// D(X) with the upper Vietoris topology, as a space in its own right.
  const TopSpace& uv() const { return uv_; }
  const Poset& order() const { return order_; }

  std::optional<std::size_t> index_of(const PointSet& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  PointSet empty_family() const { return PointSet(size()); }

  /// {K : K inside u}; `u` must be open in the base.
  PointSet box(const PointSet& u) const {
    if (!base_.is_open(u)) throw InvalidInput("box needs an open set; " + base_.format(u) + " is not open");
    return box_unchecked(u);
  }

  /// {K : K meets c}; `c` must be closed in the base.
  PointSet diamond(const PointSet& c) const {
    if (!base_.is_closed(c))
      throw InvalidInput("diamond needs a closed set; " + base_.format(c) + " is not closed");
    PointSet out(size());
    for (std::size_t i = 0; i < size(); ++i)
      if (elements_[i].intersects(c)) out.insert(i);
    return out;
  }

  /// box(U) for every open U of the base, deduplicated, in canonical order.
  std::optional<std::vector<PointSet>> box_basis(std::size_t cap) const {
    auto opens = base_.enumerate_opens(cap);
    if (!opens) return std::nullopt;
    std::vector<PointSet> basis;
    for (const auto& u : *opens) basis.push_back(box_unchecked(u));
    sort_canonical(basis);
    return basis;
  }

  /// Names each family member by its element label.
  std::string format(const PointSet& family) const { return uv_.format(family); }

 private:
  PointSet box_unchecked(const PointSet& u) const {
    PointSet out(size());
    for (std::size_t i = 0; i < size(); ++i)
      if (elements_[i].is_subset_of(u)) out.insert(i);
    return out;
  }

  TopSpace base_;
  std::vector<PointSet> elements_;
  std::unordered_map<PointSet, std::size_t, PointSetHash> index_;
  Poset order_;
  TopSpace uv_;
};

/// Enumerates D(X); throws ResourceError past `limits.element_cap`.
inline PowerSpace build_powerspace(const TopSpace& space, const Limits& limits = {}) {
  return PowerSpace(space, saturated_compact_sets(space, limits));
}

/// Applies D `n >= 1` times, each stage over the previous upper space.
inline PowerSpace iterate_powerspace(const TopSpace& space, std::size_t n, const Limits& limits = {}) {
  if (n == 0) throw InvalidInput("power space iteration count must be at least 1");
  PowerSpace ps = build_powerspace(space, limits);
  for (std::size_t k = 1; k < n; ++k) ps = build_powerspace(ps.uv(), limits);
  return ps;
}

/// Specialization of the upper Vietoris topology computed from the box
/// basis alone: K <= L iff every box(U) containing K contains L.
inline std::optional<Preorder> uv_specialization_from_basis(const PowerSpace& ps, std::size_t cap) {
  auto basis = ps.box_basis(cap);
  if (!basis) return std::nullopt;
  std::vector<PointSet> up(ps.size(), PointSet::full(ps.size()));
  for (const auto& b : *basis)
    b.for_each([&](std::size_t i) { up[i] &= b; });
  return Preorder::from_up_rows(ps.order().names(), std::move(up));
}

struct CanonicalMap {
  /// Point x maps to the element up(x).
  std::vector<std::size_t> graph;
  bool injective = true;
  bool order_embedding = true;
  bool continuous = true;
  bool open_onto_image = true;
  std::optional<Pair> injectivity_failure;
  /// A uv-open whose preimage is not open.
  std::optional<PointSet> discontinuity;
  /// An open of the base whose image is not open in the image subspace.
  std::optional<PointSet> non_open_image;

  bool embedding() const { return injective && continuous && open_onto_image; }
};

/// x maps to up(x), verified to be a topological embedding.
inline CanonicalMap canonical_map(const PowerSpace& ps, const Limits& limits = {}) {
  const auto& base = ps.base();
  CanonicalMap m;
  for (std::size_t x = 0; x < base.size(); ++x) {
    auto idx = ps.index_of(saturation(base, PointSet::singleton(base.size(), x), limits));
    if (!idx) throw PropertyViolation("up-closure of '" + base.name(x) + "' is not in D(X)");
    m.graph.push_back(*idx);
  }
  const auto spec = specialization(base);
  for (std::size_t x = 0; x < base.size() && m.injective; ++x)
    for (std::size_t y = x + 1; y < base.size(); ++y)
      if (m.graph[x] == m.graph[y]) {
        m.injective = false;
        m.injectivity_failure = Pair{x, y};
        break;
      }
  for (std::size_t x = 0; x < base.size(); ++x)
    for (std::size_t y = 0; y < base.size(); ++y)
      if (spec.preorder.leq(x, y) != ps.order().leq(m.graph[x], m.graph[y])) m.order_embedding = false;

  auto preimage = [&](const PointSet& family) {
    PointSet out(base.size());
    for (std::size_t x = 0; x < base.size(); ++x)
      if (family.contains(m.graph[x])) out.insert(x);
    return out;
  };
  auto basis = ps.box_basis(limits.definitional_opens);
  const auto& uv_opens = basis ? *basis : ps.uv().neighbourhoods();
  std::vector<PointSet> bad;
  for (const auto& o : uv_opens)
    if (!base.is_open(preimage(o))) bad.push_back(o);
  if (auto w = lex_min(bad)) {
    m.continuous = false;
    m.discontinuity = *w;
  }

  PointSet image(ps.size());
  for (auto i : m.graph) image.insert(i);
  auto base_opens = base.enumerate_opens(limits.definitional_opens);
  const auto& opens = base_opens ? *base_opens : base.neighbourhoods();
  bad.clear();
  for (const auto& u : opens) {
    PointSet fwd(ps.size());
    u.for_each([&](std::size_t x) { fwd.insert(m.graph[x]); });
    if ((ps.uv().open_hull(fwd) & image) != fwd) bad.push_back(u);
  }
  if (auto w = lex_min(bad)) {
    m.open_onto_image = false;
    m.non_open_image = *w;
  }
  return m;
}

struct ScottOnPowerSpace {
  TopSpace space;
  Method method = Method::definitional;
};

/// The Scott topology of (D(X), reverse inclusion). Definitional (all
/// directed subsets) up to `limits.directed_subset_points` elements; beyond
/// that, the Alexandroff topology of the order, which coincides with it on
/// finite posets.
inline ScottOnPowerSpace scott_on_powerspace(const PowerSpace& ps, const Limits& limits = {},
                                             Method m = Method::automatic) {
  bool definitional = m == Method::definitional ||
                      (m == Method::automatic && ps.size() <= limits.directed_subset_points);
  if (definitional) {
    Limits wide = limits;
    wide.directed_subset_points = std::max(limits.directed_subset_points, ps.size());
    return {scott_topology(ps.order(), wide), Method::definitional};
  }
  return {TopSpace::alexandroff(ps.order()), Method::structural};
}

struct UvScottComparison {
  bool value = true;
  Method method = Method::definitional;
  std::size_t opens_checked = 0;
  std::optional<PointSet> witness;
};

/// Every upper Vietoris open is Scott open in (D(X), reverse inclusion).
/// Checked on a basis, since Scott opens are closed under unions.
inline UvScottComparison uv_weaker_than_scott(const PowerSpace& ps, const Limits& limits = {},
                                              Method m = Method::automatic) {
  UvScottComparison r;
  auto basis = ps.box_basis(limits.definitional_opens);
  const auto& opens = basis ? *basis : ps.uv().neighbourhoods();
  bool definitional = m == Method::definitional ||
                      (m == Method::automatic && ps.size() <= limits.directed_subset_points);
  std::vector<DirectedSubset> directed;
  if (definitional) {
    Limits wide = limits;
    wide.directed_subset_points = std::max(limits.directed_subset_points, ps.size());
    directed = directed_subsets(ps.order(), wide);
  }
  r.method = definitional ? Method::definitional : Method::structural;
  std::vector<PointSet> bad;
  for (const auto& o : opens) {
    ++r.opens_checked;
    bool ok = definitional ? is_scott_open(ps.order(), directed, o) : ps.order().is_up_set(o);
    if (!ok) bad.push_back(o);
  }
  if (auto w = lex_min(bad)) {
    r.value = false;
    r.witness = *w;
  }
  return r;
}

/// Everything the generic-point argument needs about D(X) itself, computed
/// once per space: the map x -> up(x), the Scott space of D(X), and the
/// three hypotheses of the argument.
struct GenericPointSetup {
  CanonicalMap xi;
  ScottOnPowerSpace scott;
  /// (i) upper Vietoris opens are Scott open.
  bool uv_below_scott = false;
  /// (ii) x -> up(x) is continuous into the Scott space.
  bool xi_continuous = false;
  /// (iii) the Scott space of D(X) is sober.
  bool scott_space_sober = false;
};

inline GenericPointSetup prepare_generic_point(const PowerSpace& ps, const Limits& limits = {}) {
  const auto& base = ps.base();
  GenericPointSetup g{canonical_map(ps, limits), scott_on_powerspace(ps, limits)};
  g.uv_below_scott = uv_weaker_than_scott(ps, limits).value;
  g.xi_continuous = true;
  for (const auto& nb : g.scott.space.neighbourhoods()) {
    PointSet pre(base.size());
    for (std::size_t x = 0; x < base.size(); ++x)
      if (nb.contains(g.xi.graph[x])) pre.insert(x);
    if (!base.is_open(pre)) g.xi_continuous = false;
  }
  g.scott_space_sober = is_sober(g.scott.space, limits).value;
  return g;
}

/// Record of one replay of the argument that recovers a generic point of an
/// irreducible closed set from the Scott space of D(X).
struct GenericPointTrace {
  std::size_t point = 0;
  /// Image of F under x -> up(x), as a family of elements.
  PointSet image;
  /// Its closure in the Scott topology of D(X).
  PointSet closure;
  /// Element K whose principal down-set is that closure.
  std::size_t principal = 0;
  Method scott_method = Method::definitional;
  bool claim_upper_bounds = false;
  bool claim_least_element = false;
  bool claim_generic = false;
};

/// Finds the generic point of the irreducible closed set `f` by running the
/// sobriety argument through D(X): close the image of `f` in the Scott
/// topology, read off the element K generating that closure, and take K's
/// least point. Every step is asserted; a failure throws PropertyViolation.
inline GenericPointTrace generic_point_via_powerspace(const PowerSpace& ps, const GenericPointSetup& g,
                                                      const PointSet& f, const Limits& limits = {}) {
  const auto& base = ps.base();
  const auto spec = specialization(base);
  if (!spec.t0) throw InvalidInput("generic-point extraction needs a T0 space");
  if (!base.is_closed(f)) throw InvalidInput(base.format(f) + " is not closed");
  if (!is_irreducible(base, f, limits)) throw InvalidInput(base.format(f) + " is not irreducible");
  if (!g.uv_below_scott)
    throw PropertyViolation("upper Vietoris topology is not contained in the Scott topology");
  if (!g.xi_continuous) throw PropertyViolation("x -> up(x) is not continuous into the Scott space");
  if (!g.scott_space_sober) throw PropertyViolation("Scott space of D(X) is not sober");

  GenericPointTrace t;
  t.scott_method = g.scott.method;
  t.image = PointSet(ps.size());
  f.for_each([&](std::size_t x) { t.image.insert(g.xi.graph[x]); });
  t.closure = g.scott.space.closure(t.image);

  std::optional<std::size_t> principal;
  for (std::size_t i = 0; i < ps.size() && !principal; ++i)
    if (ps.order().down(i) == t.closure) principal = i;
  if (!principal)
    throw PropertyViolation("closure of the image of " + base.format(f) + " is not a principal down-set");
  t.principal = *principal;
  const auto& k = ps.element(t.principal);

  // Every point of K is an upper bound of F.
  t.claim_upper_bounds = true;
  k.for_each([&](std::size_t p) {
    if (!f.is_subset_of(spec.preorder.down(p))) t.claim_upper_bounds = false;
  });
  if (!t.claim_upper_bounds)
    throw PropertyViolation("a point of " + base.format(k) + " is not an upper bound of " + base.format(f));

  // K has a least point s, and K = up(s).
  std::optional<std::size_t> least;
  k.for_each([&](std::size_t p) {
    if (!least && k.is_subset_of(spec.preorder.up(p))) least = p;
  });
  t.claim_least_element = least.has_value() && spec.preorder.up(*least) == k;
  if (!t.claim_least_element) throw PropertyViolation(base.format(k) + " has no least point");
  t.point = *least;

  // s lies in F, so F = cl({s}).
  t.claim_generic = f.contains(t.point) && base.point_closure(t.point) == f;
  if (!t.claim_generic)
    throw PropertyViolation("'" + base.name(t.point) + "' is not a generic point of " + base.format(f));
  return t;
}

inline GenericPointTrace generic_point_via_powerspace(const PowerSpace& ps, const PointSet& f,
                                                      const Limits& limits = {}) {
  return generic_point_via_powerspace(ps, prepare_generic_point(ps, limits), f, limits);
}

inline GenericPointTrace generic_point_via_powerspace(const TopSpace& space, const PointSet& f,
                                                      const Limits& limits = {}) {
  return generic_point_via_powerspace(build_powerspace(space, limits), f, limits);
}

}  // namespace smyth
