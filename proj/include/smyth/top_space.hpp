#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "smyth/enumerate.hpp"
#include "smyth/error.hpp"
#include "smyth/point_set.hpp"
#include "smyth/poset.hpp"

namespace smyth {

/// A finite topological space.
///
/// Every finite topology is determined by the minimal open neighbourhood of
/// each point (the intersection of all opens containing it), so that is what
/// is always stored. Spaces built from an explicit family also keep the
/// family itself; spaces built from a basis or a preorder keep it implicit and
/// enumerate opens on request, subject to a cap.
class TopSpace {
 public:
  TopSpace() = default;

  /// Validates `family` as a topology: contains the empty and full sets and
  /// is closed under binary union and intersection. Duplicates are dropped.
  static TopSpace from_opens(std::vector<std::string> names, std::vector<PointSet> family) {
    TopSpace t(std::move(names));
    const auto n = t.size();
    for (const auto& u : family)
      if (u.ground_size() != n) throw InvalidInput("open set has the wrong ground size");
    sort_canonical(family);
    std::unordered_set<PointSet, PointSetHash> lookup(family.begin(), family.end());
    if (!lookup.count(PointSet(n))) throw InvalidInput("topology axiom violated: empty set is not open");
    if (!lookup.count(PointSet::full(n)))
      throw InvalidInput("topology axiom violated: whole space is not open");
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (!lookup.count(family[i] | family[j]))
          throw InvalidInput("topology axiom violated: union of " + t.format(family[i]) + " and " +
                             t.format(family[j]) + " is not open");
        if (!lookup.count(family[i] & family[j]))
          throw InvalidInput("topology axiom violated: intersection of " + t.format(family[i]) +
                             " and " + t.format(family[j]) + " is not open");
      }
    for (std::size_t x = 0; x < n; ++x) {
      auto nb = PointSet::full(n);
      for (const auto& u : family)
        if (u.contains(x)) nb &= u;
      t.nbhd_.push_back(std::move(nb));
    }
    t.opens_ = std::make_shared<const std::vector<PointSet>>(std::move(family));
    return t;
  }

  /// The topology generated by `subbasis` (closure under finite unions and
  /// intersections, with the empty and full sets added).
  static TopSpace from_subbasis(std::vector<std::string> names, const std::vector<PointSet>& subbasis) {
    TopSpace t(std::move(names));
    const auto n = t.size();
    t.nbhd_.assign(n, PointSet::full(n));
    for (const auto& b : subbasis) {
      if (b.ground_size() != n) throw InvalidInput("subbasis set has the wrong ground size");
      b.for_each([&](std::size_t x) { t.nbhd_[x] &= b; });
    }
    return t;
  }

  /// The Alexandroff topology of a preorder: opens are its up-sets.
  static TopSpace alexandroff(const Preorder& order) {
    TopSpace t(order.names());
    t.nbhd_ = order.up_rows();
    return t;
  }

  /// Adopts minimal neighbourhoods directly; each must contain its point and
  /// be a union of neighbourhoods.
  static TopSpace from_neighbourhoods(std::vector<std::string> names, std::vector<PointSet> nbhd) {
    TopSpace t(std::move(names));
    if (nbhd.size() != t.size()) throw InvalidInput("neighbourhood count does not match points");
    for (std::size_t x = 0; x < nbhd.size(); ++x) {
      if (nbhd[x].ground_size() != t.size() || !nbhd[x].contains(x))
        throw InvalidInput("neighbourhood of '" + t.names_[x] + "' does not contain it");
    }
    for (std::size_t x = 0; x < nbhd.size(); ++x)
      nbhd[x].for_each([&](std::size_t y) {
        if (!nbhd[y].is_subset_of(nbhd[x]))
          throw InvalidInput("neighbourhood of '" + t.names_[x] + "' is not open");
      });
    t.nbhd_ = std::move(nbhd);
    return t;
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(const std::string& id) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == id) return i;
    return std::nullopt;
  }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return PointSet::full(size()); }

  /// Smallest open set containing `x`.
  const PointSet& neighbourhood(std::size_t x) const { return nbhd_.at(x); }
  const std::vector<PointSet>& neighbourhoods() const { return nbhd_; }

  bool is_open(const PointSet& s) const {
    check(s);
    bool open = true;
    s.for_each([&](std::size_t x) { open = open && nbhd_[x].is_subset_of(s); });
    return open;
  }

  bool is_closed(const PointSet& s) const { return is_open(s.complement()); }

  /// Points every neighbourhood of which meets `s`.
  PointSet closure(const PointSet& s) const {
    check(s);
    PointSet out(size());
    for (std::size_t x = 0; x < size(); ++x)
      if (nbhd_[x].intersects(s)) out.insert(x);
    return out;
  }

  PointSet point_closure(std::size_t x) const { return closure(PointSet::singleton(size(), x)); }

  /// Smallest open set containing `s`.
  PointSet open_hull(const PointSet& s) const {
    check(s);
    PointSet out(size());
    s.for_each([&](std::size_t x) { out |= nbhd_[x]; });
    return out;
  }

  /// x <= y iff x lies in the closure of {y}, i.e. y is in every open around x.
  Preorder specialization_preorder() const { return Preorder::from_up_rows(names_, nbhd_); }

  bool has_explicit_opens() const { return opens_ != nullptr; }

  /// The stored family; only valid when has_explicit_opens().
  const std::vector<PointSet>& opens() const {
    if (!opens_) throw Error("topology has no materialized open family");
    return *opens_;
  }

  /// All opens in canonical order, enumerated as up-sets of the minimal
  /// neighbourhood preorder when not stored. Empty when more than `cap`.
  std::optional<std::vector<PointSet>> enumerate_opens(std::size_t cap) const {
    if (opens_) {
      if (opens_->size() > cap) return std::nullopt;
      return *opens_;
    }
    try {
      return up_sets(specialization_preorder(), cap);
    } catch (const ResourceError&) {
      return std::nullopt;
    }
  }

  /// Copy with the open family materialized; throws ResourceError beyond `cap`.
  TopSpace materialized(std::size_t cap) const {
    if (opens_) return *this;
    auto family = enumerate_opens(cap);
    if (!family) throw ResourceError("space has more than " + std::to_string(cap) + " open sets");
    TopSpace t = *this;
    t.opens_ = std::make_shared<const std::vector<PointSet>>(std::move(*family));
    return t;
  }

  /// Same points and same topology.
  friend bool operator==(const TopSpace& a, const TopSpace& b) {
    return a.names_ == b.names_ && a.nbhd_ == b.nbhd_;
  }

  std::string format(const PointSet& s) const { return format_set(names_, s); }

 private:
  explicit TopSpace(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InvalidInput("space must have at least one point");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_)
      if (!seen.insert(n).second) throw InvalidInput("duplicate point identifier '" + n + "'");
  }

  void check(const PointSet& s) const {
    if (s.ground_size() != size())
      throw InvalidInput("size mismatch: set over " + std::to_string(s.ground_size()) +
                         " points, space has " + std::to_string(size()));
  }

  std::vector<std::string> names_;
  std::vector<PointSet> nbhd_;
  std::shared_ptr<const std::vector<PointSet>> opens_;
};

}  // namespace smyth
