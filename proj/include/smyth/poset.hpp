#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "smyth/error.hpp"
#include "smyth/point_set.hpp"

namespace smyth {

using Pair = std::pair<std::size_t, std::size_t>;

/// A reflexive, transitive relation on a finite carrier of named elements.
///
/// Elements are dense indices in input order; `up(x)` is {y : x <= y} and
/// `down(x)` is {y : y <= x}. Construction takes generators and closes them.
class Preorder {
 public:
  Preorder() = default;

  /// Reflexive-transitive closure of `generators` over `names`.
  static Preorder from_generators(std::vector<std::string> names,
                                  const std::vector<Pair>& generators) {
    Preorder p(std::move(names));
    const auto n = p.size();
    for (auto [x, y] : generators) {
      if (x >= n || y >= n) throw InvalidInput("order generator references unknown element");
      p.up_[x].insert(y);
    }
    // Warshall over bit rows.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (p.up_[i].contains(k)) p.up_[i] |= p.up_[k];
    p.rebuild_down();
    return p;
  }

  /// Adopts `up` rows as-is after verifying reflexivity and transitivity.
  static Preorder from_up_rows(std::vector<std::string> names, std::vector<PointSet> up) {
    Preorder p(std::move(names));
    if (up.size() != p.size()) throw InvalidInput("relation row count does not match carrier");
    for (std::size_t x = 0; x < up.size(); ++x) {
      if (up[x].ground_size() != p.size()) throw InvalidInput("relation row has wrong width");
      if (!up[x].contains(x))
        throw InvalidInput("relation is not reflexive at '" + p.names_[x] + "'");
    }
    for (std::size_t x = 0; x < up.size(); ++x)
      up[x].for_each([&](std::size_t y) {
        if (!up[y].is_subset_of(up[x]))
          throw InvalidInput("relation is not transitive through '" + p.names_[y] + "'");
      });
    p.up_ = std::move(up);
    p.rebuild_down();
    return p;
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool leq(std::size_t x, std::size_t y) const { return up_[x].contains(y); }
  const PointSet& up(std::size_t x) const { return up_[x]; }
  const PointSet& down(std::size_t x) const { return down_[x]; }
  const std::vector<PointSet>& up_rows() const { return up_; }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return PointSet::full(size()); }

  PointSet up_set(const PointSet& s) const {
    check(s);
    PointSet out(size());
    s.for_each([&](std::size_t x) { out |= up_[x]; });
    return out;
  }

  PointSet down_set(const PointSet& s) const {
    check(s);
    PointSet out(size());
    s.for_each([&](std::size_t x) { out |= down_[x]; });
    return out;
  }

  bool is_up_set(const PointSet& s) const { return up_set(s) == s; }
  bool is_down_set(const PointSet& s) const { return down_set(s) == s; }

  PointSet upper_bounds(const PointSet& s) const {
    check(s);
    auto out = full_set();
    s.for_each([&](std::size_t x) { out &= up_[x]; });
    return out;
  }

  PointSet lower_bounds(const PointSet& s) const {
    check(s);
    auto out = full_set();
    s.for_each([&](std::size_t x) { out &= down_[x]; });
    return out;
  }

  /// Nonempty, and every pair of members has an upper bound inside `s`.
  bool is_directed(const PointSet& s) const {
    check(s);
    if (s.empty()) return false;
    auto members = s.members();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!(up_[members[i]] & up_[members[j]]).intersects(s)) return false;
    return true;
  }

  bool is_filtered(const PointSet& s) const {
    check(s);
    if (s.empty()) return false;
    auto members = s.members();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!(down_[members[i]] & down_[members[j]]).intersects(s)) return false;
    return true;
  }

  bool equivalent(std::size_t x, std::size_t y) const { return leq(x, y) && leq(y, x); }

  /// First pair x < y (by index) with x <= y <= x, if any.
  std::optional<Pair> antisymmetry_failure() const {
    for (std::size_t x = 0; x < size(); ++x) {
      auto y = (up_[x] & down_[x]).next(x + 1);
      if (y) return Pair{x, *y};
    }
    return std::nullopt;
  }

  /// Least index of each equivalence class.
  bool is_class_representative(std::size_t x) const {
    auto first = (up_[x] & down_[x]).first();
    return first && *first == x;
  }

  PointSet minimal(const PointSet& s) const {
    check(s);
    PointSet out(size());
    s.for_each([&](std::size_t x) {
      if ((down_[x] & s).is_subset_of(up_[x])) out.insert(x);
    });
    return out;
  }

  PointSet maximal(const PointSet& s) const {
    check(s);
    PointSet out(size());
    s.for_each([&](std::size_t x) {
      if ((up_[x] & s).is_subset_of(down_[x])) out.insert(x);
    });
    return out;
  }

  friend bool operator==(const Preorder& a, const Preorder& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 protected:
  explicit Preorder(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InvalidInput("carrier must be nonempty");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second)
        throw InvalidInput("duplicate element identifier '" + names_[i] + "'");
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
      up_.push_back(PointSet::singleton(names_.size(), i));
  }

  void rebuild_down() {
    down_.assign(size(), PointSet(size()));
    for (std::size_t x = 0; x < size(); ++x)
      up_[x].for_each([&](std::size_t y) { down_[y].insert(x); });
  }

  void check(const PointSet& s) const {
    if (s.ground_size() != size())
      throw InvalidInput("size mismatch: set over " + std::to_string(s.ground_size()) +
                         " points, order over " + std::to_string(size()));
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
};

/// A finite partial order: a preorder whose antisymmetry has been verified.
class Poset : public Preorder {
 public:
  Poset() = default;

  static Poset from_generators(std::vector<std::string> names,
                               const std::vector<Pair>& generators) {
    return Poset(Preorder::from_generators(std::move(names), generators));
  }

  static Poset from_named_generators(
      std::vector<std::string> names,
      const std::vector<std::pair<std::string, std::string>>& generators) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
    std::vector<Pair> idx;
    for (const auto& [a, b] : generators) {
      auto x = index.find(a), y = index.find(b);
      if (x == index.end()) throw InvalidInput("order generator names unknown element '" + a + "'");
      if (y == index.end()) throw InvalidInput("order generator names unknown element '" + b + "'");
      idx.emplace_back(x->second, y->second);
    }
    return from_generators(std::move(names), idx);
  }

  static Poset from_up_rows(std::vector<std::string> names, std::vector<PointSet> up) {
    return Poset(Preorder::from_up_rows(std::move(names), std::move(up)));
  }

  /// Rejects `p` when two distinct elements are equivalent.
  explicit Poset(Preorder p) : Preorder(std::move(p)) {
    if (auto bad = antisymmetry_failure())
      throw InvalidInput("order is not antisymmetric: '" + name(bad->first) + "' and '" +
                         name(bad->second) + "' are below each other");
  }

  /// Least upper bound; the empty set's supremum is the least element.
  std::optional<std::size_t> sup(const PointSet& s) const { return least_of(upper_bounds(s)); }

  std::optional<std::size_t> inf(const PointSet& s) const {
    return greatest_of(lower_bounds(s));
  }

  std::optional<std::size_t> least_of(const PointSet& s) const {
    std::optional<std::size_t> found;
    s.for_each([&](std::size_t x) {
      if (!found && s.is_subset_of(up_[x])) found = x;
    });
    return found;
  }

  std::optional<std::size_t> greatest_of(const PointSet& s) const {
    std::optional<std::size_t> found;
    s.for_each([&](std::size_t x) {
      if (!found && s.is_subset_of(down_[x])) found = x;
    });
    return found;
  }

  std::optional<std::size_t> bottom() const { return least_of(full_set()); }
  std::optional<std::size_t> top() const { return greatest_of(full_set()); }

  /// First pair (by index) lacking a join or a meet, if any.
  std::optional<Pair> lattice_failure() const {
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = x + 1; y < size(); ++y) {
        auto s = PointSet::of(size(), {x, y});
        if (!sup(s) || !inf(s)) return Pair{x, y};
      }
    return std::nullopt;
  }
};

}  // namespace smyth
