#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "smyth/enumerate.hpp"
#include "smyth/error.hpp"
#include "smyth/point_set.hpp"
#include "smyth/top_space.hpp"

namespace smyth {

/// A subset of a countably infinite ground set given by a finite list: the
/// members (Finite) or the excluded points (CoFinite).
class SymbolicSet {
 public:
  enum class Kind { finite, cofinite };

  SymbolicSet() = default;

  static SymbolicSet finite(std::vector<std::uint64_t> members) { return {Kind::finite, std::move(members)}; }
  static SymbolicSet cofinite(std::vector<std::uint64_t> excluded) { return {Kind::cofinite, std::move(excluded)}; }
  static SymbolicSet empty() { return finite({}); }
  static SymbolicSet full() { return cofinite({}); }
  static SymbolicSet point(std::uint64_t x) { return finite({x}); }
  /// {0, ..., n-1}.
  static SymbolicSet prefix(std::uint64_t n) { return finite(range(n)); }
  /// {n, n+1, ...}.
  static SymbolicSet tail(std::uint64_t n) { return cofinite(range(n)); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_cofinite() const { return kind_ == Kind::cofinite; }
  const std::vector<std::uint64_t>& support() const { return support_; }

  bool empty_set() const { return is_finite() && support_.empty(); }
  bool full_set() const { return is_cofinite() && support_.empty(); }

  bool contains(std::uint64_t x) const {
    return std::binary_search(support_.begin(), support_.end(), x) == is_finite();
  }

  SymbolicSet complement() const { return {is_finite() ? Kind::cofinite : Kind::finite, support_}; }

  SymbolicSet operator|(const SymbolicSet& o) const {
    if (is_finite() && o.is_finite()) return finite(merge(support_, o.support_));
    if (is_cofinite() && o.is_cofinite()) return cofinite(common(support_, o.support_));
    const auto& f = is_finite() ? *this : o;
    const auto& c = is_finite() ? o : *this;
    return cofinite(minus(c.support_, f.support_));
  }

  SymbolicSet operator&(const SymbolicSet& o) const {
    if (is_finite() && o.is_finite()) return finite(common(support_, o.support_));
    if (is_cofinite() && o.is_cofinite()) return cofinite(merge(support_, o.support_));
    const auto& f = is_finite() ? *this : o;
    const auto& c = is_finite() ? o : *this;
    return finite(minus(f.support_, c.support_));
  }

  SymbolicSet operator-(const SymbolicSet& o) const { return *this & o.complement(); }

  /// Over an infinite ground a cofinite set is never inside a finite one.
  bool is_subset_of(const SymbolicSet& o) const { return (*this - o).empty_set(); }

  bool intersects(const SymbolicSet& o) const { return !(*this & o).empty_set(); }

  /// Least member; the set must be nonempty.
  std::uint64_t min() const {
    if (is_finite()) {
      if (support_.empty()) throw InvalidInput("empty set has no least member");
      return support_.front();
    }
    std::uint64_t x = 0;
    for (auto e : support_) {
      if (e != x) break;
      ++x;
    }
    return x;
  }

  /// Members inside {0, ..., n-1}.
  PointSet restrict(std::size_t n) const {
    PointSet out(n);
    for (std::size_t x = 0; x < n; ++x)
      if (contains(x)) out.insert(x);
    return out;
  }

  static SymbolicSet from_points(const PointSet& s) {
    const auto members = s.members();
    return finite(std::vector<std::uint64_t>(members.begin(), members.end()));
  }

  friend bool operator==(const SymbolicSet&, const SymbolicSet&) = default;

  std::string to_string() const {
    std::string out = is_finite() ? "Finite{" : "CoFinite{";
    for (std::size_t i = 0; i < support_.size(); ++i) out += (i ? "," : "") + std::to_string(support_[i]);
    return out + "}";
  }

 private:
  SymbolicSet(Kind kind, std::vector<std::uint64_t> support) : kind_(kind), support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  }

  static std::vector<std::uint64_t> range(std::uint64_t n) {
    std::vector<std::uint64_t> v(n);
    for (std::uint64_t i = 0; i < n; ++i) v[i] = i;
    return v;
  }
  static std::vector<std::uint64_t> merge(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static std::vector<std::uint64_t> common(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static std::vector<std::uint64_t> minus(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  Kind kind_ = Kind::finite;
  std::vector<std::uint64_t> support_;
};

enum class SymbolicOp { union_, intersection, relative_complement };

inline SymbolicSet symbolic_algebra(const SymbolicSet& a, const SymbolicSet& b, SymbolicOp op) {
  switch (op) {
    case SymbolicOp::union_: return a | b;
    case SymbolicOp::intersection: return a & b;
    default: return a - b;
  }
}

inline nlohmann::json to_json(const SymbolicSet& s) {
  return {{"kind", s.is_finite() ? "Finite" : "CoFinite"}, {"support", s.support()}};
}

/// Parses {"kind": "Finite"|"CoFinite", "support": [naturals]}. Throws
/// InvalidInput naming `field` on any other shape.
inline SymbolicSet symbolic_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("support") || !j["kind"].is_string() ||
      !j["support"].is_array())
    throw InvalidInput("field '" + field + "' must be {\"kind\", \"support\"}");
  std::vector<std::uint64_t> support;
  for (const auto& x : j["support"]) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0))
      throw InvalidInput("field '" + field + ".support' must list naturals");
    support.push_back(x.get<std::uint64_t>());
  }
  const auto kind = j["kind"].get<std::string>();
  if (kind == "Finite") return SymbolicSet::finite(std::move(support));
  if (kind == "CoFinite") return SymbolicSet::cofinite(std::move(support));
  throw InvalidInput("field '" + field + ".kind' must be Finite or CoFinite, not '" + kind + "'");
}

/// One of the countable gallery spaces, each with decidable predicates on
/// Finite/CoFinite sets.
///
///   nat-alexandroff          N with the Alexandroff (= Scott) topology of
///                            its usual order: opens are the up-sets.
///   nat-cofinite             N with the cofinite topology.
///   omega-cocountable-model  An uncountable set with the co-countable
///                            topology, read through the same algebra:
///                            Finite stands for countable, CoFinite for
///                            co-countable.
class SymbolicSpace {
 public:
  enum class Name { nat_alexandroff, nat_cofinite, omega_cocountable };

  explicit SymbolicSpace(Name name) : name_(name) {}

  static SymbolicSpace named(const std::string& id) {
    if (id == "nat-alexandroff") return SymbolicSpace(Name::nat_alexandroff);
    if (id == "nat-cofinite") return SymbolicSpace(Name::nat_cofinite);
    if (id == "omega-cocountable-model") return SymbolicSpace(Name::omega_cocountable);
    throw InvalidInput("unknown gallery space '" + id +
                       "' (expected nat-alexandroff, nat-cofinite or omega-cocountable-model)");
  }

  static std::vector<std::string> names() { return {"nat-alexandroff", "nat-cofinite", "omega-cocountable-model"}; }

  Name kind() const { return name_; }

  std::string id() const {
    switch (name_) {
      case Name::nat_alexandroff: return "nat-alexandroff";
      case Name::nat_cofinite: return "nat-cofinite";
      default: return "omega-cocountable-model";
    }
  }

  bool is_open(const SymbolicSet& s) const {
    if (s.empty_set()) return true;
    if (s.is_finite()) return false;
    if (name_ != Name::nat_alexandroff) return true;
    // An up-set of N excludes an initial segment.
    const auto& e = s.support();
    return e.empty() || e.back() + 1 == e.size();
  }

  bool is_closed(const SymbolicSet& s) const { return is_open(s.complement()); }

  /// Smallest closed superset.
  SymbolicSet closure(const SymbolicSet& s) const {
    if (s.empty_set()) return s;
    if (s.is_cofinite()) return SymbolicSet::full();
    if (name_ == Name::nat_alexandroff) return SymbolicSet::prefix(s.support().back() + 1);
    return s;
  }

  /// Intersection of the opens containing `s`.
  SymbolicSet saturation(const SymbolicSet& s) const {
    if (name_ != Name::nat_alexandroff || s.empty_set()) return s;
    return SymbolicSet::tail(s.min());
  }

  bool is_saturated(const SymbolicSet& s) const { return saturation(s) == s; }

  /// Compactness of the described set. In N with either topology every
  /// subset is compact: an Alexandroff cover has a member containing the
  /// up-set of the least point, and a cofinite cover has a member missing
  /// only finitely many points. In the co-countable model exactly the
  /// finite sets are compact.
  bool is_compact(const SymbolicSet& s) const {
    if (name_ == Name::omega_cocountable) return s.is_finite();
    return true;
  }

  /// x <= y in the specialization order.
  bool leq(std::uint64_t x, std::uint64_t y) const { return closure(SymbolicSet::point(y)).contains(x); }

  /// The subspace {0, ..., n} as a finite space, with points named "0".."n".
  /// S is relatively open iff S itself or S together with every point
  /// above n is open; these two candidates cover every open of the three
  /// spaces.
  TopSpace restrict(std::size_t n) const {
    if (n > 12) throw InvalidInput("restriction is limited to {0..12}");
    const auto size = n + 1;
    std::vector<PointSet> opens;
    for_each_subset(size, [&](const PointSet& s) {
      auto as_finite = SymbolicSet::from_points(s);
      auto padded = as_finite | SymbolicSet::tail(size);
      if (is_open(as_finite) || is_open(padded)) opens.push_back(s);
    });
    std::vector<std::string> names;
    for (std::size_t i = 0; i < size; ++i) names.push_back(std::to_string(i));
    return TopSpace::from_opens(std::move(names), std::move(opens));
  }

 private:
  Name name_;
};

}  // namespace smyth
