#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "smyth/error.hpp"

namespace smyth {

/// A subset of the ground set {0, ..., ground_size-1}, stored as a bit vector.
///
/// PointSet is the common currency of every finite module: opens, closed
/// sets, compact sets and families of power-space elements are all
/// PointSets over the appropriate ground. Binary operations require equal
/// ground sizes and throw InvalidInput otherwise.
class PointSet {
 public:
  PointSet() = default;

  explicit PointSet(std::size_t ground_size)
      : n_(ground_size), words_((ground_size + 63) / 64, 0) {}

  static PointSet full(std::size_t ground_size) {
    PointSet s(ground_size);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static PointSet singleton(std::size_t ground_size, std::size_t i) {
    PointSet s(ground_size);
    s.insert(i);
    return s;
  }

  static PointSet of(std::size_t ground_size, std::initializer_list<std::size_t> members) {
    PointSet s(ground_size);
    for (auto i : members) s.insert(i);
    return s;
  }

  template <class Range>
  static PointSet from(std::size_t ground_size, const Range& members) {
    PointSet s(ground_size);
    for (auto i : members) s.insert(static_cast<std::size_t>(i));
    return s;
  }

  /// Builds the set whose members are the set bits of `mask` (ground <= 64).
  static PointSet from_mask(std::size_t ground_size, std::uint64_t mask) {
    PointSet s(ground_size);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t ground_size() const { return n_; }

  bool contains(std::size_t i) const {
    return i < n_ && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
  }

  PointSet& insert(std::size_t i) {
    check_index(i);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
    return *this;
  }

  PointSet& erase(std::size_t i) {
    check_index(i);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    return *this;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  bool is_full() const { return *this == full(n_); }

  bool is_subset_of(const PointSet& other) const {
    check_ground(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    return true;
  }

  bool intersects(const PointSet& other) const {
    check_ground(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & other.words_[k]) != 0) return true;
    return false;
  }

  PointSet complement() const {
    PointSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  PointSet& operator|=(const PointSet& o) {
    check_ground(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  PointSet& operator&=(const PointSet& o) {
    check_ground(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  PointSet& operator-=(const PointSet& o) {
    check_ground(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  /// Smallest member at or after `from`.
  std::optional<std::size_t> next(std::size_t from = 0) const {
    if (from >= n_) return std::nullopt;
    std::size_t k = from / 64;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (w != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == words_.size()) return std::nullopt;
      w = words_[k];
    }
  }

  std::optional<std::size_t> first() const { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Low 64 bits; meaningful only for grounds of at most 64 points.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL ^ n_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend auto operator<=>(const PointSet&, const PointSet&) = default;

 private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  void check_index(std::size_t i) const {
    if (i >= n_)
      throw InvalidInput("point index " + std::to_string(i) + " outside ground of size " +
                         std::to_string(n_));
  }

  void check_ground(const PointSet& o) const {
    if (o.n_ != n_)
      throw InvalidInput("size mismatch: sets over grounds of size " + std::to_string(n_) +
                         " and " + std::to_string(o.n_));
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the increasing member lists: {0} < {0,1} < {1}.
inline bool lex_less(const PointSet& a, const PointSet& b) {
  if (a == b) return false;
  auto d = ((a - b) | (b - a)).first();
  // Members below d agree; whichever set owns d has the smaller next member,
  // unless the other set has run out, in which case the other is a prefix.
  if (a.contains(*d)) return b.next(*d).has_value();
  return !a.next(*d).has_value();
}

/// Cardinality first, then lexicographic. Used for every reported list.
inline bool canonical_less(const PointSet& a, const PointSet& b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

inline void sort_canonical(std::vector<PointSet>& family) {
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

/// "{a,b}" with members named from `names`.
inline std::string format_set(const std::vector<std::string>& names, const PointSet& s) {
  std::string out = "{";
  s.for_each([&](std::size_t i) {
    if (out.size() > 1) out += ",";
    out += names.at(i);
  });
  return out + "}";
}

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

}  // namespace smyth
