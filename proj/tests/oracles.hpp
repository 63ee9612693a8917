#pragma once

// Brute-force reference implementations over bitmasks. Nothing here calls the
// library's deciders; the only shared code is the conversion at the bottom.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "smyth/point_set.hpp"
#include "smyth/poset.hpp"
#include "smyth/top_space.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool has(Mask s, int i) { return (s >> i) & 1; }
inline Mask full(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// up[x] is the mask of everything above x.
struct Order {
  int n = 0;
  std::vector<Mask> up;
  bool leq(int x, int y) const { return has(up[x], y); }
};

inline Order reflexive_transitive(int n, const std::vector<std::pair<int, int>>& edges) {
  Order o{n, std::vector<Mask>(n)};
  for (int i = 0; i < n; ++i) o.up[i] = Mask{1} << i;
  for (auto [a, b] : edges) o.up[a] |= Mask{1} << b;
  // Warshall.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (has(o.up[i], k)) o.up[i] |= o.up[k];
  return o;
}

inline bool is_up_set(const Order& o, Mask s) {
  for (int x = 0; x < o.n; ++x)
    if (has(s, x) && !subset(o.up[x], s)) return false;
  return true;
}

inline std::vector<Mask> up_sets(const Order& o) {
  std::vector<Mask> out;
  for (Mask s = 0; s <= full(o.n); ++s)
    if (is_up_set(o, s)) out.push_back(s);
  return out;
}

inline Mask upper_bounds(const Order& o, Mask s) {
  Mask out = full(o.n);
  for (int x = 0; x < o.n; ++x)
    if (has(s, x)) out &= o.up[x];
  return out;
}

inline std::optional<int> least(const Order& o, Mask s) {
  for (int x = 0; x < o.n; ++x)
    if (has(s, x) && subset(s, o.up[x])) return x;
  return std::nullopt;
}

inline std::optional<int> sup(const Order& o, Mask s) { return least(o, upper_bounds(o, s)); }

inline bool directed(const Order& o, Mask d) {
  if (d == 0) return false;
  for (int x = 0; x < o.n; ++x)
    for (int y = 0; y < o.n; ++y)
      if (has(d, x) && has(d, y) && (o.up[x] & o.up[y] & d) == 0) return false;
  return true;
}

/// Scott opens straight from the definition: up-sets inaccessible by
/// directed suprema. 4^n; keep n small.
inline std::vector<Mask> scott_opens(const Order& o) {
  std::vector<Mask> dirs;
  for (Mask d = 1; d <= full(o.n); ++d)
    if (directed(o, d)) dirs.push_back(d);
  std::vector<Mask> out;
  for (Mask u = 0; u <= full(o.n); ++u) {
    if (!is_up_set(o, u)) continue;
    bool ok = true;
    for (Mask d : dirs) {
      auto s = sup(o, d);
      if (s && has(u, *s) && (d & u) == 0) ok = false;
    }
    if (ok) out.push_back(u);
  }
  return out;
}

/// A finite space as its full list of open masks.
struct Space {
  int n = 0;
  std::vector<Mask> opens;
};

/// Closes a family under binary unions and intersections and adds the empty
/// and full sets.
inline Space generate(int n, std::vector<Mask> family) {
  family.push_back(0);
  family.push_back(full(n));
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  for (bool grew = true; grew;) {
    grew = false;
    const auto size = family.size();
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j)
        for (Mask m : {family[i] | family[j], family[i] & family[j]})
          if (std::find(family.begin(), family.end(), m) == family.end()) {
            family.push_back(m);
            grew = true;
          }
  }
  std::sort(family.begin(), family.end());
  return {n, family};
}

inline bool is_open(const Space& sp, Mask s) { return std::find(sp.opens.begin(), sp.opens.end(), s) != sp.opens.end(); }
inline bool is_closed(const Space& sp, Mask s) { return is_open(sp, full(sp.n) & ~s); }

inline std::vector<Mask> closed_sets(const Space& sp) {
  std::vector<Mask> out;
  for (Mask u : sp.opens) out.push_back(full(sp.n) & ~u);
  std::sort(out.begin(), out.end());
  return out;
}

inline Mask closure(const Space& sp, Mask s) {
  Mask out = full(sp.n);
  for (Mask f : closed_sets(sp))
    if (subset(s, f)) out &= f;
  return out;
}

inline Mask saturation(const Space& sp, Mask s) {
  Mask out = full(sp.n);
  for (Mask u : sp.opens)
    if (subset(s, u)) out &= u;
  return out;
}

/// x <= y iff x lies in the closure of {y}.
inline bool spec_leq(const Space& sp, int x, int y) { return has(closure(sp, Mask{1} << y), x); }

inline Order specialization(const Space& sp) {
  Order o{sp.n, std::vector<Mask>(sp.n)};
  for (int x = 0; x < sp.n; ++x)
    for (int y = 0; y < sp.n; ++y)
      if (spec_leq(sp, x, y)) o.up[x] |= Mask{1} << y;
  return o;
}

inline bool t0(const Space& sp) {
  for (int x = 0; x < sp.n; ++x)
    for (int y = x + 1; y < sp.n; ++y)
      if (spec_leq(sp, x, y) && spec_leq(sp, y, x)) return false;
  return true;
}

/// Compactness by definition: every cover by opens has a finite subcover.
/// In a finite space every cover is finite, so this is always true; kept
/// literal to document the check.
inline bool compact(const Space& sp, Mask s) {
  Mask all = 0;
  for (Mask u : sp.opens) all |= u;
  return subset(s, all);
}

inline bool irreducible(const Space& sp, Mask a) {
  if (a == 0) return false;
  const auto closed = closed_sets(sp);
  for (Mask f : closed)
    for (Mask g : closed)
      if (subset(a, f | g) && !subset(a, f) && !subset(a, g)) return false;
  return true;
}

inline std::vector<Mask> irreducible_closed(const Space& sp) {
  std::vector<Mask> out;
  for (Mask f : closed_sets(sp))
    if (irreducible(sp, f)) out.push_back(f);
  return out;
}

inline bool sober(const Space& sp) {
  for (Mask f : irreducible_closed(sp)) {
    int generic = 0;
    for (int x = 0; x < sp.n; ++x)
      if (closure(sp, Mask{1} << x) == f) ++generic;
    if (generic != 1) return false;
  }
  return true;
}

/// Nonempty saturated compact sets, in increasing mask order.
inline std::vector<Mask> d_elements(const Space& sp) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= full(sp.n); ++s)
    if (saturation(sp, s) == s && compact(sp, s)) out.push_back(s);
  return out;
}

/// Every filtered family of saturated compact sets whose intersection lies
/// in an open U has a member inside U. Enumerates every subfamily of D(X).
inline bool well_filtered(const Space& sp) {
  const auto d = d_elements(sp);
  if (d.size() > 16) throw std::runtime_error("oracle: D(X) too large");
  for (Mask fam = 1; fam < (Mask{1} << d.size()); ++fam) {
    bool filt = true;
    for (std::size_t i = 0; i < d.size() && filt; ++i)
      for (std::size_t j = 0; j < d.size() && filt; ++j) {
        if (!has(fam, int(i)) || !has(fam, int(j))) continue;
        bool below = false;
        for (std::size_t k = 0; k < d.size(); ++k)
          if (has(fam, int(k)) && subset(d[k], d[i] & d[j])) below = true;
        filt = below;
      }
    if (!filt) continue;
    Mask meet = full(sp.n);
    for (std::size_t i = 0; i < d.size(); ++i)
      if (has(fam, int(i))) meet &= d[i];
    for (Mask u : sp.opens) {
      if (!subset(meet, u)) continue;
      bool inside = false;
      for (std::size_t i = 0; i < d.size(); ++i)
        if (has(fam, int(i)) && subset(d[i], u)) inside = true;
      if (!inside) return false;
    }
  }
  return true;
}

/// T0, every directed set of the specialization order has a sup, and every
/// open is Scott open.
inline bool d_space(const Space& sp) {
  if (!t0(sp)) return false;
  const auto o = specialization(sp);
  const auto scott = scott_opens(o);
  for (Mask d = 1; d <= full(sp.n); ++d)
    if (directed(o, d) && !sup(o, d)) return false;
  for (Mask u : sp.opens)
    if (std::find(scott.begin(), scott.end(), u) == scott.end()) return false;
  return true;
}

/// D(X) with the upper Vietoris topology, as a space on element indices.
struct Upper {
  std::vector<Mask> elements;
  Space uv;
};

inline Upper upper(const Space& sp) {
  Upper r;
  r.elements = d_elements(sp);
  const int m = int(r.elements.size());
  if (m > 20) throw std::runtime_error("oracle: D(X) too large");
  std::vector<Mask> boxes;
  for (Mask u : sp.opens) {
    Mask b = 0;
    for (int i = 0; i < m; ++i)
      if (subset(r.elements[i], u)) b |= Mask{1} << i;
    boxes.push_back(b);
  }
  r.uv = generate(m, boxes);
  return r;
}

/// Minimal closed subsets of `c` meeting every mask in `family`.
inline std::vector<Mask> minimal_meeting(const Space& sp, const std::vector<Mask>& family, Mask c) {
  std::vector<Mask> hits;
  for (Mask f : closed_sets(sp)) {
    if (!subset(f, c)) continue;
    bool all = true;
    for (Mask k : family) all = all && (k & f);
    if (all) hits.push_back(f);
  }
  std::vector<Mask> out;
  for (Mask f : hits) {
    bool minimal = true;
    for (Mask g : hits)
      if (g != f && subset(g, f)) minimal = false;
    if (minimal) out.push_back(f);
  }
  return out;
}

// Conversions to and from the library's types.

inline std::vector<std::string> names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

inline smyth::PointSet to_set(int n, Mask m) { return smyth::PointSet::from_mask(n, m); }

inline Mask to_mask(const smyth::PointSet& s) {
  Mask m = 0;
  s.for_each([&](std::size_t i) { m |= Mask{1} << i; });
  return m;
}

inline smyth::TopSpace to_space(const Space& sp) {
  std::vector<smyth::PointSet> opens;
  for (Mask u : sp.opens) opens.push_back(to_set(sp.n, u));
  return smyth::TopSpace::from_opens(names(sp.n), std::move(opens));
}

inline smyth::Poset to_poset(const Order& o) {
  std::vector<smyth::PointSet> rows;
  for (Mask u : o.up) rows.push_back(to_set(o.n, u));
  return smyth::Poset::from_up_rows(names(o.n), std::move(rows));
}

inline Order from_poset(const smyth::Preorder& p) {
  Order o{int(p.size()), {}};
  for (std::size_t x = 0; x < p.size(); ++x) o.up.push_back(to_mask(p.up(x)));
  return o;
}

// Seeded generators.

/// Random DAG on n nodes closed transitively.
inline Order random_order(int n, std::mt19937_64& rng, int density_percent = 35) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  std::shuffle(label.begin(), label.end(), rng);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (int(rng() % 100) < density_percent) edges.emplace_back(label[i], label[j]);
  return reflexive_transitive(n, edges);
}

/// Random topology generated by a few random subsets; often not T0.
inline Space random_space(int n, std::mt19937_64& rng) {
  std::vector<Mask> sub;
  const int count = 1 + int(rng() % 4);
  for (int i = 0; i < count; ++i) sub.push_back(rng() & full(n));
  return generate(n, sub);
}

inline Space alexandroff(const Order& o) { return {o.n, up_sets(o)}; }

}  // namespace oracle
