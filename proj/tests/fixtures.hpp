#pragma once

#include <string>
#include <vector>

#include "smyth/smyth.hpp"

namespace fixtures {

using smyth::PointSet;
using smyth::Poset;
using smyth::TopSpace;

inline Poset chain(std::size_t n) {
  std::vector<smyth::Pair> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) gens.emplace_back(i, i + 1);
  return Poset::from_generators(smyth::numbered_names(n), gens);
}

/// 0 < 1.
inline Poset chain2() { return Poset::from_named_generators({"0", "1"}, {{"0", "1"}}); }

/// 0 < a, b < 1.
inline Poset diamond() {
  return Poset::from_named_generators({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

inline Poset antichain2() { return Poset::from_generators({"a", "b"}, {}); }

inline TopSpace discrete(std::size_t n, std::vector<std::string> names = {}) {
  if (names.empty()) names = n == 2 ? std::vector<std::string>{"a", "b"} : smyth::numbered_names(n);
  std::vector<PointSet> opens;
  smyth::for_each_subset(n, [&](const PointSet& s) { opens.push_back(s); });
  return TopSpace::from_opens(std::move(names), std::move(opens));
}

inline TopSpace indiscrete2() {
  return TopSpace::from_opens({"a", "b"}, {PointSet(2), PointSet::full(2)});
}

inline TopSpace sierpinski() {
  return TopSpace::from_opens({"0", "1"}, {PointSet(2), PointSet::of(2, {1}), PointSet::full(2)});
}

inline TopSpace scott(const Poset& p) { return smyth::scott_topology(p); }

/// Points of `t` named in `ids`.
inline PointSet set(const TopSpace& t, std::initializer_list<const char*> ids) {
  PointSet s(t.size());
  for (auto id : ids) s.insert(*t.index_of(id));
  return s;
}

inline PointSet set(const Poset& p, std::initializer_list<const char*> ids) {
  PointSet s(p.size());
  for (auto id : ids) s.insert(*p.index_of(id));
  return s;
}

}  // namespace fixtures
