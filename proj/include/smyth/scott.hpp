#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smyth/enumerate.hpp"
#include "smyth/limits.hpp"
#include "smyth/poset.hpp"
#include "smyth/top_space.hpp"

namespace smyth {

struct DirectedSubset {
  PointSet members;
  std::optional<std::size_t> sup;
};

/// Every directed subset of `p`, with its supremum when one exists.
inline std::vector<DirectedSubset> directed_subsets(const Poset& p, const Limits& limits = {}) {
  if (p.size() > limits.directed_subset_points)
    throw ResourceError("directed-subset enumeration over " + std::to_string(p.size()) +
                        " points exceeds the limit of " +
                        std::to_string(limits.directed_subset_points));
  std::vector<DirectedSubset> out;
  for_each_subset(p.size(), [&](const PointSet& d) {
    if (p.is_directed(d)) out.push_back({d, p.sup(d)});
  });
  return out;
}

/// Whether `u` is Scott open: an up-set that every directed set with
/// supremum in `u` already meets.
inline bool is_scott_open(const Poset& p, const std::vector<DirectedSubset>& directed,
                          const PointSet& u) {
  if (!p.is_up_set(u)) return false;
  for (const auto& d : directed)
    if (d.sup && u.contains(*d.sup) && !d.members.intersects(u)) return false;
  return true;
}

/// The Scott topology, computed from its definition by quantifying over all
/// directed subsets. Exponential; limited by `limits.directed_subset_points`.
inline TopSpace scott_topology(const Poset& p, const Limits& limits = {}) {
  auto directed = directed_subsets(p, limits);
  std::vector<PointSet> opens;
  for_each_subset(p.size(), [&](const PointSet& u) {
    if (is_scott_open(p, directed, u)) opens.push_back(u);
  });
  return TopSpace::from_opens(p.names(), std::move(opens));
}

/// All up-sets as opens. The family is materialized when it has at most
/// `cap` members and left implicit otherwise.
inline TopSpace alexandroff_topology(const Preorder& p, std::size_t cap = 4096) {
  auto t = TopSpace::alexandroff(p);
  if (auto family = t.enumerate_opens(cap)) return TopSpace::from_opens(p.names(), std::move(*family));
  return t;
}

}  // namespace smyth
