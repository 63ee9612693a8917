#pragma once

#include <cstddef>
#include <string>

namespace smyth {

/// How a decider reaches its verdict.
///
/// `definitional` quantifies literally over the objects in the definition
/// (closed pairs, directed subsets, filtered families). `structural` uses the
/// fact that a finite topology is the Alexandroff topology of its
/// specialization preorder. `automatic` picks definitional whenever the
/// enumeration fits the budgets below.
enum class Method { automatic, definitional, structural };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::definitional: return "exhaustive";
    case Method::structural: return "finite-structure";
    default: return "automatic";
  }
}

struct Limits {
  /// Maximum number of power-space elements.
  std::size_t element_cap = 8192;
  /// Generators per filtered family in the bounded well-filteredness search.
  std::size_t family_bound = 4;
  /// Enumerate every subfamily of D(X) instead (only when |D(X)| <= 16).
  bool exhaustive_families = false;
  /// Largest open family the definitional deciders will enumerate.
  std::size_t definitional_opens = 256;
  /// Largest poset whose directed subsets are enumerated outright.
  std::size_t directed_subset_points = 12;
  /// Budget for (candidate families x opens) in the well-filteredness search.
  std::size_t family_work = 400000;
};

}  // namespace smyth
