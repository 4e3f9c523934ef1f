#pragma once

#include <cstddef>
#include <vector>

#include "bingtau/tree.hpp"

namespace bingtau::testing {

// All binary tree shapes with exactly n leaves (Catalan(n-1) of them),
// in a deterministic order.
inline std::vector<TreeShape> shapes_with_leaves(std::size_t n) {
  static std::vector<std::vector<TreeShape>> cache{{}, {TreeShape::leaf()}};
  while (cache.size() <= n) {
    const std::size_t m = cache.size();
    std::vector<TreeShape> out;
    for (std::size_t k = 1; k < m; ++k)
      for (const TreeShape& l : cache[k])
        for (const TreeShape& r : cache[m - k])
          out.push_back(TreeShape::node(l, r));
    cache.push_back(std::move(out));
  }
  return cache[n];
}

inline std::vector<TreeShape> shapes_up_to_leaves(std::size_t n) {
  std::vector<TreeShape> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (const TreeShape& s : shapes_with_leaves(i)) out.push_back(s);
  return out;
}

}  // namespace bingtau::testing
