#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zagreb/checked.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"

namespace zagreb {

// Hydrogen-depleted molecular graph of the linear acene with n fused
// hexagonal rings (C_{4n+2}H_{2n+4}; hydrogens are never vertices).
//
// Numbering is fixed for reproducible output: top path 0..2n, bottom
// path 2n+1..4n+1, and a rung at every even position 0, 2, ..., 2n.
// n = 1 gives the hexagon; for n >= 2 exactly the 2(n-1) ring-fusion
// vertices have degree 3.
inline Graph acene_graph(int rings) {
  if (rings < 1) throw GraphError("acene needs at least 1 ring");
  const int path_len = 2 * rings + 1;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(5 * rings + 1));
  for (int i = 0; i + 1 < path_len; ++i) edges.push_back({i, i + 1});
  for (int i = 0; i + 1 < path_len; ++i)
    edges.push_back({path_len + i, path_len + i + 1});
  for (int i = 0; i < path_len; i += 2) edges.push_back({i, path_len + i});
  return Graph(4 * rings + 2, edges);
}

inline std::string acene_chemical_formula(int rings) {
  if (rings < 1) throw GraphError("acene needs at least 1 ring");
  return "C" + std::to_string(4 * rings + 2) + "H" +
         std::to_string(2 * rings + 4);
}

// Adjacent edge pairs bucketed by their sorted edge-degree pair. Works on
// any graph; for acene graphs with n >= 2 the keys are exactly
// (2,2), (2,3), (3,3), (3,4) with counts 4, 4, 4n-6, 4n-4.
using ClassHistogram = std::map<std::pair<int, int>, std::int64_t>;

inline ClassHistogram pair_class_histogram(const Graph& g) {
  ClassHistogram histogram;
  for_each_adjacent_edge_pair(g, [&](int e1, int e2) {
    int lo = g.edge_degree(e1);
    int hi = g.edge_degree(e2);
    if (lo > hi) std::swap(lo, hi);
    ++histogram[{lo, hi}];
  });
  return histogram;
}

// Closed form EHM(acene with n rings) = 4(85n - 62), valid for n >= 2.
// n = 1 is a genuine exception: the hexagon enumerates to 96 while the
// line would give 92, so the formula refuses rather than extrapolate.
inline std::int64_t acene_ehm_formula(int rings) {
  if (rings < 2)
    throw GraphError(
        "acene EHM closed form holds for n >= 2 only (the one-ring graph "
        "enumerates to 96, not the extrapolated 92)");
  return checked_sub(checked_mul(340, rings), 248);
}

// Edge-pair counts by ring location, derivable from n alone for n >= 2.
// Outer rings contribute the three constant classes; inner rings and the
// fusion rungs grow linearly. Aggregated by degree pair these reproduce
// pair_class_histogram(acene_graph(n)).
struct AceneRingClasses {
  std::int64_t outer_22;   // both edge degrees 2
  std::int64_t outer_23;   // edge degrees 2 and 3
  std::int64_t outer_34;   // edge degrees 3 and 4
  std::int64_t inner_33;   // both edge degrees 3
  std::int64_t inner_34;   // edge degrees 3 and 4
  std::int64_t fusion_33;  // both edge degrees 3, between outer and inner

  friend bool operator==(const AceneRingClasses&,
                         const AceneRingClasses&) = default;
};

inline AceneRingClasses acene_ring_classes(int rings) {
  if (rings < 2)
    throw GraphError("ring-location classes are defined for n >= 2");
  const std::int64_t n = rings;
  return {4, 4, 4, 2 * (n - 2), 4 * (n - 2), 2 * (n - 1)};
}

}  // namespace zagreb
