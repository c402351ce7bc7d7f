#pragma once

#include <cstdint>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

// Join g + h: disjoint union plus every edge between the two vertex sets.
// Vertices of h are shifted by g's vertex count; cross edges are appended
// after both edge lists in (g-vertex, h-vertex) lexicographic order, so
// serialized output is reproducible.
inline Graph join(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  const std::int64_t cross =
      static_cast<std::int64_t>(ng) * static_cast<std::int64_t>(nh);
  if (ng + static_cast<std::int64_t>(nh) > 0x7fffffff ||
      g.edge_count() + static_cast<std::int64_t>(h.edge_count()) + cross >
          0x7fffffff)
    throw GraphError("join result too large");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count() + h.edge_count() +
                                         cross));
  for (const Edge& e : g.edges()) edges.push_back(e);
  for (const Edge& e : h.edges()) edges.push_back({e.u + ng, e.v + ng});
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b) edges.push_back({a, ng + b});
  return Graph(ng + nh, edges);
}

// Cartesian product g x h: vertex (a, b) is encoded row-major as
// a * |V(h)| + b; (a, b) ~ (a', b') when a = a' and bb' is an edge of h,
// or b = b' and aa' is an edge of g. Copies of h come first, grouped by
// a, then the g-edges fanned out over b.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  const std::int64_t vertices =
      static_cast<std::int64_t>(ng) * static_cast<std::int64_t>(nh);
  const std::int64_t edge_total =
      static_cast<std::int64_t>(ng) * h.edge_count() +
      static_cast<std::int64_t>(nh) * g.edge_count();
  if (vertices > 0x7fffffff || edge_total > 0x7fffffff)
    throw GraphError("product result too large");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(edge_total));
  for (int a = 0; a < ng; ++a)
    for (const Edge& e : h.edges())
      edges.push_back({a * nh + e.u, a * nh + e.v});
  for (const Edge& e : g.edges())
    for (int b = 0; b < nh; ++b)
      edges.push_back({e.u * nh + b, e.v * nh + b});
  return Graph(static_cast<int>(vertices), edges);
}

}  // namespace zagreb
