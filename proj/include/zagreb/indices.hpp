#pragma once

#include <cassert>
#include <cstdint>

#include "zagreb/checked.hpp"
#include "zagreb/graph.hpp"

namespace zagreb {

// Definition-level computation of the eight Zagreb-family indices.
//
// Vertex-pair sums (co_m1, co_m2) and edge-pair sums (em2, ehm) run over
// unordered pairs; the convention is part of the library contract and is
// echoed by the CLI output header. All values are exact integers.

struct IndexReport {
  std::int64_t m1;
  std::int64_t m2;
  std::int64_t co_m1;
  std::int64_t co_m2;
  std::int64_t em1;
  std::int64_t em2;
  std::int64_t hm;
  std::int64_t ehm;

  friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

// First Zagreb index: sum of squared vertex degrees.
inline std::int64_t m1(const Graph& g) {
  std::int64_t vertex_form = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    vertex_form = checked_add(vertex_form, checked_square(g.degree(v)));
#ifndef NDEBUG
  // Equivalent edge form: sum over edges of d(u) + d(v).
  std::int64_t edge_form = 0;
  for (const Edge& e : g.edges())
    edge_form = checked_add(edge_form, g.degree(e.u) + g.degree(e.v));
  assert(vertex_form == edge_form);
#endif
  return vertex_form;
}

// Second Zagreb index: sum over edges of d(u) * d(v).
inline std::int64_t m2(const Graph& g) {
  std::int64_t total = 0;
  for (const Edge& e : g.edges())
    total = checked_add(total, checked_mul(g.degree(e.u), g.degree(e.v)));
  return total;
}

// First Zagreb coindex: sum of d(u) + d(v) over unordered pairs of
// distinct non-adjacent vertices.
inline std::int64_t co_m1(const Graph& g) {
  std::int64_t total = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v))
        total = checked_add(total, g.degree(u) + g.degree(v));
  return total;
}

// Second Zagreb coindex: sum of d(u) * d(v) over the same pairs.
inline std::int64_t co_m2(const Graph& g) {
  std::int64_t total = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v))
        total = checked_add(total, checked_mul(g.degree(u), g.degree(v)));
  return total;
}

// First edge-Zagreb index: sum of squared edge degrees.
inline std::int64_t em1(const Graph& g) {
  std::int64_t total = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    total = checked_add(total, checked_square(g.edge_degree(e)));
  return total;
}

// Second edge-Zagreb index: sum of d(e1) * d(e2) over unordered pairs of
// adjacent edges.
inline std::int64_t em2(const Graph& g) {
  std::int64_t total = 0;
  for_each_adjacent_edge_pair(g, [&](int e1, int e2) {
    total = checked_add(
        total, checked_mul(g.edge_degree(e1), g.edge_degree(e2)));
  });
  return total;
}

// Hyper-Zagreb index: sum over edges of (d(u) + d(v))^2.
inline std::int64_t hm(const Graph& g) {
  std::int64_t total = 0;
  for (const Edge& e : g.edges())
    total = checked_add(total, checked_square(g.degree(e.u) + g.degree(e.v)));
  return total;
}

// Edge hyper-Zagreb index: sum of (d(e1) + d(e2))^2 over unordered pairs
// of adjacent edges. Equals hm(line_graph(g)).
inline std::int64_t ehm(const Graph& g) {
  std::int64_t total = 0;
  for_each_adjacent_edge_pair(g, [&](int e1, int e2) {
    total = checked_add(
        total, checked_square(g.edge_degree(e1) + g.edge_degree(e2)));
  });
  return total;
}

inline IndexReport index_report(const Graph& g) {
  return {m1(g), m2(g), co_m1(g), co_m2(g), em1(g), em2(g), hm(g), ehm(g)};
}

}  // namespace zagreb
