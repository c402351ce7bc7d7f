#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace zagreb {

// Errors raised by graph construction and structural operations.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input-text errors; carries the 1-based line the problem was found on.
class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& message)
      : GraphError("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct Edge {
  int u;
  int v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

namespace detail {

inline std::uint64_t pack_edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace detail

// Finite simple undirected graph over dense 0-based vertex indices.
// Edges keep their construction order; each edge is stored with u < v.
// Instances are immutable once built, so any number of threads may read
// the same graph concurrently.
class Graph {
 public:
  Graph() = default;

  Graph(int vertex_count, const std::vector<Edge>& edge_list) {
    if (vertex_count < 0) throw GraphError("vertex count must be non-negative");
    vertex_count_ = vertex_count;
    degrees_.assign(static_cast<std::size_t>(vertex_count), 0);
    edges_.reserve(edge_list.size());
    adjacency_.reserve(edge_list.size());
    for (const Edge& e : edge_list) {
      if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
        throw GraphError("edge (" + std::to_string(e.u) + ", " +
                         std::to_string(e.v) + ") has an endpoint outside 0.." +
                         std::to_string(vertex_count_ - 1));
      if (e.u == e.v)
        throw GraphError("self-loop at vertex " + std::to_string(e.u));
      edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
      ++degrees_[static_cast<std::size_t>(e.u)];
      ++degrees_[static_cast<std::size_t>(e.v)];
      adjacency_.push_back(detail::pack_edge_key(e.u, e.v));
    }
    std::sort(adjacency_.begin(), adjacency_.end());
    auto dup = std::adjacent_find(adjacency_.begin(), adjacency_.end());
    if (dup != adjacency_.end()) {
      const int u = static_cast<int>(*dup >> 32);
      const int v = static_cast<int>(*dup & 0xffffffffu);
      throw GraphError("duplicate edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ")");
    }
  }

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const Edge& edge(int e) const {
    check_edge_index(e);
    return edges_[static_cast<std::size_t>(e)];
  }

  int degree(int v) const {
    check_vertex_index(v);
    return degrees_[static_cast<std::size_t>(v)];
  }

  // Edge degree d(e) = d(u) + d(v) - 2 for e = uv.
  int edge_degree(int e) const {
    check_edge_index(e);
    const Edge& uv = edges_[static_cast<std::size_t>(e)];
    return degrees_[static_cast<std::size_t>(uv.u)] +
           degrees_[static_cast<std::size_t>(uv.v)] - 2;
  }

  bool adjacent(int u, int v) const {
    check_vertex_index(u);
    check_vertex_index(v);
    if (u == v) return false;
    return std::binary_search(adjacency_.begin(), adjacency_.end(),
                              detail::pack_edge_key(u, v));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex_index(int v) const {
    if (v < 0 || v >= vertex_count_)
      throw GraphError("vertex index " + std::to_string(v) +
                       " out of range for " + std::to_string(vertex_count_) +
                       " vertices");
  }

  void check_edge_index(int e) const {
    if (e < 0 || e >= edge_count())
      throw GraphError("edge index " + std::to_string(e) +
                       " out of range for " + std::to_string(edge_count()) +
                       " edges");
  }

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<std::uint64_t> adjacency_;  // packed keys, sorted
};

// An unordered pair of distinct edges sharing exactly one endpoint,
// in canonical form first_edge < second_edge, with their edge degrees.
struct EdgePair {
  int first_edge;
  int second_edge;
  int first_degree;
  int second_degree;

  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

// Visits every unordered pair of distinct adjacent edges exactly once,
// in canonical (e1 < e2) form, grouped by shared vertex. In a simple
// graph two distinct edges share at most one endpoint, so enumerating
// the incident pairs at each vertex never repeats a pair.
template <typename Fn>
void for_each_adjacent_edge_pair(const Graph& g, Fn&& fn) {
  std::vector<std::vector<int>> incident(
      static_cast<std::size_t>(g.vertex_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& uv = g.edge(e);
    incident[static_cast<std::size_t>(uv.u)].push_back(e);
    incident[static_cast<std::size_t>(uv.v)].push_back(e);
  }
  for (const std::vector<int>& at_vertex : incident) {
    for (std::size_t i = 0; i + 1 < at_vertex.size(); ++i)
      for (std::size_t j = i + 1; j < at_vertex.size(); ++j)
        fn(at_vertex[i], at_vertex[j]);
  }
}

inline std::vector<EdgePair> adjacent_edge_pairs(const Graph& g) {
  std::vector<EdgePair> pairs;
  for_each_adjacent_edge_pair(g, [&](int e1, int e2) {
    pairs.push_back({e1, e2, g.edge_degree(e1), g.edge_degree(e2)});
  });
  return pairs;
}

// Vertices of the result are the edges of g, adjacent when the edges
// share an endpoint; the degree of line-graph vertex i equals
// edge_degree(g, i).
inline Graph line_graph(const Graph& g) {
  std::vector<Edge> edges;
  for_each_adjacent_edge_pair(g, [&](int e1, int e2) {
    edges.push_back({e1, e2});
  });
  return Graph(g.edge_count(), edges);
}

// Applies a vertex permutation: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw GraphError("permutation has " + std::to_string(perm.size()) +
                     " entries for " + std::to_string(n) + " vertices");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int image : perm) {
    if (image < 0 || image >= n || seen[static_cast<std::size_t>(image)])
      throw GraphError("relabel requires a bijection on 0.." +
                       std::to_string(n - 1));
    seen[static_cast<std::size_t>(image)] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    edges.push_back({perm[static_cast<std::size_t>(e.u)],
                     perm[static_cast<std::size_t>(e.v)]});
  return Graph(n, edges);
}

inline bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::vector<int>> neighbors(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    neighbors[static_cast<std::size_t>(e.u)].push_back(e.v);
    neighbors[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::queue<int> frontier;
  frontier.push(0);
  visited[0] = true;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : neighbors[static_cast<std::size_t>(v)]) {
      if (!visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

// --- edge-list text format ---------------------------------------------
//
// Comment lines start with '#'. The first non-comment line is "N M"
// (vertex count, edge count); then exactly M lines "u v" with
// 0 <= u, v < N. The serializer writes no comments, edges in stored
// order with u < v, and one trailing newline.

namespace detail {

inline bool parse_int_token(const std::string& token, long long& out) {
  if (token.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(token, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == token.size();
}

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string token;
  while (in >> token) fields.push_back(token);
  return fields;
}

}  // namespace detail

inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;

  auto next_significant = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_significant(header))
    throw ParseError(line_no + 1, "missing \"N M\" header");
  const std::vector<std::string> head = detail::split_fields(header);
  long long n = 0, m = 0;
  if (head.size() != 2 || !detail::parse_int_token(head[0], n) ||
      !detail::parse_int_token(head[1], m))
    throw ParseError(line_no, "malformed header, expected \"N M\"");
  if (n < 0 || m < 0)
    throw ParseError(line_no, "vertex and edge counts must be non-negative");
  constexpr long long kMaxCount = 0x7fffffff;
  if (n > kMaxCount || m > kMaxCount)
    throw ParseError(line_no, "vertex or edge count too large");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    std::string row;
    if (!next_significant(row))
      throw ParseError(line_no + 1, "unexpected end of input: expected " +
                                        std::to_string(m) + " edges, found " +
                                        std::to_string(i));
    const std::vector<std::string> fields = detail::split_fields(row);
    long long u = 0, v = 0;
    if (fields.size() != 2 || !detail::parse_int_token(fields[0], u) ||
        !detail::parse_int_token(fields[1], v))
      throw ParseError(line_no, "malformed edge, expected \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(line_no, "vertex index out of range 0.." +
                                    std::to_string(n - 1));
    if (u == v)
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    const std::uint64_t key =
        detail::pack_edge_key(static_cast<int>(u), static_cast<int>(v));
    if (!seen.insert(key).second)
      throw ParseError(line_no, "duplicate edge (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ")");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  std::string extra;
  if (next_significant(extra))
    throw ParseError(line_no, "unexpected content after " + std::to_string(m) +
                                  " edges");
  return Graph(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline void serialize_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  serialize_edge_list(g, out);
  return out.str();
}

// --- small named constructions ------------------------------------------

inline Graph path_graph(int n) {
  if (n < 0) throw GraphError("path length must be non-negative");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return Graph(n, edges);
}

inline Graph complete_graph(int n) {
  if (n < 0) throw GraphError("vertex count must be non-negative");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

inline Graph complete_bipartite_graph(int left, int right) {
  if (left < 0 || right < 0)
    throw GraphError("part sizes must be non-negative");
  std::vector<Edge> edges;
  for (int u = 0; u < left; ++u)
    for (int v = 0; v < right; ++v) edges.push_back({u, left + v});
  return Graph(left + right, edges);
}

}  // namespace zagreb
