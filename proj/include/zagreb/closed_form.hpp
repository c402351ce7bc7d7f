#pragma once

#include <cstdint>
#include <string>

#include "zagreb/acene.hpp"
#include "zagreb/checked.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/graph_ops.hpp"
#include "zagreb/indices.hpp"

namespace zagreb {

// The invariant tuple the closed-form evaluators consume. Decoupled from
// Graph so summaries no graph realizes can still be evaluated in tests.
struct GraphSummary {
  std::int64_t n;    // vertex count
  std::int64_t m;    // edge count
  std::int64_t m1;   // first Zagreb index
  std::int64_t em1;  // first edge-Zagreb index
  std::int64_t em2;  // second edge-Zagreb index

  friend bool operator==(const GraphSummary&, const GraphSummary&) = default;
};

inline GraphSummary summarize(const Graph& g) {
  return {g.vertex_count(), g.edge_count(), m1(g), em1(g), em2(g)};
}

// Published closed form for EHM of a join, evaluated exactly as printed.
// The expression is NOT corrected where the audit shows it diverging from
// the definition-level value; verify_join_theorem reports the difference.
inline std::int64_t join_formula(const GraphSummary& a,
                                 const GraphSummary& b) {
  const auto mul3 = [](std::int64_t x, std::int64_t y, std::int64_t z) {
    return checked_mul(checked_mul(x, y), z);
  };
  // 2n_a + 2n_b - 4, the degree-shift factor shared by three terms
  const std::int64_t shift =
      checked_sub(checked_add(checked_mul(2, a.n), checked_mul(2, b.n)), 4);
  std::int64_t total = 0;
  total = checked_add(total, checked_mul(2, a.em1));
  total = checked_add(
      total, mul3(16, b.n, checked_sub(a.m1, checked_mul(2, a.m))));
  total = checked_add(total, mul3(16, checked_square(b.n), a.m));
  total = checked_add(total, checked_mul(2, a.em2));
  total = checked_add(total, checked_mul(2, b.em1));
  total = checked_add(
      total, mul3(16, a.n, checked_sub(b.m1, checked_mul(2, b.m))));
  total = checked_add(total, mul3(16, checked_square(a.n), b.m));
  total = checked_add(total, checked_mul(2, b.em2));
  total = checked_add(total, mul3(2, b.n, a.m1));
  total = checked_add(total, mul3(2, a.n, b.m1));
  total = checked_add(total, mul3(32, a.m, b.m));
  total = checked_add(
      total, mul3(8, shift,
                  checked_add(checked_mul(a.n, b.m), checked_mul(b.n, a.m))));
  total = checked_add(
      total, mul3(4, checked_mul(a.n, b.n), checked_square(shift)));
  total = checked_add(total, checked_mul(8, checked_square(a.m)));
  total = checked_add(total, checked_mul(8, checked_square(b.m)));
  return total;
}

// Published closed form for EHM of a Cartesian product, as printed.
inline std::int64_t product_formula(const GraphSummary& a,
                                    const GraphSummary& b) {
  std::int64_t inner = 0;
  inner = checked_add(inner, checked_mul(a.n, b.em1));
  inner = checked_add(inner, checked_mul(8, checked_mul(a.m, b.m1)));
  inner = checked_add(inner, checked_mul(4, checked_mul(b.m, a.m1)));
  inner = checked_add(inner, checked_mul(b.n, a.em1));
  inner = checked_add(inner, checked_mul(8, checked_mul(b.m, a.m1)));
  inner = checked_add(inner, checked_mul(4, checked_mul(a.m, b.m1)));
  inner = checked_sub(inner, checked_mul(32, checked_mul(a.m, b.m)));
  return checked_mul(2, inner);
}

enum class TheoremId { join, product, acene };

inline std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::join: return "join";
    case TheoremId::product: return "product";
    case TheoremId::acene: return "acene";
  }
  return "?";
}

// One audited theorem instance: the closed-form value next to the
// brute-force value of the explicitly constructed graph. The two routes
// never share code; a nonzero difference is reported, not hidden.
struct DiscrepancyReport {
  TheoremId theorem;
  std::int64_t closed_form_value;
  std::int64_t oracle_value;
  std::int64_t difference;  // closed_form_value - oracle_value
  std::string operand_description;
};

namespace detail {

inline std::string describe_operand(const std::string& name, const Graph& g) {
  return name + "(n=" + std::to_string(g.vertex_count()) +
         ",m=" + std::to_string(g.edge_count()) + ")";
}

}  // namespace detail

inline DiscrepancyReport verify_join_theorem(const Graph& g, const Graph& h,
                                             const std::string& left_name = "left",
                                             const std::string& right_name = "right") {
  const std::int64_t closed = join_formula(summarize(g), summarize(h));
  const std::int64_t oracle = ehm(join(g, h));
  return {TheoremId::join, closed, oracle, checked_sub(closed, oracle),
          detail::describe_operand(left_name, g) + " + " +
              detail::describe_operand(right_name, h)};
}

inline DiscrepancyReport verify_product_theorem(
    const Graph& g, const Graph& h, const std::string& left_name = "left",
    const std::string& right_name = "right") {
  const std::int64_t closed = product_formula(summarize(g), summarize(h));
  const std::int64_t oracle = ehm(cartesian_product(g, h));
  return {TheoremId::product, closed, oracle, checked_sub(closed, oracle),
          detail::describe_operand(left_name, g) + " x " +
              detail::describe_operand(right_name, h)};
}

inline DiscrepancyReport verify_acene_theorem(int rings) {
  const std::int64_t closed = acene_ehm_formula(rings);  // rejects rings < 2
  const std::int64_t oracle = ehm(acene_graph(rings));
  return {TheoremId::acene, closed, oracle, checked_sub(closed, oracle),
          "acene(rings=" + std::to_string(rings) + ")"};
}

}  // namespace zagreb
