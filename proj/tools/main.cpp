// zagreb: edge-based Zagreb index toolkit for molecular graphs.
//
// Subcommands: index, acene, op, verify, fit, predict, tables. Exit codes:
// 0 success, 1 domain error (bad graph, out-of-range ring count, ...),
// 2 usage error. Output is deterministic for identical inputs.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zagreb/acene.hpp"
#include "zagreb/closed_form.hpp"
#include "zagreb/format.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/graph_ops.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/qspr.hpp"
#include "zagreb/svg_plot.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

// flag combinations CLI11 cannot express; mapped to exit code 2
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

zagreb::Graph load_graph(const std::string& path, bool require_connected) {
  zagreb::Graph g;
  try {
    g = zagreb::parse_edge_list(read_text_file(path));
  } catch (const zagreb::ParseError& e) {
    throw zagreb::GraphError(path + ": " + e.what());
  }
  if (require_connected && !zagreb::is_connected(g))
    throw zagreb::GraphError(path + ": graph is not connected "
                             "(--require-connected)");
  return g;
}

void write_output(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + output_path);
  out << text;
}

// the interpretive choices any consumer of the numbers should know
ordered_json conventions_json() {
  return ordered_json{
      {"pair_sums", "unordered"},
      {"ehm_term", "(d(alpha)+d(beta))^2 over adjacent edge pairs"},
      {"edge_degree", "d(u)+d(v)-2"},
  };
}

const char* conventions_text_line() {
  return "# conventions: unordered pair sums; ehm term (d(alpha)+d(beta))^2; "
         "edge degree d(u)+d(v)-2\n";
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

// --- index ------------------------------------------------------------

std::string run_index(const std::string& input, const std::string& format,
                      bool require_connected) {
  const zagreb::Graph g = load_graph(input, require_connected);
  const zagreb::IndexReport r = zagreb::index_report(g);
  if (format == "json") {
    ordered_json j;
    j["conventions"] = conventions_json();
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["m1"] = r.m1;
    j["m2"] = r.m2;
    j["co_m1"] = r.co_m1;
    j["co_m2"] = r.co_m2;
    j["em1"] = r.em1;
    j["em2"] = r.em2;
    j["hm"] = r.hm;
    j["ehm"] = r.ehm;
    return dump_json(j);
  }
  if (format == "csv") {
    std::ostringstream out;
    out << "m1,m2,co_m1,co_m2,em1,em2,hm,ehm\n"
        << r.m1 << ',' << r.m2 << ',' << r.co_m1 << ',' << r.co_m2 << ','
        << r.em1 << ',' << r.em2 << ',' << r.hm << ',' << r.ehm << '\n';
    return out.str();
  }
  std::ostringstream out;
  out << conventions_text_line();
  out << "vertices " << g.vertex_count() << '\n';
  out << "edges " << g.edge_count() << '\n';
  out << "m1 " << r.m1 << '\n';
  out << "m2 " << r.m2 << '\n';
  out << "co_m1 " << r.co_m1 << '\n';
  out << "co_m2 " << r.co_m2 << '\n';
  out << "em1 " << r.em1 << '\n';
  out << "em2 " << r.em2 << '\n';
  out << "hm " << r.hm << '\n';
  out << "ehm " << r.ehm << '\n';
  return out.str();
}

// --- acene ------------------------------------------------------------

ordered_json histogram_json(const zagreb::ClassHistogram& histogram) {
  ordered_json rows = ordered_json::array();
  for (const auto& [key, count] : histogram) {
    ordered_json row;
    row["degrees"] = {key.first, key.second};
    row["count"] = count;
    rows.push_back(row);
  }
  return rows;
}

std::string histogram_text(const zagreb::ClassHistogram& histogram) {
  std::ostringstream out;
  for (const auto& [key, count] : histogram)
    out << '(' << key.first << ',' << key.second << ") " << count << '\n';
  return out.str();
}

std::string histogram_csv(const zagreb::ClassHistogram& histogram) {
  std::ostringstream out;
  out << "d_low,d_high,count\n";
  for (const auto& [key, count] : histogram)
    out << key.first << ',' << key.second << ',' << count << '\n';
  return out.str();
}

std::string ring_classes_text(const zagreb::AceneRingClasses& classes) {
  std::ostringstream out;
  out << "outer(2,2)=" << classes.outer_22 << " outer(2,3)=" << classes.outer_23
      << " outer(3,4)=" << classes.outer_34 << " inner(3,3)=" << classes.inner_33
      << " inner(3,4)=" << classes.inner_34
      << " fusion(3,3)=" << classes.fusion_33;
  return out.str();
}

std::string run_acene(int rings, const std::string& mode,
                      const std::string& format) {
  if (mode == "edges") return zagreb::serialize_edge_list(zagreb::acene_graph(rings));

  if (mode == "formula") {
    const std::int64_t value = zagreb::acene_ehm_formula(rings);
    if (format == "json") {
      ordered_json j;
      j["rings"] = rings;
      j["ehm_formula"] = value;
      return dump_json(j);
    }
    if (format == "csv") {
      std::ostringstream out;
      out << "rings,ehm\n" << rings << ',' << value << '\n';
      return out.str();
    }
    return std::to_string(value) + "\n";
  }

  const zagreb::Graph g = zagreb::acene_graph(rings);
  const zagreb::ClassHistogram histogram = zagreb::pair_class_histogram(g);

  if (mode == "histogram") {
    if (format == "json") return dump_json(histogram_json(histogram));
    if (format == "csv") return histogram_csv(histogram);
    return histogram_text(histogram);
  }

  // full report
  const std::int64_t enumerated = zagreb::ehm(g);
  if (format == "csv")
    throw UsageError("csv is not available for the acene report; use "
                     "--histogram or --formula");
  if (format == "json") {
    ordered_json j;
    j["conventions"] = conventions_json();
    j["rings"] = rings;
    j["formula"] = zagreb::acene_chemical_formula(rings);
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["ehm_enumerated"] = enumerated;
    if (rings >= 2) {
      j["ehm_formula"] = zagreb::acene_ehm_formula(rings);
      const zagreb::AceneRingClasses classes = zagreb::acene_ring_classes(rings);
      j["ring_classes"] = ordered_json{{"outer_22", classes.outer_22},
                                       {"outer_23", classes.outer_23},
                                       {"outer_34", classes.outer_34},
                                       {"inner_33", classes.inner_33},
                                       {"inner_34", classes.inner_34},
                                       {"fusion_33", classes.fusion_33}};
    } else {
      j["ehm_formula"] = nullptr;
      j["ring_classes"] = nullptr;
    }
    j["pair_classes"] = histogram_json(histogram);
    return dump_json(j);
  }
  std::ostringstream out;
  out << "rings " << rings << '\n';
  out << "formula " << zagreb::acene_chemical_formula(rings) << '\n';
  out << "vertices " << g.vertex_count() << '\n';
  out << "edges " << g.edge_count() << '\n';
  out << "ehm_enumerated " << enumerated << '\n';
  if (rings >= 2) {
    out << "ehm_formula " << zagreb::acene_ehm_formula(rings) << '\n';
  } else {
    out << "ehm_formula n/a (closed form holds for n >= 2)\n";
  }
  out << "pair_classes\n" << histogram_text(histogram);
  if (rings >= 2)
    out << "ring_classes " << ring_classes_text(zagreb::acene_ring_classes(rings))
        << '\n';
  return out.str();
}

// --- op ---------------------------------------------------------------

std::string run_op(const std::string& kind, const std::string& left,
                   const std::string& right, bool require_connected) {
  const zagreb::Graph g = load_graph(left, require_connected);
  const zagreb::Graph h = load_graph(right, require_connected);
  const zagreb::Graph result =
      kind == "join" ? zagreb::join(g, h) : zagreb::cartesian_product(g, h);
  return zagreb::serialize_edge_list(result);
}

// --- verify -----------------------------------------------------------

std::string render_report(const zagreb::DiscrepancyReport& report,
                          const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["conventions"] = conventions_json();
    j["theorem"] = zagreb::to_string(report.theorem);
    j["operands"] = report.operand_description;
    j["closed_form"] = report.closed_form_value;
    j["oracle"] = report.oracle_value;
    j["difference"] = report.difference;
    return dump_json(j);
  }
  if (format == "csv") {
    std::ostringstream out;
    out << "theorem,closed_form,oracle,difference\n"
        << zagreb::to_string(report.theorem) << ',' << report.closed_form_value
        << ',' << report.oracle_value << ',' << report.difference << '\n';
    return out.str();
  }
  std::ostringstream out;
  out << "theorem " << zagreb::to_string(report.theorem) << '\n';
  out << "operands " << report.operand_description << '\n';
  out << "closed_form " << report.closed_form_value << '\n';
  out << "oracle " << report.oracle_value << '\n';
  out << "difference " << report.difference << '\n';
  return out.str();
}

std::string run_verify(const std::string& theorem, const std::string& left,
                       const std::string& right, std::optional<int> rings,
                       const std::string& format, bool require_connected) {
  if (theorem == "acene") {
    if (!rings.has_value())
      throw UsageError("verify --theorem acene needs --rings");
    return render_report(zagreb::verify_acene_theorem(*rings), format);
  }
  if (left.empty() || right.empty())
    throw UsageError("verify --theorem " + theorem +
                     " needs --left and --right edge-list files");
  const zagreb::Graph g = load_graph(left, require_connected);
  const zagreb::Graph h = load_graph(right, require_connected);
  const zagreb::DiscrepancyReport report =
      theorem == "join" ? zagreb::verify_join_theorem(g, h, left, right)
                        : zagreb::verify_product_theorem(g, h, left, right);
  return render_report(report, format);
}

// --- fit / predict ------------------------------------------------------

zagreb::PropertyDataset load_dataset(const std::string& dataset_path) {
  if (dataset_path.empty()) return zagreb::builtin_acene_dataset();
  return zagreb::parse_dataset_csv(read_text_file(dataset_path));
}

std::string run_fit(const std::string& property_text,
                    const std::string& dataset_path,
                    const std::string& plot_path, const std::string& format) {
  const zagreb::Property property = zagreb::parse_property(property_text);
  const zagreb::PropertyDataset dataset = load_dataset(dataset_path);
  const std::vector<zagreb::DataPoint> points =
      zagreb::property_points(dataset, property);
  const zagreb::RegressionModel fitted = zagreb::fit_ols(points, property);
  const zagreb::RegressionModel reference = zagreb::tim_coefficients(property);
  const double reference_r2 = zagreb::r_squared(reference, points);

  if (!plot_path.empty()) {
    const std::string name = zagreb::property_name(property);
    write_output(zagreb::svg_scatter_plot(points, fitted, name + " vs EHM",
                                          "EHM", name),
                 plot_path);
  }

  std::vector<std::string> flags;
  if (dataset_path.empty()) {
    for (const zagreb::DatasetFlag& flag : zagreb::builtin_dataset_flags()) {
      std::string lower = zagreb::property_name(property);
      for (char& c : lower) c = static_cast<char>(std::tolower(c));
      if (flag.field == lower)
        flags.push_back("row " + std::to_string(flag.row) + " " + flag.field +
                        ": " + flag.note);
    }
  }

  if (format == "json") {
    ordered_json j;
    j["conventions"] = conventions_json();
    j["property"] = zagreb::property_name(property);
    j["points"] = points.size();
    j["fitted"] = ordered_json{{"slope", fitted.slope},
                               {"intercept", fitted.intercept},
                               {"r_squared", *fitted.r_squared}};
    ordered_json ref{{"slope", reference.slope},
                     {"intercept", reference.intercept},
                     {"r_squared_recomputed", reference_r2}};
    if (!reference.note.empty()) ref["note"] = reference.note;
    j["reference"] = ref;
    if (!flags.empty()) j["dataset_flags"] = flags;
    return dump_json(j);
  }
  if (format == "csv") {
    std::ostringstream out;
    out << "property,source,slope,intercept,r_squared\n";
    out << zagreb::property_name(property) << ",fitted,"
        << zagreb::format_double(fitted.slope) << ','
        << zagreb::format_double(fitted.intercept) << ','
        << zagreb::format_double(*fitted.r_squared) << '\n';
    out << zagreb::property_name(property) << ",reference,"
        << zagreb::format_double(reference.slope) << ','
        << zagreb::format_double(reference.intercept) << ','
        << zagreb::format_double(reference_r2) << '\n';
    return out.str();
  }
  std::ostringstream out;
  out << "property " << zagreb::property_name(property) << '\n';
  out << "points " << points.size() << '\n';
  out << "fitted_slope " << zagreb::format_double(fitted.slope) << '\n';
  out << "fitted_intercept " << zagreb::format_double(fitted.intercept)
      << '\n';
  out << "fitted_r_squared " << zagreb::format_double(*fitted.r_squared)
      << '\n';
  out << "reference_slope " << zagreb::format_double(reference.slope) << '\n';
  out << "reference_intercept " << zagreb::format_double(reference.intercept)
      << '\n';
  out << "reference_r_squared_recomputed "
      << zagreb::format_double(reference_r2) << '\n';
  if (!reference.note.empty())
    out << "reference_note " << reference.note << '\n';
  for (const std::string& flag : flags) out << "dataset_flag " << flag << '\n';
  return out.str();
}

std::string run_predict(const std::string& property_text,
                        std::optional<std::int64_t> ehm_value,
                        std::optional<int> rings, const std::string& source,
                        const std::string& dataset_path,
                        const std::string& format) {
  if (ehm_value.has_value() == rings.has_value())
    throw UsageError("predict needs exactly one of --ehm or --rings");
  const zagreb::Property property = zagreb::parse_property(property_text);
  const std::int64_t x =
      ehm_value.has_value() ? *ehm_value : zagreb::acene_ehm_formula(*rings);
  const zagreb::RegressionModel model =
      source == "fitted"
          ? zagreb::fit_property(load_dataset(dataset_path), property)
          : zagreb::tim_coefficients(property);
  const double value = zagreb::predict(model, x);
  if (format == "json") {
    ordered_json j;
    j["property"] = zagreb::property_name(property);
    j["ehm"] = x;
    j["source"] = zagreb::to_string(model.source);
    j["value"] = value;
    return dump_json(j);
  }
  if (format == "csv") {
    std::ostringstream out;
    out << "property,ehm,source,value\n"
        << zagreb::property_name(property) << ',' << x << ','
        << zagreb::to_string(model.source) << ','
        << zagreb::format_double(value) << '\n';
    return out.str();
  }
  return zagreb::format_double(value) + "\n";
}

// --- tables -------------------------------------------------------------

bool table_has_properties(const zagreb::TableReport& table) {
  return table.which != 1;
}

std::string render_csv_table(const zagreb::TableReport& table) {
  std::ostringstream out;
  for (const std::string& note : table.notes) out << "# note: " << note << '\n';
  out << (table_has_properties(table) ? "formula,n,ehm,hof,ge,eg,eea"
                                      : "formula,n,ehm");
  out << '\n';
  for (const zagreb::TableRow& row : table.rows) {
    out << row.formula << ',' << row.rings << ',' << row.ehm;
    if (table_has_properties(table)) {
      out << ',' << zagreb::format_double(*row.hof) << ','
          << zagreb::format_double(*row.ge) << ','
          << zagreb::format_double(*row.eg) << ','
          << zagreb::format_double(*row.eea);
    }
    if (!row.errata.empty()) {
      out << ",# erratum: ";
      for (std::size_t i = 0; i < row.errata.size(); ++i) {
        if (i) out << " | ";
        out << row.errata[i];
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string render_text_table(const zagreb::TableReport& table) {
  std::vector<std::string> header{"formula", "n", "ehm"};
  if (table_has_properties(table))
    for (const char* name : {"hof", "ge", "eg", "eea"}) header.push_back(name);

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> trailers;
  for (const zagreb::TableRow& row : table.rows) {
    std::vector<std::string> line{row.formula, std::to_string(row.rings),
                                  std::to_string(row.ehm)};
    if (table_has_properties(table)) {
      line.push_back(zagreb::format_double(*row.hof));
      line.push_back(zagreb::format_double(*row.ge));
      line.push_back(zagreb::format_double(*row.eg));
      line.push_back(zagreb::format_double(*row.eea));
    }
    cells.push_back(line);
    std::string trailer;
    for (std::size_t i = 0; i < row.errata.size(); ++i) {
      if (i) trailer += " | ";
      trailer += row.errata[i];
    }
    trailers.push_back(trailer);
  }

  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    widths[c] = header[c].size();
    for (const auto& line : cells) widths[c] = std::max(widths[c], line[c].size());
  }

  std::ostringstream out;
  out << "table " << table.which << '\n';
  for (const std::string& note : table.notes) out << "note: " << note << '\n';
  const auto emit_row = [&](const std::vector<std::string>& line,
                            const std::string& trailer) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size() || !trailer.empty())
        out << std::string(widths[c] - line[c].size() + 2, ' ');
    }
    if (!trailer.empty()) out << "[erratum: " << trailer << ']';
    out << '\n';
  };
  emit_row(header, "");
  for (std::size_t r = 0; r < cells.size(); ++r) emit_row(cells[r], trailers[r]);
  return out.str();
}

ordered_json table_to_json(const zagreb::TableReport& table) {
  ordered_json j;
  j["table"] = table.which;
  j["conventions"] = conventions_json();
  j["notes"] = table.notes;
  ordered_json rows = ordered_json::array();
  for (const zagreb::TableRow& row : table.rows) {
    ordered_json r;
    r["formula"] = row.formula;
    r["n"] = row.rings;
    r["ehm"] = row.ehm;
    if (table_has_properties(table)) {
      r["hof"] = *row.hof;
      r["ge"] = *row.ge;
      r["eg"] = *row.eg;
      r["eea"] = *row.eea;
    }
    r["errata"] = row.errata;
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j;
}

std::string run_tables(int which, const std::string& format) {
  const zagreb::TableReport table = zagreb::reproduce_table(which);
  if (format == "json") return dump_json(table_to_json(table));
  if (format == "csv") return render_csv_table(table);
  return render_text_table(table);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-based Zagreb index toolkit for molecular graphs"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json", "csv"};

  // index
  auto* index_cmd =
      app.add_subcommand("index", "compute the eight indices of a graph");
  std::string index_input;
  std::string index_format = "text";
  bool index_connected = false;
  index_cmd->add_option("-i,--input", index_input,
                        "edge-list file ('-' for stdin)")
      ->required();
  index_cmd->add_option("--format", index_format, "output format")
      ->check(CLI::IsMember(formats));
  index_cmd->add_flag("--require-connected", index_connected,
                      "reject disconnected graphs");

  // acene
  auto* acene_cmd = app.add_subcommand(
      "acene", "linear acene generator, classes and closed form");
  int acene_rings = 0;
  std::string acene_format = "text";
  bool acene_edges = false, acene_report = false, acene_histogram = false,
       acene_formula = false;
  acene_cmd->add_option("-n,--rings", acene_rings, "number of fused rings")
      ->required();
  acene_cmd->add_option("--format", acene_format, "output format")
      ->check(CLI::IsMember(formats));
  auto* edges_flag =
      acene_cmd->add_flag("--edges", acene_edges, "emit the edge list");
  auto* report_flag =
      acene_cmd->add_flag("--report", acene_report, "emit the full report");
  auto* histogram_flag = acene_cmd->add_flag("--histogram", acene_histogram,
                                             "emit the degree-pair classes");
  auto* formula_flag = acene_cmd->add_flag("--formula", acene_formula,
                                           "emit the closed-form EHM");
  edges_flag->excludes(report_flag)->excludes(histogram_flag)->excludes(formula_flag);
  report_flag->excludes(histogram_flag)->excludes(formula_flag);
  histogram_flag->excludes(formula_flag);

  // op
  auto* op_cmd =
      app.add_subcommand("op", "join or Cartesian product of two graphs");
  std::string op_kind, op_left, op_right, op_output;
  bool op_connected = false;
  op_cmd->add_option("--kind", op_kind, "operation")
      ->check(CLI::IsMember(std::vector<std::string>{"join", "product"}))
      ->required();
  op_cmd->add_option("--left", op_left, "left edge-list file")->required();
  op_cmd->add_option("--right", op_right, "right edge-list file")->required();
  op_cmd->add_option("-o,--output", op_output,
                     "output edge-list file (stdout when absent)");
  op_cmd->add_flag("--require-connected", op_connected,
                   "reject disconnected operands");

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "audit a closed form against brute-force enumeration");
  std::string verify_theorem, verify_left, verify_right;
  std::string verify_format = "text";
  std::optional<int> verify_rings;
  bool verify_connected = false;
  verify_cmd->add_option("--theorem", verify_theorem, "which closed form")
      ->check(CLI::IsMember(std::vector<std::string>{"join", "product",
                                                     "acene"}))
      ->required();
  verify_cmd->add_option("--left", verify_left, "left edge-list file");
  verify_cmd->add_option("--right", verify_right, "right edge-list file");
  verify_cmd->add_option("--rings", verify_rings,
                         "ring count for the acene theorem");
  verify_cmd->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember(formats));
  verify_cmd->add_flag("--require-connected", verify_connected,
                       "reject disconnected operands");

  // fit
  auto* fit_cmd =
      app.add_subcommand("fit", "least-squares fit of a property against EHM");
  std::string fit_property, fit_dataset, fit_plot;
  std::string fit_format = "text";
  fit_cmd->add_option("--property", fit_property, "hof, ge, eg or eea")
      ->required();
  fit_cmd->add_option("--dataset", fit_dataset,
                      "dataset CSV (bundled acene rows when absent)");
  fit_cmd->add_option("--plot", fit_plot, "write a scatter+line SVG here");
  fit_cmd->add_option("--format", fit_format, "output format")
      ->check(CLI::IsMember(formats));

  // predict
  auto* predict_cmd =
      app.add_subcommand("predict", "evaluate a property line at an EHM value");
  std::string predict_property, predict_dataset;
  std::string predict_source = "reference";
  std::string predict_format = "text";
  std::optional<std::int64_t> predict_ehm;
  std::optional<int> predict_rings;
  predict_cmd->add_option("--property", predict_property, "hof, ge, eg or eea")
      ->required();
  predict_cmd->add_option("--ehm", predict_ehm, "EHM value");
  predict_cmd->add_option("--rings", predict_rings,
                          "ring count (EHM taken from the closed form)");
  predict_cmd->add_option("--source", predict_source,
                          "coefficient source: reference or fitted")
      ->check(CLI::IsMember(std::vector<std::string>{"reference", "fitted"}));
  predict_cmd->add_option("--dataset", predict_dataset,
                          "dataset CSV for --source fitted");
  predict_cmd->add_option("--format", predict_format, "output format")
      ->check(CLI::IsMember(formats));

  // tables
  auto* tables_cmd =
      app.add_subcommand("tables", "reproduce the reference tables");
  int tables_which = 0;
  std::string tables_format = "text";
  tables_cmd->add_option("--which", tables_which, "table number: 1, 3 or 4")
      ->check(CLI::IsMember(std::vector<int>{1, 3, 4}))
      ->required();
  tables_cmd->add_option("--format", tables_format, "output format")
      ->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(index_cmd)) {
      write_output(run_index(index_input, index_format, index_connected), "");
    } else if (app.got_subcommand(acene_cmd)) {
      std::string mode = "report";
      if (acene_edges) mode = "edges";
      if (acene_histogram) mode = "histogram";
      if (acene_formula) mode = "formula";
      write_output(run_acene(acene_rings, mode, acene_format), "");
    } else if (app.got_subcommand(op_cmd)) {
      write_output(run_op(op_kind, op_left, op_right, op_connected),
                   op_output);
    } else if (app.got_subcommand(verify_cmd)) {
      write_output(run_verify(verify_theorem, verify_left, verify_right,
                              verify_rings, verify_format, verify_connected),
                   "");
    } else if (app.got_subcommand(fit_cmd)) {
      write_output(run_fit(fit_property, fit_dataset, fit_plot, fit_format),
                   "");
    } else if (app.got_subcommand(predict_cmd)) {
      write_output(run_predict(predict_property, predict_ehm, predict_rings,
                               predict_source, predict_dataset,
                               predict_format),
                   "");
    } else if (app.got_subcommand(tables_cmd)) {
      write_output(run_tables(tables_which, tables_format), "");
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
