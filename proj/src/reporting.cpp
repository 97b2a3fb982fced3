#include "altgraph/reporting.hpp"

#include <sstream>

#include <json.hpp>

namespace altgraph {

std::optional<OutputFormat> format_from_name(std::string_view name) {
  if (name == "tsv") return OutputFormat::tsv;
  if (name == "json") return OutputFormat::json;
  if (name == "markdown") return OutputFormat::markdown;
  return std::nullopt;
}

std::string factored_expression(const RowClassification& rc) {
  const std::uint64_t n = rc.n;
  const auto num = [](std::uint64_t v) { return std::to_string(v); };
  const auto fact = [](std::uint64_t v) { return std::to_string(v) + "!"; };
  // Shorthands for the recurring class counts.
  const std::string t_nm2 =
      num(n) + "*" + num((n - 1) / 2) + "*" + fact(n - 4);  // [1^2,n-2]
  const std::string t_odd_pp = "4*" + num(n) + "*" + num(n - 2) + "*" +
                               fact(n - 4) + "/" + num(n - 1);  // [1,p^2]
  const std::string t_n = fact(n - 2);                          // [n]
  const std::string t_nm1 = num(n) + "*" + fact(n - 3);         // [1,n-1]
  const std::string t_even_pp =
      "4*" + num(n - 1) + "*" + fact(n - 3) + "/" + num(n);  // [p^2]

  switch (rc.row) {
    case CountsCase::nm2_and_half_prime: return t_nm2 + "+" + t_odd_pp + "+1";
    case CountsCase::n_and_half_prime: return t_n + "+" + t_odd_pp + "+1";
    case CountsCase::n_and_nm2_prime: return t_n + "+" + t_nm2 + "+1";
    case CountsCase::nm2_prime_only: return t_nm2 + "+1";
    case CountsCase::half_prime_only: return t_odd_pp + "+1";
    case CountsCase::n_prime_only: return t_n + "+1";
    case CountsCase::nm1_prime_only: return t_nm1 + "+1";
    case CountsCase::nm1_and_half_prime: return t_even_pp + "+" + t_nm1 + "+1";
    case CountsCase::even_half_prime_only: return t_even_pp + "+1";
    case CountsCase::outside_A: return "1";
  }
  return {};
}

namespace {

std::string row_case_label(const CensusTableRow& row) {
  return row.classification ? case_label(row.classification->row) : "n<=10";
}

}  // namespace

std::string render_census_table(const std::vector<CensusTableRow>& rows,
                                OutputFormat format) {
  bool any_brute = false;
  for (const auto& row : rows) any_brute |= row.brute_force_c0.has_value();

  std::ostringstream out;
  switch (format) {
    case OutputFormat::tsv: {
      out << "n\tc0";
      if (any_brute) out << "\tc0_brute";
      out << "\tc0_ptype\tc0_order\tcase\ttwo_connected\n";
      for (const auto& row : rows) {
        out << row.counts.n << '\t' << to_decimal(row.counts.c0);
        if (any_brute)
          out << '\t'
              << (row.brute_force_c0 ? to_decimal(*row.brute_force_c0) : "-");
        out << '\t' << row.counts.c0_ptype << '\t' << row.counts.c0_order
            << '\t' << row_case_label(row) << '\t'
            << (row.counts.two_connected ? "true" : "false") << '\n';
      }
      break;
    }
    case OutputFormat::json: {
      nlohmann::json table = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json entry;
        entry["n"] = row.counts.n;
        entry["c0"] = to_decimal(row.counts.c0);
        if (row.brute_force_c0)
          entry["c0_brute"] = to_decimal(*row.brute_force_c0);
        entry["c0_ptype"] = row.counts.c0_ptype;
        entry["c0_order"] = row.counts.c0_order;
        entry["case"] = row_case_label(row);
        entry["two_connected"] = row.counts.two_connected;
        if (row.classification)
          entry["c0_factored"] = factored_expression(*row.classification);
        table.push_back(std::move(entry));
      }
      out << table.dump(2) << '\n';
      break;
    }
    case OutputFormat::markdown: {
      out << "| n | c0 | c0 (factored) |";
      if (any_brute) out << " c0 (brute force) |";
      out << " c0_ptype | c0_order | case | 2-connected |\n";
      out << "|---|----|---------------|";
      if (any_brute) out << "------------------|";
      out << "----------|----------|------|-------------|\n";
      for (const auto& row : rows) {
        out << "| " << row.counts.n << " | " << to_decimal(row.counts.c0)
            << " | "
            << (row.classification ? factored_expression(*row.classification)
                                   : "-");
        if (any_brute)
          out << " | "
              << (row.brute_force_c0 ? to_decimal(*row.brute_force_c0) : "-");
        out << " | " << row.counts.c0_ptype << " | " << row.counts.c0_order
            << " | " << row_case_label(row) << " | "
            << (row.counts.two_connected ? "true" : "false") << " |\n";
      }
      break;
    }
  }
  return out.str();
}

std::string render_graph_summary(const UndirectedGraph& g,
                                 const ComponentCensus& census) {
  std::ostringstream out;
  out << "kind: " << kind_name(g.kind) << '\n';
  out << "n: " << g.n << '\n';
  out << "vertices: " << g.num_vertices << '\n';
  out << "edges: " << g.edges.size() << '\n';
  out << "components: " << census.component_count << '\n';
  if (g.num_vertices <= 100) {
    std::vector<std::vector<std::size_t>> members(census.component_count);
    for (std::size_t v = 0; v < g.num_vertices; ++v)
      members[census.component_id[v]].push_back(v);
    for (std::uint32_t c = 0; c < census.component_count; ++c) {
      out << "component " << c << ": {";
      for (std::size_t i = 0; i < members[c].size(); ++i) {
        if (i) out << ", ";
        out << g.label(members[c][i]);
      }
      out << "}\n";
    }
  }
  return out.str();
}

std::string render_classification(const RowClassification& rc,
                                  const CensusRow& counts) {
  std::ostringstream out;
  out << "n: " << rc.n << '\n';
  out << "case: " << case_label(rc.row) << '\n';
  out << "critical primes:";
  if (rc.critical_primes.empty()) out << " none";
  for (std::uint64_t p : rc.critical_primes) out << ' ' << p;
  out << '\n';
  out << "c0: " << to_decimal(counts.c0) << '\n';
  out << "c0 factored: " << factored_expression(rc) << '\n';
  out << "c0_ptype: " << counts.c0_ptype << '\n';
  out << "c0_order: " << counts.c0_order << '\n';
  out << "two_connected: " << (counts.two_connected ? "true" : "false")
      << '\n';
  return out.str();
}

}  // namespace altgraph
