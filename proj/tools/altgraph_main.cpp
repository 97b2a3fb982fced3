// Command-line front end: census tables, verification suites, graph
// construction with optional caching, and single-degree classification.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 capacity error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altgraph/builders.hpp"
#include "altgraph/census.hpp"
#include "altgraph/errors.hpp"
#include "altgraph/graph_cache.hpp"
#include "altgraph/reporting.hpp"
#include "altgraph/verify.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct RunConfig {
  std::string cache_dir;  // empty: caching disabled
  int ceiling = 0;        // 0: defaults

  altgraph::BuildLimits limits() const {
    altgraph::BuildLimits l;
    if (ceiling > 0) {
      l.brute_force_ceiling = ceiling;
      l.element_graph_ceiling = ceiling;
    }
    return l;
  }
};

altgraph::UndirectedGraph obtain_graph(altgraph::GraphKind kind, int n,
                                       const RunConfig& config) {
  using namespace altgraph;
  if (!config.cache_dir.empty()) {
    const auto path = cache_path(config.cache_dir, kind, n);
    if (auto cached = read_graph_file(path)) {
      if (cached->kind == kind && cached->n == n) return std::move(*cached);
    }
  }
  UndirectedGraph g;
  const BuildLimits limits = config.limits();
  switch (kind) {
    case GraphKind::proper_power: g = build_proper_power_graph(n, limits); break;
    case GraphKind::quotient_power:
      g = build_quotient_power_graph(n, limits);
      break;
    case GraphKind::power_type: g = build_power_type_graph(n, limits); break;
    case GraphKind::order: g = build_order_graph(n, limits); break;
  }
  if (!config.cache_dir.empty())
    write_graph_file(g, cache_path(config.cache_dir, kind, n));
  return g;
}

int cmd_census(const RunConfig& config, int from, int to,
               const std::string& format_name, bool brute_force) {
  using namespace altgraph;
  const auto format = format_from_name(format_name);
  if (!format) {
    std::cerr << "unknown format: " << format_name << '\n';
    return kExitUsage;
  }
  if (from < 3 || to < from) {
    std::cerr << "census range must satisfy 3 <= from <= to\n";
    return kExitUsage;
  }
  const BuildLimits limits = config.limits();
  if (brute_force && to > limits.brute_force_ceiling) {
    std::cerr << "brute-force census for n=" << to
              << " exceeds the ceiling " << limits.brute_force_ceiling
              << " (raise it with --ceiling)\n";
    return kExitCapacity;
  }

  std::vector<CensusTableRow> rows;
  for (int n = from; n <= to; ++n) {
    CensusTableRow row;
    row.counts = closed_form_counts(n);
    if (n >= 11) row.classification = classify_row(n);
    if (brute_force) {
      const auto g = obtain_graph(GraphKind::quotient_power, n, config);
      row.brute_force_c0 = BigCount(components(g).component_count);
      if (*row.brute_force_c0 == row.counts.c0)
        row.counts.source = CountsSource::both;
    }
    rows.push_back(std::move(row));
  }
  std::cout << render_census_table(rows, *format);
  return 0;
}

int cmd_verify(const RunConfig& config, const std::string& suite, int max_n,
               std::optional<std::uint64_t> seed) {
  using namespace altgraph;
  const BuildLimits limits = config.limits();
  std::vector<Check> checks;

  if (suite == "table1") {
    int top = max_n > 0 ? max_n : 9;
    if (top > limits.brute_force_ceiling) {
      std::cerr << "note: clamping table1 range to the brute-force ceiling "
                << limits.brute_force_ceiling << '\n';
      top = limits.brute_force_ceiling;
    }
    checks = check_small_degree_counts(top, limits);
    const auto procedure =
        check_procedure(top, seed.value_or(1), seed ? 10 : 0, limits);
    checks.insert(checks.end(), procedure.begin(), procedure.end());
  } else if (suite == "crosscheck-ptype") {
    checks = check_partition_level_counts(11, max_n > 0 ? max_n : 40, limits);
  } else if (suite == "structure") {
    checks = check_structure(11, max_n > 0 ? max_n : 40, limits);
  } else if (suite == "edges") {
    int top = max_n > 0 ? max_n : 8;
    if (top > limits.element_graph_ceiling) {
      std::cerr << "note: clamping edges range to the element-level ceiling "
                << limits.element_graph_ceiling << '\n';
      top = limits.element_graph_ceiling;
    }
    checks = check_edge_identity(top, limits);
  } else if (suite == "algebra") {
    checks = check_algebra(max_n > 0 ? static_cast<std::uint64_t>(max_n)
                                     : 10000u);
    const auto constants = check_reference_constants();
    checks.insert(checks.end(), constants.begin(), constants.end());
  } else {
    std::cerr << "unknown suite: " << suite
              << " (expected table1, crosscheck-ptype, structure, edges or "
                 "algebra)\n";
    return kExitUsage;
  }

  bool all_ok = true;
  for (const auto& check : checks) {
    std::cout << (check.pass ? "ok" : "FAIL") << ": " << check.name;
    if (!check.detail.empty()) std::cout << " [" << check.detail << "]";
    std::cout << '\n';
    std::cerr << "  (" << check.name << ": " << check.seconds << "s)\n";
    all_ok &= check.pass;
  }
  std::cout << (all_ok ? "PASS" : "FAIL") << " suite " << suite << " ("
            << checks.size() << " checks)\n";
  return all_ok ? 0 : kExitVerifyFailure;
}

int cmd_graph(const RunConfig& config, const std::string& kind_name_arg,
              int n, const std::string& out_path) {
  using namespace altgraph;
  const auto kind = kind_from_name(kind_name_arg);
  if (!kind) {
    std::cerr << "unknown graph kind: " << kind_name_arg
              << " (expected power, quotient, ptype or order)\n";
    return kExitUsage;
  }
  const UndirectedGraph g = obtain_graph(*kind, n, config);
  const ComponentCensus census = components(g);
  if (!out_path.empty()) write_graph_file(g, out_path);
  std::cout << render_graph_summary(g, census);
  return 0;
}

int cmd_classify(int n) {
  using namespace altgraph;
  if (n < 3) {
    std::cerr << "classify requires n >= 3\n";
    return kExitUsage;
  }
  const CensusRow counts = closed_form_counts(n);
  if (n >= 11) {
    std::cout << render_classification(classify_row(n), counts);
  } else {
    std::cout << "n: " << n << '\n'
              << "case: small degree (3..10)\n"
              << "c0: " << to_decimal(counts.c0) << '\n'
              << "c0_ptype: " << counts.c0_ptype << '\n'
              << "c0_order: " << counts.c0_order << '\n'
              << "two_connected: " << (counts.two_connected ? "true" : "false")
              << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "power, quotient power, power type and order graphs of alternating "
      "groups: construction, component census and closed-form cross-checks"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  app.add_option("--cache-dir", config.cache_dir,
                 "graph cache directory (overrides ALTGRAPH_CACHE_DIR)")
      ->envname("ALTGRAPH_CACHE_DIR");
  app.add_option("--ceiling", config.ceiling,
                 "brute-force ceiling override (also allows element-level "
                 "edges up to the same degree)");

  auto* census_cmd = app.add_subcommand("census", "closed-form census table");
  int census_from = 3, census_to = 10;
  std::string census_format = "tsv";
  bool census_brute = false;
  census_cmd->add_option("--from", census_from, "first degree")->required();
  census_cmd->add_option("--to", census_to, "last degree")->required();
  census_cmd->add_option("--format", census_format, "tsv | json | markdown");
  census_cmd->add_flag("--brute-force", census_brute,
                       "add a brute-force (quotient census) column");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite;
  int verify_max_n = 0;
  std::uint64_t verify_seed_value = 0;
  verify_cmd
      ->add_option("--suite", verify_suite,
                   "table1 | crosscheck-ptype | structure | edges | algebra")
      ->required();
  verify_cmd->add_option("--max-n", verify_max_n, "upper end of the range");
  auto* verify_seed_option = verify_cmd->add_option(
      "--seed", verify_seed_value, "seed for randomized procedure orders");

  auto* graph_cmd = app.add_subcommand("graph", "build and summarize a graph");
  std::string graph_kind;
  int graph_n = 0;
  std::string graph_out;
  graph_cmd->add_option("--kind", graph_kind, "power | quotient | ptype | order")
      ->required();
  graph_cmd->add_option("--n", graph_n, "degree")->required();
  graph_cmd->add_option("--out", graph_out, "write the graph record here");

  auto* classify_cmd =
      app.add_subcommand("classify", "closed-form classification of one degree");
  int classify_n = 0;
  classify_cmd->add_option("--n", classify_n, "degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(census_cmd))
      return cmd_census(config, census_from, census_to, census_format,
                        census_brute);
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(config, verify_suite, verify_max_n,
                        verify_seed_option->count() > 0
                            ? std::optional<std::uint64_t>(verify_seed_value)
                            : std::nullopt);
    if (app.got_subcommand(graph_cmd))
      return cmd_graph(config, graph_kind, graph_n, graph_out);
    if (app.got_subcommand(classify_cmd)) return cmd_classify(classify_n);
  } catch (const altgraph::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const altgraph::StructureViolation& e) {
    std::cerr << "structure violation: " << e.what() << '\n';
    return kExitVerifyFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
