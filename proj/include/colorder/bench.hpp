#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colorder/exact.hpp"
#include "colorder/graph.hpp"
#include "colorder/metrics.hpp"
#include "colorder/ordering.hpp"

namespace colorder {

enum class Baseline { Degree, Optimal };

/// How the seeded random orders of one graph are folded into a single entry:
/// average the color counts and divide once, or average the per-seed ratios.
enum class RandomAveraging { Counts, Ratios };

struct BenchConfig {
  std::vector<OrderingSpec> strategies;
  Baseline baseline = Baseline::Degree;
  MetricConfig metrics;
  std::vector<std::uint64_t> random_seeds{1, 2, 3, 4, 5};
  RandomAveraging random_averaging = RandomAveraging::Counts;
  ExactBudget exact_budget;
  bool use_chi_cache = true;    // read/write <stem>.chi.json beside file-backed graphs
  bool record_timing = false;   // wall-clock runtimes make reports non-reproducible
  unsigned threads = 0;         // 0 = all cores; never changes results
};

struct NamedGraph {
  std::string name;
  Graph graph;
  std::optional<std::filesystem::path> source;
};

struct StrategyResult {
  std::string strategy;
  double colors = 0.0;  // mean over seeds for unseeded `random`
  double ratio = 0.0;
  double runtime_ms = 0.0;

  bool operator==(const StrategyResult&) const = default;
};

struct GraphRow {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  double baseline_colors = 0.0;
  bool excluded = false;  // left out of aggregates (e.g. exact solve timed out)
  std::string note;
  std::vector<StrategyResult> results;

  bool operator==(const GraphRow&) const = default;
};

struct Aggregate {
  std::string strategy;
  double geomean = 0.0;
  std::size_t graphs = 0;

  bool operator==(const Aggregate&) const = default;
};

struct BenchReport {
  static constexpr int kSchemaVersion = 1;

  std::string baseline;
  std::map<std::string, std::string> config;
  std::vector<std::string> strategies;
  std::vector<GraphRow> per_graph;
  std::vector<Aggregate> aggregates;
  std::vector<std::string> log;

  const Aggregate* aggregate(std::string_view strategy) const;
  bool operator==(const BenchReport&) const = default;
};

/// exp(mean(log x)). Throws std::invalid_argument on an empty input or any
/// x <= 0.
double geometric_mean(std::span<const double> xs);

/// Every *.mtx / *.el / *.txt file of `dir`, sorted by file name. Unreadable
/// files are skipped with a line appended to `log`.
std::vector<NamedGraph> load_corpus(const std::filesystem::path& dir, std::vector<std::string>& log);

/// Exact result for one graph, going through the `<stem>.chi.json` cache
/// when the graph came from a file and caching is enabled.
ExactResult solve_exact_cached(const NamedGraph& g, const ExactBudget& budget, bool use_cache);

/// Colors every graph under every strategy (first fit, distance 1) and forms
/// ratios against the baseline. Each graph's metrics are computed once and
/// shared by all its strategies; graphs run in parallel and the report is
/// assembled in input order.
BenchReport run_benchmark(std::span<const NamedGraph> graphs, const BenchConfig& config);

/// A graph ready for repeated weighted-order evaluation.
struct PreparedGraph {
  std::string name;
  Graph graph;
  std::vector<MetricVector> normalized;  // z-scores, kAllMetrics order
  double baseline_colors = 0.0;
};

/// Computes z-scored metrics and baselines. Graphs whose optimal baseline
/// timed out are dropped with a log line.
std::vector<PreparedGraph> prepare_for_grid(std::span<const NamedGraph> graphs, const BenchConfig& config,
                                            std::vector<std::string>& log);

struct GridPoint {
  WeightVector weights;
  double geomean = 0.0;
};

struct GridSearchResult {
  WeightVector best_weights;
  double best_geomean = 0.0;
  double grid_step = 0.0;
  std::size_t evaluations = 0;
  std::vector<GridPoint> trace;  // every point, only when requested
};

/// All six-component vectors with entries in {0, step, ..., 1} summing to 1,
/// in ascending lexicographic order. 1/step must be an integer.
std::vector<WeightVector> weight_grid(double step);

/// Evaluates the weighted order's geometric-mean ratio at every grid point
/// and returns the minimum; ties go to the lexicographically smallest vector.
GridSearchResult weight_grid_search(std::span<const PreparedGraph> corpus, double step, unsigned threads = 0,
                                    bool keep_trace = false);

enum class ReportFormat { Csv, Json, Scatter };

/// csv: one row per graph, `graph,n,m,baseline` then `<s>:colors`,
///      `<s>:ratio`, `<s>:runtime_ms` for every strategy s.
/// json: the whole report, with schema_version.
/// scatter: every strategy's series (see scatter_series), each preceded by a
///      `# <strategy>` line.
std::string emit_report(const BenchReport& report, ReportFormat format);

/// Tab-separated `rank<TAB>ratio` rows, ratios ascending, excluded graphs
/// left out.
std::string scatter_series(const BenchReport& report, std::string_view strategy);

BenchReport report_from_json(std::string_view text);

}  // namespace colorder
