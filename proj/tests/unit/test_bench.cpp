#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "colorder/bench.hpp"
#include "colorder/generators.hpp"
#include "colorder/matrix_market.hpp"
#include "colorder/rng.hpp"
#include "oracles.hpp"

using namespace colorder;
using doctest::Approx;

namespace {

std::vector<NamedGraph> small_corpus() {
  std::vector<NamedGraph> out;
  for (std::uint64_t s = 1; s <= 6; ++s) {
    out.push_back({"gnp" + std::to_string(s), gen::gnp(40 + 5 * s, 0.12, s), std::nullopt});
    out.push_back({"rgg" + std::to_string(s), gen::random_geometric(60, 0.2, s), std::nullopt});
  }
  return out;
}

BenchConfig all_config(Baseline baseline) {
  BenchConfig c;
  c.strategies = all_strategies();
  c.baseline = baseline;
  return c;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

/// Crown graph with a_i = 2i, b_i = 2i + 1 (a_i, b_i non-adjacent) plus a
/// vertex 2k joined to every a_i. Identity order needs k + 1 colors; the
/// degree order needs 2, which is optimal.
Graph crown_with_apex(std::size_t k) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) e.emplace_back(static_cast<VertexId>(2 * i), static_cast<VertexId>(2 * j + 1));
    }
    e.emplace_back(static_cast<VertexId>(2 * i), static_cast<VertexId>(2 * k));
  }
  return Graph::from_edge_list(2 * k + 1, e);
}

}  // namespace

TEST_CASE("geometric_mean") {
  CHECK(geometric_mean(std::vector<double>{2, 8}) == Approx(4.0));
  CHECK(geometric_mean(std::vector<double>{3.5}) == Approx(3.5));
  CHECK(geometric_mean(std::vector<double>{1, 1, 1}) == 1.0);
  CHECK(geometric_mean(std::vector<double>{1.0, 4.0}) == Approx(2.0));
  CHECK_THROWS(geometric_mean(std::vector<double>{}));
  CHECK_THROWS(geometric_mean(std::vector<double>{1, 0}));
  CHECK_THROWS(geometric_mean(std::vector<double>{1, -2}));
  CHECK(geometric_mean(std::vector<double>(1000, 1e300)) == Approx(1e300));

  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> xs(1 + rng.below(20));
    for (double& x : xs) x = 0.1 + 10 * rng.unit();
    const double g = geometric_mean(xs);
    CHECK(g >= *std::min_element(xs.begin(), xs.end()) * (1 - 1e-12));
    CHECK(g <= *std::max_element(xs.begin(), xs.end()) * (1 + 1e-12));
  }
}

TEST_CASE("degree baseline: ratios are colors over the degree count") {
  const auto corpus = small_corpus();
  const BenchReport r = run_benchmark(corpus, all_config(Baseline::Degree));
  REQUIRE(r.per_graph.size() == corpus.size());
  REQUIRE(r.strategies.size() == 9);
  for (const auto& row : r.per_graph) {
    CHECK(row.results[0].strategy == "degree");
    CHECK(row.results[0].ratio == 1.0);
    for (const auto& res : row.results) {
      CHECK(res.ratio == res.colors / row.baseline_colors);
      CHECK(res.ratio > 0);
    }
  }
  CHECK(r.aggregate("degree")->geomean == 1.0);
  for (const auto& a : r.aggregates) {
    std::vector<double> ratios;
    const auto s = static_cast<std::size_t>(&a - r.aggregates.data());
    for (const auto& row : r.per_graph) ratios.push_back(row.results[s].ratio);
    CHECK(a.geomean == geometric_mean(ratios));
    CHECK(a.graphs == corpus.size());
  }
}

TEST_CASE("random strategy averages the five seeded color counts") {
  const auto corpus = small_corpus();
  BenchConfig c;
  c.strategies = {OrderingSpec::parse("random")};
  const BenchReport counts = run_benchmark(corpus, c);
  c.random_averaging = RandomAveraging::Ratios;
  const BenchReport ratios = run_benchmark(corpus, c);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i].graph;
    double sum = 0;
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) sum += greedy_color(g, random_order(g.num_vertices(), seed)).num_colors;
    const auto& row = counts.per_graph[i];
    CHECK(row.results[0].colors == Approx(sum / 5));
    CHECK(row.results[0].ratio == Approx(sum / 5 / row.baseline_colors));
    // Averaging ratios or counts agrees when the baseline is shared.
    CHECK(ratios.per_graph[i].results[0].ratio == Approx(row.results[0].ratio));
  }
  CHECK(counts.config.at("random_averaging") == "counts");
  CHECK(ratios.config.at("random_averaging") == "ratios");
}

TEST_CASE("optimal baseline: greedy never beats chi") {
  const auto corpus = small_corpus();
  const BenchReport r = run_benchmark(corpus, all_config(Baseline::Optimal));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& row = r.per_graph[i];
    CHECK_FALSE(row.excluded);
    CHECK(row.baseline_colors == chromatic_exact(corpus[i].graph).chi);
    for (const auto& res : row.results) CHECK(res.ratio >= 1.0);
  }
  for (const auto& a : r.aggregates) CHECK(a.geomean >= 1.0);
}

TEST_CASE("timed-out exact solves are excluded from aggregates") {
  std::vector<NamedGraph> corpus{{"easy", gen::cycle(7), std::nullopt},
                                 {"hard", gen::gnp(70, 0.5, 3), std::nullopt}};
  BenchConfig c = all_config(Baseline::Optimal);
  c.exact_budget.max_nodes = 50;
  const BenchReport r = run_benchmark(corpus, c);
  CHECK_FALSE(r.per_graph[0].excluded);
  CHECK(r.per_graph[1].excluded);
  for (const auto& a : r.aggregates) CHECK(a.graphs == 1);
  REQUIRE(r.log.size() == 1);
  CHECK(r.log[0].find("hard") != std::string::npos);
  CHECK(emit_report(r, ReportFormat::Csv).find("NA") != std::string::npos);
}

TEST_CASE("reports are identical across worker counts") {
  const auto corpus = small_corpus();
  BenchConfig c = all_config(Baseline::Degree);
  c.threads = 1;
  const std::string one = emit_report(run_benchmark(corpus, c), ReportFormat::Csv);
  for (unsigned t : {4u, 8u}) {
    c.threads = t;
    const BenchReport r = run_benchmark(corpus, c);
    CHECK(emit_report(r, ReportFormat::Csv) == one);
  }
}

TEST_CASE("emit_report formats") {
  const auto corpus = small_corpus();
  BenchConfig c;
  const BenchReport empty = run_benchmark(corpus, c);
  CHECK(emit_report(empty, ReportFormat::Csv) == "graph,n,m,baseline\n");

  c.strategies = {OrderingSpec::parse("degree"), OrderingSpec::parse("weighted")};
  const std::vector<NamedGraph> two(corpus.begin(), corpus.begin() + 2);
  const BenchReport r = run_benchmark(two, c);
  const std::string csv = emit_report(r, ReportFormat::Csv);
  CHECK(count_lines(csv) == 3);
  CHECK(csv.rfind("graph,n,m,baseline,degree:colors,degree:ratio,degree:runtime_ms,"
                  "\"weighted:0.1,0.05,0.1,0.7,0.05,0:colors\"",
                  0) == 0);
  std::size_t ratio_cells = 0;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) ratio_cells += static_cast<std::size_t>(std::count(line.begin(), line.end(), ',') - 3) / 3;
  CHECK(ratio_cells == 4);

  const std::string json = emit_report(r, ReportFormat::Json);
  CHECK(json.find("\"schema_version\": 1") != std::string::npos);
  CHECK(report_from_json(json) == r);

  const std::string scatter = emit_report(r, ReportFormat::Scatter);
  CHECK(scatter.rfind("# degree\n0\t1\n1\t1\n# weighted", 0) == 0);
  CHECK_THROWS(scatter_series(r, "pagerank"));
}

TEST_CASE("JSON round trip of a full report") {
  const BenchReport r = run_benchmark(small_corpus(), all_config(Baseline::Degree));
  CHECK(report_from_json(emit_report(r, ReportFormat::Json)) == r);
}

TEST_CASE("weight_grid enumerates compositions lexicographically") {
  const auto one = weight_grid(1.0);
  REQUIRE(one.size() == 6);
  CHECK(one.front() == WeightVector::one_hot(Metric::PageRank));
  CHECK(one.back() == WeightVector::one_hot(Metric::Degree));
  CHECK(weight_grid(0.5).size() == 21);
  const auto fine = weight_grid(0.05);
  CHECK(fine.size() == 53130);
  CHECK(std::is_sorted(fine.begin(), fine.end()));
  CHECK(std::find(fine.begin(), fine.end(), WeightVector::reported_best()) != fine.end());
  for (const auto& w : fine) CHECK_NOTHROW(w.validate());
  CHECK_THROWS(weight_grid(0.3));
  CHECK_THROWS(weight_grid(0.0));
}

TEST_CASE("grid search picks the lexicographically smallest optimum") {
  const Graph g = crown_with_apex(4);
  REQUIRE(oracle::first_fit_colors(g, order_descending(degree(g)).order) == 2);
  REQUIRE(chromatic_exact(g).chi == 2);

  PreparedGraph pg{"crown-apex", g, {}, 2.0};
  pg.normalized.push_back(zscore(degree(g)));
  for (int i = 0; i < 5; ++i) pg.normalized.push_back({"flat", std::vector<double>(g.num_vertices(), 0.0)});
  const std::vector<PreparedGraph> corpus{pg};

  // Oracle: walk the grid with plain loops and the naive first fit.
  double best = 1e9;
  std::array<int, 6> best_k{};
  for (int a = 0; a <= 20; ++a)
    for (int b = 0; a + b <= 20; ++b)
      for (int c = 0; a + b + c <= 20; ++c)
        for (int d = 0; a + b + c + d <= 20; ++d)
          for (int e = 0; a + b + c + d + e <= 20; ++e) {
            std::vector<double> score(g.num_vertices());
            for (std::size_t v = 0; v < score.size(); ++v) score[v] = a / 20.0 * pg.normalized[0].values[v];
            std::vector<VertexId> order(g.num_vertices());
            std::iota(order.begin(), order.end(), VertexId{0});
            std::stable_sort(order.begin(), order.end(), [&](VertexId x, VertexId y) { return score[x] > score[y]; });
            const double ratio = oracle::first_fit_colors(g, order) / 2.0;
            if (ratio < best) {
              best = ratio;
              best_k = {a, b, c, d, e, 20 - a - b - c - d - e};
            }
          }
  CHECK(best == 1.0);
  CHECK(best_k == std::array<int, 6>{1, 0, 0, 0, 0, 19});

  const GridSearchResult r = weight_grid_search(corpus, 0.05, 0, true);
  CHECK(r.evaluations == 53130);
  CHECK(r.best_geomean == 1.0);
  CHECK(r.best_weights == WeightVector{{0.05, 0, 0, 0, 0, 0.95}});
  for (const auto& p : r.trace) {
    CHECK(r.best_geomean <= p.geomean);
    CHECK(p.geomean == (p.weights.w[0] > 0 ? 1.0 : 2.5));
  }
}

TEST_CASE("grid search over a corpus") {
  std::vector<std::string> log;
  BenchConfig c;
  c.baseline = Baseline::Optimal;
  const auto prepared = prepare_for_grid(small_corpus(), c, log);
  CHECK(prepared.size() == 12);
  CHECK(log.empty());

  const GridSearchResult unit = weight_grid_search(prepared, 1.0, 0, true);
  CHECK(unit.evaluations == 6);
  const GridSearchResult r = weight_grid_search(prepared, 0.25, 0, true);
  CHECK(r.evaluations == 126);
  for (const auto& p : r.trace) CHECK(r.best_geomean <= p.geomean);
  const auto closeness_only = std::find_if(r.trace.begin(), r.trace.end(), [](const GridPoint& p) {
    return p.weights == WeightVector::one_hot(Metric::Closeness);
  });
  REQUIRE(closeness_only != r.trace.end());
  CHECK(r.best_geomean <= closeness_only->geomean);
  CHECK(r.best_geomean >= 1.0);
  CHECK(weight_grid_search(prepared, 0.25, 1).best_weights == weight_grid_search(prepared, 0.25, 8).best_weights);
  CHECK_THROWS(weight_grid_search(std::vector<PreparedGraph>{}, 0.5));
}

TEST_CASE("load_corpus reads files in name order and skips bad ones") {
  const auto dir = std::filesystem::temp_directory_path() / "colorder_corpus_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "b.mtx") << write_matrix_market(gen::cycle(5));
  std::ofstream(dir / "a.el") << write_edge_list(gen::path(4));
  std::ofstream(dir / "broken.mtx") << "%%MatrixMarket matrix coordinate pattern symmetric\n3 3 5\n";
  std::ofstream(dir / "notes.json") << "{}";
  std::vector<std::string> log;
  const auto corpus = load_corpus(dir, log);
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].name == "a");
  CHECK(corpus[1].name == "b");
  REQUIRE(log.size() == 1);
  CHECK(log[0].find("broken.mtx") != std::string::npos);

  BenchConfig c = all_config(Baseline::Optimal);
  run_benchmark(corpus, c);
  CHECK(std::filesystem::exists(dir / "b.chi.json"));
  CHECK(load_cached_exact(dir / "b.chi.json", corpus[1].graph)->chi == 3);
  std::filesystem::remove_all(dir);
  CHECK_THROWS(load_corpus(dir, log));
}
