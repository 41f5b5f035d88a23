#include "colorder/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "colorder/coloring.hpp"
#include "colorder/matrix_market.hpp"
#include "colorder/parallel.hpp"
#include "colorder/rng.hpp"

namespace colorder {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::map<std::string, std::string> echo_config(const BenchConfig& c) {
  std::string seeds;
  for (std::size_t i = 0; i < c.random_seeds.size(); ++i) {
    seeds += (i ? "," : "") + std::to_string(c.random_seeds[i]);
  }
  const bool exact = c.metrics.closeness.mode == ClosenessConfig::Mode::Exact;
  return {
      {"baseline", c.baseline == Baseline::Degree ? "degree" : "optimal"},
      {"pagerank_alpha", fmt(c.metrics.pagerank.alpha)},
      {"pagerank_iterations", std::to_string(c.metrics.pagerank.iterations)},
      {"closeness", exact ? "exact" : "sampled:" + std::to_string(c.metrics.closeness.samples)},
      {"closeness_seed", std::to_string(c.metrics.closeness.seed)},
      {"random_seeds", seeds},
      {"random_averaging", c.random_averaging == RandomAveraging::Counts ? "counts" : "ratios"},
      {"exact_budget_nodes", std::to_string(c.exact_budget.max_nodes)},
      {"rng", Rng::kName},
      {"coloring", "first-fit, ell=1"},
      {"timing", c.record_timing ? "on" : "off"},
  };
}

struct Baselines {
  double degree_colors = 0.0;
  double baseline = 0.0;
  bool excluded = false;
  std::string note;
};

Baselines compute_baseline(const NamedGraph& ng, const BenchConfig& config, OrderingContext& ctx, FirstFit& ff) {
  Baselines b;
  b.degree_colors = ff.run(ctx.order(OrderingSpec{Strategy::Degree, {}, {}, {}}).order).num_colors;
  if (config.baseline == Baseline::Degree) {
    b.baseline = b.degree_colors;
    return b;
  }
  const ExactResult exact = solve_exact_cached(ng, config.exact_budget, config.use_chi_cache);
  b.baseline = static_cast<double>(exact.chi);
  if (exact.timed_out) {
    b.excluded = true;
    b.note = "exact solve exhausted its budget after " + std::to_string(exact.nodes_explored) +
             " nodes; chi <= " + std::to_string(exact.chi) + " unproven";
  }
  return b;
}

unsigned inner_threads(std::size_t graphs, const BenchConfig& config) {
  return graphs >= resolve_threads(config.threads, graphs) && graphs > 1 ? 1 : config.threads;
}

GraphRow evaluate_graph(const NamedGraph& ng, const BenchConfig& config, unsigned metric_threads) {
  const Graph& g = ng.graph;
  GraphRow row{ng.name, g.num_vertices(), g.num_edges(), 0.0, false, {}, {}};

  MetricConfig mc = config.metrics;
  mc.threads = metric_threads;
  OrderingContext ctx(g, mc);
  FirstFit ff(g);

  const Baselines base = compute_baseline(ng, config, ctx, ff);
  row.baseline_colors = base.baseline;
  row.excluded = base.excluded;
  row.note = base.note;
  if (config.record_timing) ctx.materialize();

  auto color_count = [&](const OrderingSpec& spec) {
    const Permutation p = ctx.order(spec);
    const Coloring& c = ff.run(p.order);
    if (!verify(g, c)) throw std::logic_error("first fit produced an improper coloring on " + ng.name);
    return static_cast<double>(c.num_colors);
  };

  for (const OrderingSpec& spec : config.strategies) {
    StrategyResult r;
    r.strategy = spec.to_string();
    const auto start = Clock::now();
    if (spec.strategy == Strategy::Random && !spec.seed) {
      if (config.random_seeds.empty()) throw std::invalid_argument("random strategy needs at least one seed");
      double count_sum = 0.0;
      double ratio_sum = 0.0;
      for (std::uint64_t seed : config.random_seeds) {
        OrderingSpec seeded = spec;
        seeded.seed = seed;
        const double c = color_count(seeded);
        count_sum += c;
        ratio_sum += c / base.baseline;
      }
      const auto k = static_cast<double>(config.random_seeds.size());
      r.colors = count_sum / k;
      r.ratio = config.random_averaging == RandomAveraging::Counts ? r.colors / base.baseline : ratio_sum / k;
    } else if (spec.strategy == Strategy::Degree) {
      r.colors = base.degree_colors;
      r.ratio = r.colors / base.baseline;
      if (config.record_timing) color_count(spec);
    } else {
      r.colors = color_count(spec);
      r.ratio = r.colors / base.baseline;
    }
    if (config.record_timing) {
      r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
    row.results.push_back(std::move(r));
  }
  return row;
}

}  // namespace

const Aggregate* BenchReport::aggregate(std::string_view strategy) const {
  for (const auto& a : aggregates) {
    if (a.strategy == strategy) return &a;
  }
  return nullptr;
}

double geometric_mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("geometric mean of an empty set");
  double log_sum = 0.0;
  for (double x : xs) {
    if (!(x > 0.0)) throw std::invalid_argument("geometric mean needs positive inputs, got " + fmt(x));
    log_sum += std::log(x);
  }
  return std::exp(log_sum / static_cast<double>(xs.size()));
}

std::vector<NamedGraph> load_corpus(const std::filesystem::path& dir, std::vector<std::string>& log) {
  if (!std::filesystem::is_directory(dir)) {
    throw std::invalid_argument("corpus directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".mtx" || ext == ".el" || ext == ".txt")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<NamedGraph> out;
  for (const auto& path : files) {
    try {
      out.push_back({path.stem().string(), read_graph_file(path).graph, path});
    } catch (const std::exception& e) {
      log.push_back("warning: skipped " + path.filename().string() + ": " + e.what());
    }
  }
  return out;
}

ExactResult solve_exact_cached(const NamedGraph& g, const ExactBudget& budget, bool use_cache) {
  if (use_cache && g.source) {
    const auto cache = chi_cache_path(*g.source);
    if (auto hit = load_cached_exact(cache, g.graph); hit && !hit->timed_out) return *hit;
    ExactResult r = chromatic_exact(g.graph, budget);
    std::ofstream(cache) << exact_result_json(r, g.name, g.graph, budget);
    return r;
  }
  return chromatic_exact(g.graph, budget);
}

BenchReport run_benchmark(std::span<const NamedGraph> graphs, const BenchConfig& config) {
  config.metrics.pagerank.validate();
  BenchReport report;
  report.baseline = config.baseline == Baseline::Degree ? "degree" : "optimal";
  report.config = echo_config(config);
  for (const auto& s : config.strategies) report.strategies.push_back(s.to_string());
  if (config.strategies.empty()) {
    report.log.push_back("no strategies requested; nothing evaluated");
    return report;
  }

  std::vector<GraphRow> rows(graphs.size());
  const unsigned metric_threads = inner_threads(graphs.size(), config);
  parallel_for(graphs.size(), config.threads, [&](unsigned, std::size_t i) {
    rows[i] = evaluate_graph(graphs[i], config, metric_threads);
  });

  for (auto& row : rows) {
    if (row.excluded) {
      report.log.push_back("excluded " + row.name + " from aggregates: " + row.note);
    }
    report.per_graph.push_back(std::move(row));
  }

  for (std::size_t s = 0; s < report.strategies.size(); ++s) {
    std::vector<double> ratios;
    for (const auto& row : report.per_graph) {
      if (!row.excluded) ratios.push_back(row.results[s].ratio);
    }
    Aggregate a{report.strategies[s], 0.0, ratios.size()};
    if (!ratios.empty()) a.geomean = geometric_mean(ratios);
    report.aggregates.push_back(a);
  }
  return report;
}

std::vector<PreparedGraph> prepare_for_grid(std::span<const NamedGraph> graphs, const BenchConfig& config,
                                            std::vector<std::string>& log) {
  std::vector<std::optional<PreparedGraph>> slots(graphs.size());
  std::vector<std::string> notes(graphs.size());
  const unsigned metric_threads = inner_threads(graphs.size(), config);
  parallel_for(graphs.size(), config.threads, [&](unsigned, std::size_t i) {
    const NamedGraph& ng = graphs[i];
    MetricConfig mc = config.metrics;
    mc.threads = metric_threads;
    OrderingContext ctx(ng.graph, mc);
    FirstFit ff(ng.graph);
    const Baselines base = compute_baseline(ng, config, ctx, ff);
    if (base.excluded) {
      notes[i] = "excluded " + ng.name + " from grid search: " + base.note;
      return;
    }
    const auto normalized = ctx.all_normalized();
    slots[i] = PreparedGraph{ng.name, ng.graph, {normalized.begin(), normalized.end()}, base.baseline};
  });

  std::vector<PreparedGraph> out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!notes[i].empty()) log.push_back(notes[i]);
    if (slots[i]) out.push_back(std::move(*slots[i]));
  }
  return out;
}

std::vector<WeightVector> weight_grid(double step) {
  if (!(step > 0.0) || step > 1.0) throw std::invalid_argument("grid step must be in (0, 1]");
  const double inv = 1.0 / step;
  const auto units = static_cast<int>(std::lround(inv));
  if (std::abs(inv - units) > 1e-9) throw std::invalid_argument("1 / grid step must be an integer");

  std::vector<WeightVector> out;
  std::array<int, 6> k{};
  // Odometer over the first five parts; the sixth takes the remainder.
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos == 5) {
      k[5] = left;
      WeightVector w;
      for (std::size_t i = 0; i < 6; ++i) w.w[i] = static_cast<double>(k[i]) / units;
      out.push_back(w);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, units);
  return out;
}

GridSearchResult weight_grid_search(std::span<const PreparedGraph> corpus, double step, unsigned threads,
                                    bool keep_trace) {
  if (corpus.empty()) throw std::invalid_argument("grid search needs a nonempty corpus");
  const auto grid = weight_grid(step);

  const unsigned workers = resolve_threads(threads, grid.size());
  std::vector<std::vector<FirstFit>> colorers(workers);
  for (auto& per_worker : colorers) {
    for (const auto& pg : corpus) per_worker.emplace_back(pg.graph);
  }

  std::vector<double> geomeans(grid.size());
  parallel_for(grid.size(), workers, [&](unsigned worker, std::size_t i) {
    std::vector<double> ratios(corpus.size());
    for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
      const Permutation p = order_descending(combine(corpus[gi].normalized, grid[i]));
      ratios[gi] = colorers[worker][gi].run(p.order).num_colors / corpus[gi].baseline_colors;
    }
    geomeans[i] = geometric_mean(ratios);
  });

  GridSearchResult result;
  result.grid_step = step;
  result.evaluations = grid.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (geomeans[i] < geomeans[best]) best = i;
  }
  result.best_weights = grid[best];
  result.best_geomean = geomeans[best];
  if (keep_trace) {
    for (std::size_t i = 0; i < grid.size(); ++i) result.trace.push_back({grid[i], geomeans[i]});
  }
  return result;
}

std::string scatter_series(const BenchReport& report, std::string_view strategy) {
  const auto it = std::find(report.strategies.begin(), report.strategies.end(), strategy);
  if (it == report.strategies.end()) throw std::invalid_argument("strategy not in report: " + std::string(strategy));
  const auto s = static_cast<std::size_t>(it - report.strategies.begin());
  std::vector<double> ratios;
  for (const auto& row : report.per_graph) {
    if (!row.excluded) ratios.push_back(row.results[s].ratio);
  }
  std::sort(ratios.begin(), ratios.end());
  std::string out;
  for (std::size_t i = 0; i < ratios.size(); ++i) out += std::to_string(i) + '\t' + fmt(ratios[i]) + '\n';
  return out;
}

std::string emit_report(const BenchReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Csv: {
      std::string out = "graph,n,m,baseline";
      for (const auto& s : report.strategies) {
        out += ',' + csv_field(s + ":colors") + ',' + csv_field(s + ":ratio") + ',' + csv_field(s + ":runtime_ms");
      }
      out += '\n';
      for (const auto& row : report.per_graph) {
        out += csv_field(row.name) + ',' + std::to_string(row.n) + ',' + std::to_string(row.m) + ',' +
               fmt(row.baseline_colors);
        for (const auto& r : row.results) {
          out += ',' + fmt(r.colors) + ',' + (row.excluded ? std::string("NA") : fmt(r.ratio)) + ',' +
                 fmt(r.runtime_ms);
        }
        out += '\n';
      }
      return out;
    }
    case ReportFormat::Json: {
      nlohmann::ordered_json j;
      j["schema_version"] = BenchReport::kSchemaVersion;
      j["baseline"] = report.baseline;
      j["config"] = report.config;
      j["strategies"] = report.strategies;
      j["per_graph"] = nlohmann::ordered_json::array();
      for (const auto& row : report.per_graph) {
        nlohmann::ordered_json jr;
        jr["name"] = row.name;
        jr["n"] = row.n;
        jr["m"] = row.m;
        jr["baseline_colors"] = row.baseline_colors;
        jr["excluded"] = row.excluded;
        jr["note"] = row.note;
        jr["results"] = nlohmann::ordered_json::array();
        for (const auto& r : row.results) {
          jr["results"].push_back(
              {{"strategy", r.strategy}, {"colors", r.colors}, {"ratio", r.ratio}, {"runtime_ms", r.runtime_ms}});
        }
        j["per_graph"].push_back(std::move(jr));
      }
      j["aggregates"] = nlohmann::ordered_json::array();
      for (const auto& a : report.aggregates) {
        j["aggregates"].push_back({{"strategy", a.strategy}, {"geomean", a.geomean}, {"graphs", a.graphs}});
      }
      j["log"] = report.log;
      return j.dump(2) + '\n';
    }
    case ReportFormat::Scatter: {
      std::string out;
      for (const auto& s : report.strategies) out += "# " + s + '\n' + scatter_series(report, s);
      return out;
    }
  }
  throw std::invalid_argument("unknown report format");
}

BenchReport report_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  if (j.at("schema_version").get<int>() != BenchReport::kSchemaVersion) {
    throw std::invalid_argument("unsupported report schema_version");
  }
  BenchReport r;
  r.baseline = j.at("baseline").get<std::string>();
  r.config = j.at("config").get<std::map<std::string, std::string>>();
  r.strategies = j.at("strategies").get<std::vector<std::string>>();
  for (const auto& jr : j.at("per_graph")) {
    GraphRow row;
    row.name = jr.at("name").get<std::string>();
    row.n = jr.at("n").get<std::size_t>();
    row.m = jr.at("m").get<std::size_t>();
    row.baseline_colors = jr.at("baseline_colors").get<double>();
    row.excluded = jr.at("excluded").get<bool>();
    row.note = jr.at("note").get<std::string>();
    for (const auto& x : jr.at("results")) {
      row.results.push_back({x.at("strategy").get<std::string>(), x.at("colors").get<double>(),
                             x.at("ratio").get<double>(), x.at("runtime_ms").get<double>()});
    }
    r.per_graph.push_back(std::move(row));
  }
  for (const auto& a : j.at("aggregates")) {
    r.aggregates.push_back(
        {a.at("strategy").get<std::string>(), a.at("geomean").get<double>(), a.at("graphs").get<std::size_t>()});
  }
  r.log = j.at("log").get<std::vector<std::string>>();
  return r;
}

}  // namespace colorder
