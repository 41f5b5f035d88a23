// colorder: greedy coloring under vertex orderings, exact chi, benchmarks.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "colorder/bench.hpp"
#include "colorder/coloring.hpp"
#include "colorder/exact.hpp"
#include "colorder/matrix_market.hpp"
#include "colorder/metrics.hpp"
#include "colorder/ordering.hpp"
#include "colorder/parallel.hpp"

namespace fs = std::filesystem;
using namespace colorder;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string corpus;
  std::string out;
  std::string order = "degree";
  std::uint32_t ell = 1;
  double alpha = 0.85;
  int pr_iters = 20;
  std::string closeness = "sampled:100";
  std::uint64_t closeness_seed = 1;
  std::string seeds = "1,2,3,4,5";
  std::string baseline = "degree";
  std::vector<std::string> strategies{"all"};
  std::string random_average = "counts";
  double grid_step = 0.05;
  std::uint64_t budget = 10'000'000;
  double time_limit = 0;  // seconds, 0 = none
  unsigned threads = 0;
  std::string format = "csv";
  std::string metric = "all";
  bool timing = false;
  bool no_cache = false;
  std::string list = "all";
  std::string dest = "data/corpus";
};

MetricConfig metric_config(const Options& o) {
  MetricConfig mc;
  mc.pagerank = {o.alpha, o.pr_iters};
  try {
    mc.pagerank.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  mc.closeness.seed = o.closeness_seed;
  if (o.closeness == "exact") {
    mc.closeness.mode = ClosenessConfig::Mode::Exact;
  } else if (o.closeness == "sampled") {
    mc.closeness.mode = ClosenessConfig::Mode::Sampled;
  } else if (o.closeness.rfind("sampled:", 0) == 0) {
    mc.closeness.mode = ClosenessConfig::Mode::Sampled;
    const std::string k = o.closeness.substr(8);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != k.size() || v == 0) throw UsageError("--closeness: bad sample count '" + k + "'");
    mc.closeness.samples = v;
  } else {
    throw UsageError("--closeness must be exact or sampled:<k>");
  }
  mc.threads = o.threads;
  return mc;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoull(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("--seeds: bad seed '" + item + "'");
  }
  if (out.empty()) throw UsageError("--seeds: no seeds given");
  return out;
}

OrderingSpec parse_spec(const std::string& text) {
  try {
    return OrderingSpec::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ExactBudget exact_budget(const Options& o) {
  ExactBudget b;
  b.max_nodes = o.budget;
  if (o.time_limit > 0) b.time_limit = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::duration<double>(o.time_limit));
  return b;
}

BenchConfig bench_config(const Options& o) {
  BenchConfig c;
  if (o.strategies.size() == 1 && o.strategies[0] == "all") {
    c.strategies = all_strategies();
  } else {
    for (const auto& s : o.strategies) c.strategies.push_back(parse_spec(s));
  }
  if (o.baseline == "degree") {
    c.baseline = Baseline::Degree;
  } else if (o.baseline == "optimal") {
    c.baseline = Baseline::Optimal;
  } else {
    throw UsageError("--baseline must be degree or optimal");
  }
  c.metrics = metric_config(o);
  c.random_seeds = parse_seeds(o.seeds);
  c.random_averaging = o.random_average == "ratios" ? RandomAveraging::Ratios : RandomAveraging::Counts;
  c.exact_budget = exact_budget(o);
  c.use_chi_cache = !o.no_cache;
  c.record_timing = o.timing;
  c.threads = o.threads;
  return c;
}

std::string closeness_label(const MetricConfig& mc) {
  return mc.closeness.mode == ClosenessConfig::Mode::Exact ? "exact"
                                                           : "sampled:" + std::to_string(mc.closeness.samples);
}

void echo(const std::string& sub, const std::map<std::string, std::string>& kv) {
  std::cerr << "# colorder " << sub;
  for (const auto& [k, v] : kv) std::cerr << ' ' << k << '=' << v;
  std::cerr << '\n';
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string default_output(const std::string& input, const std::string& sub, const std::string& ext) {
  std::string base = input;
  while (base.size() > 1 && (base.back() == '/' || base.back() == '\\')) base.pop_back();
  return base + "." + sub + "." + ext;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Graph load(const std::string& path) {
  if (!fs::exists(path)) throw std::runtime_error("no such file: " + path);
  return read_graph_file(path).graph;
}

int run_color(const Options& o) {
  OrderingSpec spec = parse_spec(o.order);
  if (spec.strategy == Strategy::Random && !spec.seed) spec.seed = parse_seeds(o.seeds).front();
  const MetricConfig mc = metric_config(o);
  if (o.ell == 0) throw UsageError("--ell must be at least 1");
  const std::string out = o.out.empty() ? default_output(o.input, "color", "csv") : o.out;
  echo("color", {{"input", o.input},
                 {"order", spec.to_string()},
                 {"ell", std::to_string(o.ell)},
                 {"alpha", fmt(mc.pagerank.alpha)},
                 {"pr_iters", std::to_string(mc.pagerank.iterations)},
                 {"closeness", closeness_label(mc)},
                 {"closeness_seed", std::to_string(mc.closeness.seed)},
                 {"out", out}});
  const Graph g = load(o.input);
  OrderingContext ctx(g, mc);
  const auto start = std::chrono::steady_clock::now();
  const Permutation order = ctx.order(spec);
  const Coloring c = greedy_color(g, order, o.ell);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!verify(g, c, o.ell)) throw std::logic_error("coloring failed verification");
  write_file(out, o.format == "json" ? coloring_summary_json(spec.to_string(), o.ell, c.num_colors, ms)
                                     : coloring_csv(c));
  std::cout << "num_colors " << c.num_colors << '\n';
  return kExitOk;
}

int run_metrics(const Options& o) {
  const MetricConfig mc = metric_config(o);
  std::vector<Metric> which;
  if (o.metric == "all") {
    which.assign(kAllMetrics.begin(), kAllMetrics.end());
  } else if (auto m = metric_from_name(o.metric)) {
    which.push_back(*m);
  } else {
    throw UsageError("--metric: unknown metric '" + o.metric + "'");
  }
  const std::string out = o.out.empty() ? default_output(o.input, "metrics", "csv") : o.out;
  echo("metrics", {{"input", o.input},
                   {"metric", o.metric},
                   {"alpha", fmt(mc.pagerank.alpha)},
                   {"pr_iters", std::to_string(mc.pagerank.iterations)},
                   {"closeness", closeness_label(mc)},
                   {"closeness_seed", std::to_string(mc.closeness.seed)},
                   {"out", out}});
  const Graph g = load(o.input);
  std::vector<MetricVector> vs;
  for (Metric m : which) vs.push_back(compute_metric(g, m, mc));
  std::string text = "vertex";
  for (Metric m : which) text += "," + std::string(metric_name(m));
  text += '\n';
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    text += std::to_string(v);
    for (const auto& mv : vs) text += "," + fmt(mv.values[v]);
    text += '\n';
  }
  write_file(out, text);
  std::cout << "vertices " << g.num_vertices() << '\n';
  return kExitOk;
}

int run_exact(const Options& o) {
  const ExactBudget budget = exact_budget(o);
  const std::string out = o.out.empty() ? default_output(o.input, "exact", "csv") : o.out;
  echo("exact", {{"input", o.input},
                 {"budget", std::to_string(budget.max_nodes)},
                 {"time_limit_s", fmt(o.time_limit)},
                 {"out", out}});
  const Graph g = load(o.input);
  const ExactResult r = chromatic_exact(g, budget);
  write_file(chi_cache_path(o.input), exact_result_json(r, fs::path(o.input).stem().string(), g, budget));
  write_file(out, coloring_csv(r.witness));
  std::cout << "chi " << r.chi << '\n';
  std::cout << "lower_bound " << r.lower_bound << '\n';
  std::cout << "timed_out " << (r.timed_out ? "true" : "false") << '\n';
  std::cout << "nodes_explored " << r.nodes_explored << '\n';
  return kExitOk;
}

std::vector<NamedGraph> load_corpus_or_throw(const std::string& dir) {
  if (dir.empty()) throw UsageError("--corpus is required");
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir);
  std::vector<std::string> log;
  auto corpus = load_corpus(dir, log);
  for (const auto& line : log) std::cerr << "# " << line << '\n';
  if (corpus.empty()) throw std::runtime_error("no graphs in " + dir);
  return corpus;
}

std::string scatter_name(const std::string& strategy) {
  std::string s;
  for (char ch : strategy) s += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '.') ? ch : '_';
  return s;
}

int run_bench(const Options& o) {
  const BenchConfig c = bench_config(o);
  ReportFormat format = ReportFormat::Csv;
  std::string ext = "csv";
  if (o.format == "json") {
    format = ReportFormat::Json;
    ext = "json";
  } else if (o.format == "scatter") {
    format = ReportFormat::Scatter;
    ext = "tsv";
  }
  const std::string out = o.out.empty() ? default_output(o.corpus, "bench", ext) : o.out;
  std::map<std::string, std::string> kv;
  for (const auto& [k, v] : run_benchmark({}, c).config) kv[k] = v;
  kv["corpus"] = o.corpus;
  kv["format"] = o.format;
  kv["out"] = out;
  kv["threads"] = std::to_string(resolve_threads(o.threads, std::size_t(-1)));
  echo("bench", kv);

  const auto corpus = load_corpus_or_throw(o.corpus);
  const BenchReport report = run_benchmark(corpus, c);
  for (const auto& line : report.log) std::cerr << "# " << line << '\n';
  if (format == ReportFormat::Scatter) {
    // One series per file: <out-stem>.<strategy>.tsv
    const fs::path base(out);
    for (const auto& s : report.strategies) {
      fs::path p = base;
      p.replace_extension();
      p += "." + scatter_name(s) + ".tsv";
      write_file(p, scatter_series(report, s));
    }
  } else {
    write_file(out, emit_report(report, format));
  }
  for (const auto& a : report.aggregates) std::cout << a.strategy << '\t' << fmt(a.geomean) << '\n';
  return kExitOk;
}

int run_weights_search(const Options& o) {
  const BenchConfig c = bench_config(o);
  if (!(o.grid_step > 0 && o.grid_step <= 1)) throw UsageError("--grid-step must be in (0, 1]");
  const std::string out = o.out.empty() ? default_output(o.corpus, "weights-search", "csv") : o.out;
  echo("weights-search", {{"corpus", o.corpus},
                          {"baseline", o.baseline},
                          {"grid_step", fmt(o.grid_step)},
                          {"alpha", fmt(c.metrics.pagerank.alpha)},
                          {"pr_iters", std::to_string(c.metrics.pagerank.iterations)},
                          {"closeness", closeness_label(c.metrics)},
                          {"closeness_seed", std::to_string(c.metrics.closeness.seed)},
                          {"budget", std::to_string(c.exact_budget.max_nodes)},
                          {"out", out}});
  const auto corpus = load_corpus_or_throw(o.corpus);
  std::vector<std::string> log;
  const auto prepared = prepare_for_grid(corpus, c, log);
  for (const auto& line : log) std::cerr << "# " << line << '\n';
  if (prepared.empty()) throw std::runtime_error("every graph was excluded");
  GridSearchResult r;
  try {
    r = weight_grid_search(prepared, o.grid_step, o.threads, true);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::string text = "degree,nbor2,nbor3,closeness,clustering,pagerank,geomean\n";
  for (const auto& p : r.trace) {
    for (double w : p.weights.w) text += fmt(w) + ",";
    text += fmt(p.geomean) + "\n";
  }
  write_file(out, text);
  OrderingSpec best{Strategy::Weighted, r.best_weights, std::nullopt, std::nullopt};
  std::cout << "best " << best.to_string() << '\n';
  std::cout << "geomean " << fmt(r.best_geomean) << '\n';
  std::cout << "evaluations " << r.evaluations << '\n';
  return kExitOk;
}

int run_fetch(const Options& o) {
  const fs::path script = fs::path(COLORDER_TOOLS_DIR) / "fetch_corpus.py";
  if (o.list != "small" && o.list != "large" && o.list != "all") throw UsageError("--list must be small, large or all");
  echo("fetch", {{"list", o.list}, {"dest", o.dest}, {"script", script.string()}});
  const std::string cmd = "python3 \"" + script.string() + "\" --list " + o.list + " --dest \"" + o.dest + "\"";
  const int rc = std::system(cmd.c_str());
  return rc == 0 ? kExitOk : kExitData;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy graph coloring under vertex orderings"};
  app.require_subcommand(1);
  Options o;

  auto metric_flags = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "PageRank damping factor")->capture_default_str();
    sub->add_option("--pr-iters", o.pr_iters, "PageRank iterations")->capture_default_str();
    sub->add_option("--closeness", o.closeness, "exact | sampled:<k>")->capture_default_str();
    sub->add_option("--closeness-seed", o.closeness_seed, "seed for sampled closeness")->capture_default_str();
    sub->add_option("--threads", o.threads, "worker threads, 0 = all cores")->capture_default_str();
  };
  auto corpus_flags = [&](CLI::App* sub) {
    sub->add_option("--corpus", o.corpus, "directory of .mtx / .el files")->required();
    sub->add_option("--baseline", o.baseline, "degree | optimal")
        ->check(CLI::IsMember({"degree", "optimal"}))
        ->capture_default_str();
    sub->add_option("--budget", o.budget, "exact solver node budget")->capture_default_str();
    sub->add_option("--time-limit", o.time_limit, "exact solver seconds per graph, 0 = none");
    sub->add_option("--seeds", o.seeds, "seeds for the random strategy")->capture_default_str();
    sub->add_flag("--no-cache", o.no_cache, "ignore .chi.json caches");
    sub->add_option("--out", o.out, "output path");
    metric_flags(sub);
  };

  auto* color = app.add_subcommand("color", "color a graph with one ordering");
  color->add_option("graph", o.input, "graph file (.mtx or edge list)")->required();
  color->add_option("--order", o.order, "ordering spec")->capture_default_str();
  color->add_option("--ell", o.ell, "coloring distance")->capture_default_str();
  color->add_option("--format", o.format, "csv (coloring) | json (summary)")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  color->add_option("--out", o.out, "output path");
  color->add_option("--seeds", o.seeds, "first seed is used by an unseeded random order")->capture_default_str();
  metric_flags(color);

  auto* metrics = app.add_subcommand("metrics", "per-vertex metric table");
  metrics->add_option("graph", o.input, "graph file")->required();
  metrics->add_option("--metric", o.metric, "one metric name or all")->capture_default_str();
  metrics->add_option("--out", o.out, "output path");
  metric_flags(metrics);

  auto* exact = app.add_subcommand("exact", "exact chromatic number");
  exact->add_option("graph", o.input, "graph file")->required();
  exact->add_option("--budget", o.budget, "search node budget")->capture_default_str();
  exact->add_option("--time-limit", o.time_limit, "seconds, 0 = none");
  exact->add_option("--out", o.out, "witness coloring path");

  auto* bench = app.add_subcommand("bench", "all strategies over a corpus");
  corpus_flags(bench);
  bench->add_option("--strategies", o.strategies, "all, or a list of ordering specs")->capture_default_str();
  bench->add_option("--random-average", o.random_average, "counts | ratios")
      ->check(CLI::IsMember({"counts", "ratios"}))
      ->capture_default_str();
  bench->add_option("--format", o.format, "csv | json | scatter")
      ->check(CLI::IsMember({"csv", "json", "scatter"}))
      ->capture_default_str();
  bench->add_flag("--timing", o.timing, "record wall-clock runtimes");

  auto* search = app.add_subcommand("weights-search", "grid search over weight vectors");
  corpus_flags(search);
  search->add_option("--grid-step", o.grid_step, "grid spacing")->capture_default_str();

  auto* fetch = app.add_subcommand("fetch", "download the benchmark corpus");
  fetch->add_option("--list", o.list, "small | large | all")->capture_default_str();
  fetch->add_option("--dest", o.dest, "destination root")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kExitUsage;
  }

  try {
    if (*color) return run_color(o);
    if (*metrics) return run_metrics(o);
    if (*exact) return run_exact(o);
    if (*bench) return run_bench(o);
    if (*search) return run_weights_search(o);
    if (*fetch) return run_fetch(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: line " << e.line() << ": " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
