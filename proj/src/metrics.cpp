#include "colorder/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "colorder/parallel.hpp"
#include "colorder/rng.hpp"

namespace colorder {

namespace {

constexpr std::size_t kBlock = 256;

/// Splits [0, n) into fixed blocks so the partition never depends on the
/// worker count.
template <typename Body>
void for_blocks(std::size_t n, unsigned threads, Body&& body) {
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  parallel_for(blocks, threads, [&](unsigned worker, std::size_t b) {
    const std::size_t begin = b * kBlock;
    body(worker, begin, std::min(n, begin + kBlock));
  });
}

std::vector<BfsScratch> make_scratch(const Graph& g, unsigned threads) {
  const std::size_t n = g.num_vertices();
  const unsigned workers = resolve_threads(threads, (n + kBlock - 1) / kBlock);
  std::vector<BfsScratch> scratch;
  scratch.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) scratch.emplace_back(n);
  return scratch;
}

}  // namespace

std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::Degree: return "degree";
    case Metric::Nbor2: return "nbor2";
    case Metric::Nbor3: return "nbor3";
    case Metric::Closeness: return "closeness";
    case Metric::Clustering: return "clustering";
    case Metric::PageRank: return "pagerank";
  }
  return "unknown";
}

std::optional<Metric> metric_from_name(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (metric_name(m) == name) return m;
  }
  return std::nullopt;
}

void PageRankParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("PageRank alpha must be in (0, 1)");
  if (iterations < 1) throw std::invalid_argument("PageRank needs at least one iteration");
}

MetricVector degree(const Graph& g) {
  MetricVector out{"degree", std::vector<double>(g.num_vertices())};
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.values[v] = static_cast<double>(g.degree(v));
  return out;
}

MetricVector k_neighborhood(const Graph& g, std::uint32_t k, unsigned threads) {
  if (k == 0) throw std::invalid_argument("k_neighborhood needs k >= 1");
  const std::size_t n = g.num_vertices();
  MetricVector out{"nbor" + std::to_string(k), std::vector<double>(n, 0.0)};
  auto scratch = make_scratch(g, threads);
  for_blocks(n, threads, [&](unsigned worker, std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) {
      std::size_t count = 0;
      scratch[worker].run(g, static_cast<VertexId>(v), k,
                          [&](VertexId, std::uint32_t d) { count += (d == k); });
      out.values[v] = static_cast<double>(count);
    }
  });
  return out;
}

MetricVector closeness_exact(const Graph& g, unsigned threads) {
  const std::size_t n = g.num_vertices();
  MetricVector out{"closeness", std::vector<double>(n, 0.0)};
  auto scratch = make_scratch(g, threads);
  for_blocks(n, threads, [&](unsigned worker, std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) {
      std::uint64_t sum = 0;
      scratch[worker].run(g, static_cast<VertexId>(v), std::nullopt,
                          [&](VertexId, std::uint32_t d) { sum += d; });
      out.values[v] = sum == 0 ? 0.0 : 1.0 / static_cast<double>(sum);
    }
  });
  return out;
}

MetricVector closeness_sampled(const Graph& g, std::size_t samples, std::uint64_t seed,
                               unsigned threads) {
  if (samples == 0) throw std::invalid_argument("closeness_sampled needs at least one sample");
  const std::size_t n = g.num_vertices();
  MetricVector out{"closeness", std::vector<double>(n, 0.0)};
  if (n == 0) return out;

  const std::size_t k = std::min(samples, n);
  std::vector<VertexId> sources(n);
  std::iota(sources.begin(), sources.end(), VertexId{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < k && i + 1 < n; ++i) {
    std::swap(sources[i], sources[i + rng.below(n - i)]);
  }
  sources.resize(k);

  // Integer accumulators make the reduction independent of scheduling.
  const unsigned workers = resolve_threads(threads, k);
  std::vector<std::vector<std::uint64_t>> sum(workers, std::vector<std::uint64_t>(n, 0));
  std::vector<std::vector<std::uint32_t>> reached(workers, std::vector<std::uint32_t>(n, 0));
  std::vector<BfsScratch> scratch;
  for (unsigned w = 0; w < workers; ++w) scratch.emplace_back(n);
  parallel_for(k, workers, [&](unsigned worker, std::size_t i) {
    auto& s = sum[worker];
    auto& r = reached[worker];
    scratch[worker].run(g, sources[i], std::nullopt, [&](VertexId v, std::uint32_t d) {
      s[v] += d;
      ++r[v];
    });
  });

  std::vector<char> is_source(n, 0);
  for (VertexId s : sources) is_source[s] = 1;
  const Components cc = connected_components(g);
  for (std::size_t v = 0; v < n; ++v) {
    std::uint64_t total = 0;
    std::uint64_t hits = 0;
    for (unsigned w = 0; w < workers; ++w) {
      total += sum[w][v];
      hits += reached[w][v];
    }
    hits -= is_source[v];  // v's own zero distance says nothing about the others
    if (hits == 0 || total == 0) continue;
    // Estimated sum = (n_v - 1) * mean distance to the sampled sources. The
    // product is an exact integer, so a full sample reproduces 1 / total.
    const std::uint64_t others = cc.size[cc.label[v]] - 1;
    out.values[v] = 1.0 / (static_cast<double>(others * total) / static_cast<double>(hits));
  }
  return out;
}

MetricVector clustering_coefficient(const Graph& g, unsigned threads) {
  const std::size_t n = g.num_vertices();
  MetricVector out{"clustering", std::vector<double>(n, 0.0)};
  const unsigned workers = resolve_threads(threads, (n + kBlock - 1) / kBlock);
  std::vector<std::vector<std::uint32_t>> stamp(workers, std::vector<std::uint32_t>(n, 0));
  for_blocks(n, threads, [&](unsigned worker, std::size_t begin, std::size_t end) {
    auto& mark = stamp[worker];
    for (std::size_t v = begin; v < end; ++v) {
      const auto vid = static_cast<VertexId>(v);
      const std::size_t d = g.degree(vid);
      if (d <= 1) continue;
      const auto tag = static_cast<std::uint32_t>(v + 1);
      for (VertexId u : g.neighbors(vid)) mark[u] = tag;
      std::uint64_t links = 0;
      for (VertexId u : g.neighbors(vid)) {
        for (VertexId w : g.neighbors(u)) links += (w > u && mark[w] == tag);
      }
      out.values[v] = static_cast<double>(links) / (static_cast<double>(d) * static_cast<double>(d - 1));
    }
  });
  return out;
}

MetricVector pagerank(const Graph& g, const PageRankParams& params, const PageRankObserver& observer,
                      unsigned threads) {
  params.validate();
  const std::size_t n = g.num_vertices();
  MetricVector out{"pagerank", std::vector<double>(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n))};
  if (n == 0) return out;

  const double teleport = (1.0 - params.alpha) / static_cast<double>(n);
  std::vector<double> share(n);
  std::vector<double> next(n);
  for (int it = 1; it <= params.iterations; ++it) {
    for (VertexId u = 0; u < n; ++u) {
      const std::size_t d = g.degree(u);
      share[u] = d == 0 ? 0.0 : out.values[u] / static_cast<double>(d);
    }
    for_blocks(n, threads, [&](unsigned, std::size_t begin, std::size_t end) {
      for (std::size_t v = begin; v < end; ++v) {
        double acc = 0.0;
        for (VertexId u : g.neighbors(static_cast<VertexId>(v))) acc += share[u];
        next[v] = teleport + params.alpha * acc;
      }
    });
    out.values.swap(next);
    if (observer) observer(it, out.values);
  }
  return out;
}

MetricVector compute_metric(const Graph& g, Metric m, const MetricConfig& config) {
  switch (m) {
    case Metric::Degree: return degree(g);
    case Metric::Nbor2: return k_neighborhood(g, 2, config.threads);
    case Metric::Nbor3: return k_neighborhood(g, 3, config.threads);
    case Metric::Closeness:
      return config.closeness.mode == ClosenessConfig::Mode::Exact
                 ? closeness_exact(g, config.threads)
                 : closeness_sampled(g, config.closeness.samples, config.closeness.seed,
                                     config.threads);
    case Metric::Clustering: return clustering_coefficient(g, config.threads);
    case Metric::PageRank: return pagerank(g, config.pagerank, {}, config.threads);
  }
  throw std::invalid_argument("unknown metric");
}

MetricSet compute_metric_set(const Graph& g, const MetricConfig& config) {
  MetricSet set;
  for (Metric m : kAllMetrics) set[m] = compute_metric(g, m, config);
  return set;
}

std::string metric_csv(const MetricVector& metric) {
  std::string out = "vertex,value\n";
  char buf[64];
  for (std::size_t v = 0; v < metric.values.size(); ++v) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", v, metric.values[v]);
    out += buf;
  }
  return out;
}

}  // namespace colorder
