#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colorder/graph.hpp"

namespace colorder {

/// The six vertex scores used to build orderings, in the fixed order used
/// by weight vectors.
enum class Metric { Degree, Nbor2, Nbor3, Closeness, Clustering, PageRank };

inline constexpr std::array<Metric, 6> kAllMetrics = {
    Metric::Degree,    Metric::Nbor2,      Metric::Nbor3,
    Metric::Closeness, Metric::Clustering, Metric::PageRank};

std::string_view metric_name(Metric m);
std::optional<Metric> metric_from_name(std::string_view name);

/// One finite score per vertex.
struct MetricVector {
  std::string metric;
  std::vector<double> values;

  bool operator==(const MetricVector&) const = default;
};

struct PageRankParams {
  double alpha = 0.85;
  int iterations = 20;

  /// Throws std::invalid_argument unless 0 < alpha < 1 and iterations >= 1.
  void validate() const;
};

struct ClosenessConfig {
  enum class Mode { Exact, Sampled };
  Mode mode = Mode::Sampled;
  std::size_t samples = 100;  // clamped to n
  std::uint64_t seed = 1;
};

struct MetricConfig {
  PageRankParams pagerank;
  ClosenessConfig closeness;
  unsigned threads = 0;  // 0 = all cores; results do not depend on it
};

MetricVector degree(const Graph& g);

/// Number of vertices at distance exactly k, by depth-capped BFS from every
/// vertex. k = 1 reproduces degree(); the orderings use k = 2 and k = 3.
MetricVector k_neighborhood(const Graph& g, std::uint32_t k, unsigned threads = 0);

/// 1 / sum of distances to the other vertices of the same component;
/// 0 for isolated vertices.
MetricVector closeness_exact(const Graph& g, unsigned threads = 0);

/// Closeness estimated from BFS runs out of `samples` distinct sources drawn
/// uniformly with Rng(seed). For vertex v with s_v sampled sources other than
/// itself in its component of size n_v, the distance sum is estimated as
/// (n_v - 1) * (sum of those distances) / s_v and the score is its
/// reciprocal. With samples >= n it equals closeness_exact bit for bit.
MetricVector closeness_sampled(const Graph& g, std::size_t samples, std::uint64_t seed,
                               unsigned threads = 0);

/// Edges among the neighbors of v divided by d_v (d_v - 1). The denominator
/// counts ordered pairs, so scores lie in [0, 0.5]. Vertices with d_v <= 1
/// score 0.
MetricVector clustering_coefficient(const Graph& g, unsigned threads = 0);

using PageRankObserver = std::function<void(int iteration, std::span<const double> scores)>;

/// Synchronous power iteration from the uniform vector:
///   pr_i(v) = (1 - alpha) / n + alpha * sum_{u ~ v} pr_{i-1}(u) / d_u
/// for exactly params.iterations steps. Isolated vertices send no mass.
/// The observer, when set, sees every iterate (1-based iteration index).
MetricVector pagerank(const Graph& g, const PageRankParams& params,
                      const PageRankObserver& observer = {}, unsigned threads = 0);

/// All six metrics of one graph.
struct MetricSet {
  std::array<MetricVector, 6> vectors;

  const MetricVector& operator[](Metric m) const { return vectors[static_cast<std::size_t>(m)]; }
  MetricVector& operator[](Metric m) { return vectors[static_cast<std::size_t>(m)]; }
};

MetricVector compute_metric(const Graph& g, Metric m, const MetricConfig& config);
MetricSet compute_metric_set(const Graph& g, const MetricConfig& config);

/// `vertex,value` rows with 17 significant digits.
std::string metric_csv(const MetricVector& metric);

}  // namespace colorder
