#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colorder/graph.hpp"
#include "colorder/metrics.hpp"

namespace colorder {

/// Vertex visit order; a bijection on {0, ..., n-1}.
struct Permutation {
  std::vector<VertexId> order;

  bool is_valid(std::size_t n) const;
  bool operator==(const Permutation&) const = default;
};

/// Nonnegative coefficients for (degree, nbor2, nbor3, closeness, clustering,
/// pagerank), summing to 1.
struct WeightVector {
  std::array<double, 6> w{};

  static WeightVector uniform();
  static WeightVector one_hot(Metric m);
  /// The best combination reported for the small-graph corpus:
  /// (0.10, 0.05, 0.10, 0.70, 0.05, 0.00).
  static WeightVector reported_best();

  double operator[](Metric m) const { return w[static_cast<std::size_t>(m)]; }

  /// Throws std::invalid_argument on negative entries or a sum off by more
  /// than 1e-9.
  void validate() const;

  bool operator==(const WeightVector&) const = default;
  auto operator<=>(const WeightVector&) const = default;
};

enum class Strategy { Degree, Nbor2, Nbor3, Closeness, Clustering, PageRank, Random, Uniform, Weighted };

/// Strategy plus its parameters. String forms:
///   degree | nbor2 | nbor3 | clustering | pagerank | uniform
///   closeness[:exact|:sampled]
///   random[:seed=<u64>]
///   weighted[:w1,w2,w3,w4,w5,w6]   (bare `weighted` = reported_best())
struct OrderingSpec {
  Strategy strategy = Strategy::Degree;
  std::optional<WeightVector> weights;
  std::optional<std::uint64_t> seed;
  std::optional<ClosenessConfig::Mode> closeness_mode;

  static OrderingSpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const OrderingSpec&) const = default;
};

/// The nine strategies with default parameters, in table order. `random`
/// carries no seed; the benchmark supplies its own seed list.
std::vector<OrderingSpec> all_strategies();

/// Sorted by score descending, ties by ascending vertex id.
Permutation order_descending(std::span<const double> scores);
inline Permutation order_descending(const MetricVector& m) { return order_descending(m.values); }

/// (x - mean) / population std. A constant vector maps to all zeros.
MetricVector zscore(const MetricVector& scores);

/// values[v] = sum_m weights[m] * normalized[m][v]. `normalized` must hold
/// the six metrics in kAllMetrics order, all of one length.
MetricVector combine(std::span<const MetricVector> normalized, const WeightVector& weights);

/// Fisher-Yates shuffle of 0..n-1 driven by Rng(seed).
Permutation random_order(std::size_t n, std::uint64_t seed);

/// Lazily computed raw and z-scored metrics of one graph, shared by every
/// strategy evaluated on it.
class OrderingContext {
 public:
  OrderingContext(const Graph& g, MetricConfig config);

  const Graph& graph() const { return *graph_; }
  const MetricConfig& config() const { return config_; }

  const MetricVector& raw(Metric m);
  const MetricVector& normalized(Metric m);
  std::span<const MetricVector> all_normalized();

  /// Throws std::invalid_argument for `random` without a seed or `weighted`
  /// without weights.
  Permutation order(const OrderingSpec& spec);

  /// Computes every metric now (used before timing individual strategies).
  void materialize();

 private:
  const MetricVector& closeness(ClosenessConfig::Mode mode);

  const Graph* graph_;
  MetricConfig config_;
  std::array<std::optional<MetricVector>, 6> raw_;
  std::array<std::optional<MetricVector>, 6> normalized_;
  std::vector<MetricVector> normalized_all_;
  std::map<ClosenessConfig::Mode, MetricVector> closeness_override_;
};

}  // namespace colorder
