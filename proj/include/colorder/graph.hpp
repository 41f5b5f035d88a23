#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace colorder {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Thrown when an edge endpoint or a source vertex is outside [0, n).
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Immutable undirected simple graph in compressed-row layout.
///
/// Every edge {u, v} is stored twice (u -> v and v -> u). Neighbor lists are
/// sorted ascending, contain no duplicates and no self-loops, so
/// offsets().back() == 2 * num_edges().
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a graph from an arbitrary list of vertex pairs. Self-loops are
  /// dropped, duplicates merged and every pair is symmetrized.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  /// Adopts an already-clean compressed layout. Checks every invariant and
  /// throws std::invalid_argument on violation.
  static Graph from_csr(std::vector<std::uint64_t> offsets, std::vector<VertexId> targets);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return targets_.size() / 2; }

  std::size_t degree(VertexId v) const {
    return static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], degree(v)};
  }

  bool has_edge(VertexId u, VertexId v) const;
  std::size_t max_degree() const;
  bool has_isolated_vertex() const;

  /// Undirected edge set with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  std::span<const std::uint64_t> offsets() const { return offsets_; }
  std::span<const VertexId> targets() const { return targets_; }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> targets_;
};

/// Shortest-path distances from one source.
struct DistanceField {
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  VertexId source = 0;
  std::vector<std::uint32_t> dist;
};

/// Reusable BFS state. Holding one per worker lets many traversals share a
/// single Graph without reallocating; the distance array is reset lazily
/// through the visit queue, so a run costs O(size of the explored ball).
class BfsScratch {
 public:
  explicit BfsScratch(std::size_t n);

  /// Runs a BFS from `source`, stopping at depth `cap` when given, and calls
  /// visit(vertex, distance) for every reached vertex in nondecreasing
  /// distance order (the source first, with distance 0).
  template <typename Visit>
  void run(const Graph& g, VertexId source, std::optional<std::uint32_t> cap, Visit&& visit);

  /// Distances of the most recent run; kUnreachable outside the explored ball.
  std::span<const std::uint32_t> distances() const { return dist_; }

 private:
  void reset();

  std::vector<std::uint32_t> dist_;
  std::vector<VertexId> queue_;
};

template <typename Visit>
void BfsScratch::run(const Graph& g, VertexId source, std::optional<std::uint32_t> cap,
                     Visit&& visit) {
  reset();
  const std::uint32_t limit = cap.value_or(DistanceField::kUnreachable - 1);
  dist_[source] = 0;
  queue_.push_back(source);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const VertexId v = queue_[head];
    const std::uint32_t d = dist_[v];
    visit(v, d);
    if (d >= limit) continue;
    for (VertexId u : g.neighbors(v)) {
      if (dist_[u] == DistanceField::kUnreachable) {
        dist_[u] = d + 1;
        queue_.push_back(u);
      }
    }
  }
}

/// Exact unweighted distances from `source`; vertices farther than `cap`
/// (when given) or in other components are kUnreachable.
DistanceField bfs_distances(const Graph& g, VertexId source,
                            std::optional<std::uint32_t> cap = std::nullopt);

struct Components {
  std::vector<std::uint32_t> label;  // component id per vertex
  std::vector<std::size_t> size;     // vertex count per component id
};

Components connected_components(const Graph& g);

}  // namespace colorder
