#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colorder/graph.hpp"
#include "colorder/ordering.hpp"

namespace colorder {

struct Coloring {
  static constexpr std::int32_t kUncolored = -1;

  std::vector<std::int32_t> colors;
  std::int32_t num_colors = 0;  // max color + 1

  bool operator==(const Coloring&) const = default;
};

/// First-fit coloring with reusable scratch, for callers that color the same
/// graph under many orders. Two vertices conflict when their distance is at
/// most `ell`; ell = 1 is ordinary coloring.
class FirstFit {
 public:
  FirstFit(const Graph& g, std::uint32_t ell = 1);

  /// `order` must be a permutation of the vertices (unchecked).
  const Coloring& run(std::span<const VertexId> order);

 private:
  void mark(std::int32_t c);

  const Graph* graph_;
  std::uint32_t ell_;
  Coloring result_;
  std::vector<char> forbidden_;
  std::vector<std::int32_t> touched_;
  std::optional<BfsScratch> bfs_;
};

/// Visits vertices in `order`, giving each the smallest color absent from its
/// already-colored vertices within distance `ell`. Throws
/// std::invalid_argument for an invalid permutation or ell == 0.
Coloring greedy_color(const Graph& g, const Permutation& order, std::uint32_t ell = 1);

/// True iff every vertex is colored and no two distinct vertices within
/// distance `ell` share a color.
bool verify(const Graph& g, const Coloring& coloring, std::uint32_t ell = 1);

/// Number of distinct colors.
std::size_t count_colors(const Coloring& coloring);

/// Wraps a raw assignment, filling num_colors.
Coloring make_coloring(std::vector<std::int32_t> colors);

std::string coloring_csv(const Coloring& coloring);
std::string coloring_summary_json(const std::string& strategy, std::uint32_t ell, std::size_t num_colors,
                                  double runtime_ms);

}  // namespace colorder
