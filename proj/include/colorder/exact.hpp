#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "colorder/coloring.hpp"
#include "colorder/graph.hpp"

namespace colorder {

struct ExactBudget {
  std::uint64_t max_nodes = 10'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
};

struct ExactResult {
  std::size_t chi = 0;  // best upper bound when timed_out
  Coloring witness;
  std::uint64_t nodes_explored = 0;
  bool timed_out = false;
  std::size_t lower_bound = 0;  // size of the clique used to seed the search

  bool operator==(const ExactResult&) const = default;
};

/// Chromatic number by DSATUR branch and bound.
///
/// The search starts from the first-fit coloring in degree order as the
/// incumbent and pins a greedily grown clique to colors 0..q-1. It branches
/// on the uncolored vertex with the most distinct neighbor colors (ties:
/// larger degree, then smaller id), tries every admissible existing color and
/// then at most one new color, and prunes any branch that cannot beat the
/// incumbent. Stops early once the incumbent matches the clique bound.
ExactResult chromatic_exact(const Graph& g, const ExactBudget& budget = {});

/// Exhaustive search over assignments for k = 1, 2, ...; test oracle only.
/// Throws std::invalid_argument when n > 12.
std::size_t brute_force_chromatic(const Graph& g);

/// Greedily grown clique (vertices by descending degree), used as the lower
/// bound.
std::vector<VertexId> greedy_clique(const Graph& g);

/// `<stem>.chi.json` next to the graph file.
std::filesystem::path chi_cache_path(const std::filesystem::path& graph_file);

std::string exact_result_json(const ExactResult& r, const std::string& graph_name, const Graph& g,
                              const ExactBudget& budget);

/// Reads a cached result; nullopt when the file is missing, unreadable, or
/// was written for a graph of different size.
std::optional<ExactResult> load_cached_exact(const std::filesystem::path& cache_file, const Graph& g);

}  // namespace colorder
