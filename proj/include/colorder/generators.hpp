#pragma once

#include <cstdint>
#include <vector>

#include "colorder/graph.hpp"

namespace colorder::gen {

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph star(std::size_t leaves);  // hub is vertex 0
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen();
Graph grid2d(std::size_t rows, std::size_t cols);

/// K_{k,k} minus a perfect matching. Side A is 0..k-1, side B is k..2k-1 and
/// vertex i is not adjacent to k+i.
Graph crown(std::size_t k);

/// a0, b0, a1, b1, ...: the matched non-adjacent pairs placed back to back.
std::vector<VertexId> crown_interleaved_order(std::size_t k);

/// Erdős–Rényi G(n, p).
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// n points uniform in the unit square, joined when closer than `radius`.
Graph random_geometric(std::size_t n, double radius, std::uint64_t seed);

/// Preferential attachment: each new vertex links to `links` distinct
/// existing vertices chosen proportionally to degree.
Graph barabasi_albert(std::size_t n, std::size_t links, std::uint64_t seed);

}  // namespace colorder::gen
