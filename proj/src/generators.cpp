#include "colorder/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "colorder/rng.hpp"

namespace colorder::gen {

namespace {
VertexId id(std::size_t v) { return static_cast<VertexId>(v); }
}  // namespace

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(id(v - 1), id(v));
  return Graph::from_edge_list(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(id(v), id((v + 1) % n));
  return Graph::from_edge_list(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(id(u), id(v));
  }
  return Graph::from_edge_list(n, edges);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.emplace_back(0, id(v));
  return Graph::from_edge_list(leaves + 1, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t v = 0; v < b; ++v) edges.emplace_back(id(u), id(a + v));
  }
  return Graph::from_edge_list(a + b, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edge_list(10, edges);
}

Graph grid2d(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(id(v), id(v + 1));
      if (r + 1 < rows) edges.emplace_back(id(v), id(v + cols));
    }
  }
  return Graph::from_edge_list(rows * cols, edges);
}

Graph crown(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) edges.emplace_back(id(i), id(k + j));
    }
  }
  return Graph::from_edge_list(2 * k, edges);
}

std::vector<VertexId> crown_interleaved_order(std::size_t k) {
  std::vector<VertexId> order;
  for (std::size_t i = 0; i < k; ++i) {
    order.push_back(id(i));
    order.push_back(id(k + i));
  }
  return order;
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.unit() < p) edges.emplace_back(id(u), id(v));
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph random_geometric(std::size_t n, double radius, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> x(n), y(n);
  for (std::size_t v = 0; v < n; ++v) {
    x[v] = rng.unit();
    y[v] = rng.unit();
  }
  // Bucket points into cells of side >= radius so only adjacent cells are scanned.
  const auto cells = static_cast<std::size_t>(std::max(1.0, std::floor(1.0 / radius)));
  auto cell_of = [&](double t) { return std::min(cells - 1, static_cast<std::size_t>(t * cells)); };
  std::vector<std::vector<VertexId>> bucket(cells * cells);
  for (std::size_t v = 0; v < n; ++v) bucket[cell_of(y[v]) * cells + cell_of(x[v])].push_back(id(v));

  const double r2 = radius * radius;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t cx = cell_of(x[v]);
    const std::size_t cy = cell_of(y[v]);
    for (std::size_t yy = cy == 0 ? 0 : cy - 1; yy <= std::min(cells - 1, cy + 1); ++yy) {
      for (std::size_t xx = cx == 0 ? 0 : cx - 1; xx <= std::min(cells - 1, cx + 1); ++xx) {
        for (VertexId u : bucket[yy * cells + xx]) {
          if (u <= v) continue;
          const double dx = x[u] - x[v];
          const double dy = y[u] - y[v];
          if (dx * dx + dy * dy < r2) edges.emplace_back(id(v), u);
        }
      }
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph barabasi_albert(std::size_t n, std::size_t links, std::uint64_t seed) {
  if (links == 0) throw std::invalid_argument("barabasi_albert needs links >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<VertexId> endpoints;  // each vertex appears once per incident edge
  const std::size_t core = std::min(n, links + 1);
  for (std::size_t u = 0; u < core; ++u) {
    for (std::size_t v = u + 1; v < core; ++v) {
      edges.emplace_back(id(u), id(v));
      endpoints.push_back(id(u));
      endpoints.push_back(id(v));
    }
  }
  std::vector<VertexId> picked;
  for (std::size_t v = core; v < n; ++v) {
    picked.clear();
    while (picked.size() < links) {
      const VertexId u = endpoints[rng.below(endpoints.size())];
      if (std::find(picked.begin(), picked.end(), u) == picked.end()) picked.push_back(u);
    }
    for (VertexId u : picked) {
      edges.emplace_back(u, id(v));
      endpoints.push_back(u);
      endpoints.push_back(id(v));
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace colorder::gen
