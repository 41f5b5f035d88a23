#include "colorder/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace colorder {

FirstFit::FirstFit(const Graph& g, std::uint32_t ell) : graph_(&g), ell_(ell) {
  if (ell == 0) throw std::invalid_argument("coloring distance must be >= 1");
  const std::size_t n = g.num_vertices();
  // First fit never needs more colors than the conflict-neighborhood size + 1.
  forbidden_.assign((ell == 1 ? g.max_degree() : n) + 2, 0);
  result_.colors.assign(n, Coloring::kUncolored);
  if (ell > 1) bfs_.emplace(n);
}

void FirstFit::mark(std::int32_t c) {
  if (c >= 0 && !forbidden_[static_cast<std::size_t>(c)]) {
    forbidden_[static_cast<std::size_t>(c)] = 1;
    touched_.push_back(c);
  }
}

const Coloring& FirstFit::run(std::span<const VertexId> order) {
  auto& colors = result_.colors;
  std::fill(colors.begin(), colors.end(), Coloring::kUncolored);
  std::int32_t top = -1;
  for (VertexId v : order) {
    if (ell_ == 1) {
      for (VertexId u : graph_->neighbors(v)) mark(colors[u]);
    } else {
      bfs_->run(*graph_, v, ell_, [&](VertexId u, std::uint32_t) {
        if (u != v) mark(colors[u]);
      });
    }
    std::int32_t col = 0;
    while (forbidden_[static_cast<std::size_t>(col)]) ++col;
    colors[v] = col;
    top = std::max(top, col);
    for (std::int32_t c : touched_) forbidden_[static_cast<std::size_t>(c)] = 0;
    touched_.clear();
  }
  result_.num_colors = top + 1;
  return result_;
}

Coloring greedy_color(const Graph& g, const Permutation& order, std::uint32_t ell) {
  if (!order.is_valid(g.num_vertices())) {
    throw std::invalid_argument("order is not a permutation of the graph's vertices");
  }
  FirstFit ff(g, ell);
  return ff.run(order.order);
}

bool verify(const Graph& g, const Coloring& coloring, std::uint32_t ell) {
  const std::size_t n = g.num_vertices();
  if (coloring.colors.size() != n || ell == 0) return false;
  for (std::int32_t c : coloring.colors) {
    if (c < 0) return false;
  }
  if (ell == 1) {
    for (const auto& [u, v] : g.edges()) {
      if (coloring.colors[u] == coloring.colors[v]) return false;
    }
    return true;
  }
  BfsScratch bfs(n);
  for (VertexId v = 0; v < n; ++v) {
    bool ok = true;
    bfs.run(g, v, ell, [&](VertexId u, std::uint32_t) {
      if (u != v && coloring.colors[u] == coloring.colors[v]) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::size_t count_colors(const Coloring& coloring) {
  std::vector<std::int32_t> seen(coloring.colors);
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

Coloring make_coloring(std::vector<std::int32_t> colors) {
  Coloring c;
  c.num_colors = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  c.colors = std::move(colors);
  return c;
}

std::string coloring_csv(const Coloring& coloring) {
  std::string out = "vertex,color\n";
  for (std::size_t v = 0; v < coloring.colors.size(); ++v) {
    out += std::to_string(v) + ',' + std::to_string(coloring.colors[v]) + '\n';
  }
  return out;
}

std::string coloring_summary_json(const std::string& strategy, std::uint32_t ell, std::size_t num_colors,
                                  double runtime_ms) {
  nlohmann::json j = {
      {"strategy", strategy}, {"ell", ell}, {"num_colors", num_colors}, {"runtime_ms", runtime_ms}};
  return j.dump(2) + '\n';
}

}  // namespace colorder
