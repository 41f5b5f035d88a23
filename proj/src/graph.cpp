#include "colorder/graph.hpp"

#include <algorithm>
#include <string>

namespace colorder {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<VertexId>::max()) {
    throw BoundsError("vertex count " + std::to_string(n) + " exceeds 32-bit ids");
  }
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw BoundsError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") has an endpoint >= n = " + std::to_string(n));
    }
    if (u == v) continue;
    ++counts[u + 1];
    ++counts[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) counts[i + 1] += counts[i];

  std::vector<VertexId> raw(counts[n]);
  std::vector<std::uint64_t> fill(counts.begin(), counts.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.targets_.reserve(raw.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(counts[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(counts[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    g.targets_.insert(g.targets_.end(), first, last);
    g.offsets_[v + 1] = g.targets_.size();
  }
  g.targets_.shrink_to_fit();
  return g;
}

Graph Graph::from_csr(std::vector<std::uint64_t> offsets, std::vector<VertexId> targets) {
  if (offsets.empty() || offsets.front() != 0 || offsets.back() != targets.size()) {
    throw std::invalid_argument("offsets must start at 0 and end at the target count");
  }
  const std::size_t n = offsets.size() - 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (offsets[v] > offsets[v + 1]) throw std::invalid_argument("offsets must be nondecreasing");
    for (std::uint64_t i = offsets[v]; i < offsets[v + 1]; ++i) {
      if (targets[i] >= n) throw BoundsError("neighbor id out of range");
      if (targets[i] == v) throw std::invalid_argument("self-loop in adjacency");
      if (i > offsets[v] && targets[i - 1] >= targets[i]) {
        throw std::invalid_argument("neighbor lists must be strictly ascending");
      }
    }
  }
  Graph g;
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(targets);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : g.neighbors(v)) {
      if (!g.has_edge(u, v)) throw std::invalid_argument("adjacency is not symmetric");
    }
  }
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_isolated_vertex() const {
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (degree(v) == 0) return true;
  }
  return false;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId v = 0; v < num_vertices(); ++v) {
    for (VertexId u : neighbors(v)) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;
}

BfsScratch::BfsScratch(std::size_t n) : dist_(n, DistanceField::kUnreachable) {
  queue_.reserve(n);
}

void BfsScratch::reset() {
  for (VertexId v : queue_) dist_[v] = DistanceField::kUnreachable;
  queue_.clear();
}

DistanceField bfs_distances(const Graph& g, VertexId source, std::optional<std::uint32_t> cap) {
  if (source >= g.num_vertices()) {
    throw BoundsError("BFS source " + std::to_string(source) + " out of range");
  }
  DistanceField field;
  field.source = source;
  field.dist.assign(g.num_vertices(), DistanceField::kUnreachable);
  BfsScratch scratch(g.num_vertices());
  scratch.run(g, source, cap, [&](VertexId v, std::uint32_t d) { field.dist[v] = d; });
  return field;
}

Components connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  Components cc;
  cc.label.assign(n, kNone);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (cc.label[s] != kNone) continue;
    const auto id = static_cast<std::uint32_t>(cc.size.size());
    std::size_t count = 0;
    cc.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      ++count;
      for (VertexId u : g.neighbors(v)) {
        if (cc.label[u] == kNone) {
          cc.label[u] = id;
          stack.push_back(u);
        }
      }
    }
    cc.size.push_back(count);
  }
  return cc;
}

}  // namespace colorder
