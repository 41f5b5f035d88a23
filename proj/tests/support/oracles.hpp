#pragma once

// Independent reference computations for the unit and acceptance suites.
// Nothing here calls the library routine it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "colorder/graph.hpp"

namespace colorder::oracle {

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// All-pairs distances by Floyd-Warshall on the adjacency matrix.
inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline std::vector<double> closeness(const Graph& g) {
  const auto d = all_pairs(g);
  std::vector<double> out(g.num_vertices(), 0.0);
  for (std::size_t v = 0; v < out.size(); ++v) {
    long long sum = 0;
    for (int x : d[v]) if (x < kInf) sum += x;
    out[v] = sum == 0 ? 0.0 : 1.0 / static_cast<double>(sum);
  }
  return out;
}

inline std::vector<double> at_distance(const Graph& g, int k) {
  const auto d = all_pairs(g);
  std::vector<double> out(g.num_vertices(), 0.0);
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = static_cast<double>(std::count(d[v].begin(), d[v].end(), k));
  return out;
}

inline std::vector<double> clustering(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<double> out(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    const double d = static_cast<double>(nb.size());
    if (nb.size() < 2) continue;
    int links = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) links += g.has_edge(nb[i], nb[j]);
    out[v] = links / (d * (d - 1));
  }
  return out;
}

/// PageRank by pushing mass along edges in long double, one step at a time.
inline std::vector<long double> pagerank(const Graph& g, long double alpha, int iterations) {
  const std::size_t n = g.num_vertices();
  std::vector<long double> pr(n, 1.0L / n);
  for (int it = 0; it < iterations; ++it) {
    std::vector<long double> next(n, (1.0L - alpha) / n);
    for (const auto& [u, v] : g.edges()) {
      next[v] += alpha * pr[u] / g.degree(u);
      next[u] += alpha * pr[v] / g.degree(v);
    }
    pr = next;
  }
  return pr;
}

/// Ranks with ties averaged (1-based).
inline std::vector<double> ranks(const std::vector<double>& x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
    i = j + 1;
  }
  return r;
}

/// Spearman's rho: Pearson correlation of the average ranks.
inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  const auto ra = ranks(a);
  const auto rb = ranks(b);
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    sab += (ra[i] - ma) * (rb[i] - mb);
    saa += (ra[i] - ma) * (ra[i] - ma);
    sbb += (rb[i] - mb) * (rb[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

/// Naive first fit: scans every earlier vertex of the order for conflicts.
inline int first_fit_colors(const Graph& g, const std::vector<VertexId>& order) {
  std::vector<int> color(g.num_vertices(), -1);
  int top = -1;
  for (VertexId v : order) {
    int c = 0;
    while (true) {
      bool clash = false;
      for (VertexId u = 0; u < g.num_vertices() && !clash; ++u) clash = color[u] == c && g.has_edge(u, v);
      if (!clash) break;
      ++c;
    }
    color[v] = c;
    top = std::max(top, c);
  }
  return top + 1;
}

}  // namespace colorder::oracle
