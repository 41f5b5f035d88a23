#include "colorder/exact.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "colorder/metrics.hpp"

namespace colorder {

namespace {

class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, const ExactBudget& budget) : g_(g), n_(g.num_vertices()), budget_(budget) {}

  ExactResult solve() {
    ExactResult result;
    if (n_ == 0) return result;

    const Coloring initial = greedy_color(g_, order_descending(degree(g_)));
    best_ = static_cast<std::size_t>(initial.num_colors);
    best_colors_ = initial.colors;

    const auto clique = greedy_clique(g_);
    result.lower_bound = clique.size();

    if (best_ > clique.size()) search(clique);

    result.chi = best_;
    result.witness = make_coloring(best_colors_);
    result.nodes_explored = nodes_;
    result.timed_out = timed_out_;
    return result;
  }

 private:
  struct Frame {
    VertexId v;
    std::size_t next;  // next color to try
    std::size_t used;  // colors in use before v is colored
  };

  void search(const std::vector<VertexId>& clique) {
    width_ = best_;
    color_.assign(n_, Coloring::kUncolored);
    saturation_.assign(n_, 0);
    neighbor_colors_.assign(n_ * width_, 0);
    started_ = std::chrono::steady_clock::now();

    for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], i);
    colored_ = clique.size();
    lower_bound_ = clique.size();

    std::vector<Frame> stack;
    stack.push_back({select(), 0, clique.size()});
    while (!stack.empty() && !stop_) {
      Frame& f = stack.back();
      if (color_[f.v] != Coloring::kUncolored) {
        unassign(f.v);
        --colored_;
      }
      std::size_t c = f.next;
      bool found = false;
      for (; c <= f.used; ++c) {
        if (std::max(f.used, c + 1) >= best_) break;
        if (neighbor_colors_[f.v * width_ + c] == 0) {
          found = true;
          break;
        }
      }
      if (!found) {
        stack.pop_back();
        continue;
      }
      f.next = c + 1;
      const std::size_t used = std::max(f.used, c + 1);
      assign(f.v, c);
      ++colored_;
      if (!charge()) break;
      if (colored_ == n_) {
        record(used);
        continue;
      }
      stack.push_back({select(), 0, used});
    }
  }

  bool charge() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) {
      timed_out_ = stop_ = true;
    } else if (budget_.time_limit && (nodes_ & 4095) == 0 &&
               std::chrono::steady_clock::now() - started_ > *budget_.time_limit) {
      timed_out_ = stop_ = true;
    }
    return !stop_;
  }

  void record(std::size_t used) {
    if (used >= best_) return;
    best_ = used;
    std::transform(color_.begin(), color_.end(), best_colors_.begin(),
                   [](std::int32_t c) { return c; });
    if (best_ <= lower_bound_) stop_ = true;
  }

  VertexId select() const {
    VertexId best = 0;
    bool have = false;
    for (VertexId v = 0; v < n_; ++v) {
      if (color_[v] != Coloring::kUncolored) continue;
      if (!have || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best))) {
        best = v;
        have = true;
      }
    }
    return best;
  }

  void assign(VertexId v, std::size_t c) {
    color_[v] = static_cast<std::int32_t>(c);
    for (VertexId u : g_.neighbors(v)) {
      if (neighbor_colors_[u * width_ + c]++ == 0) ++saturation_[u];
    }
  }

  void unassign(VertexId v) {
    const auto c = static_cast<std::size_t>(color_[v]);
    for (VertexId u : g_.neighbors(v)) {
      if (--neighbor_colors_[u * width_ + c] == 0) --saturation_[u];
    }
    color_[v] = Coloring::kUncolored;
  }

  const Graph& g_;
  std::size_t n_;
  ExactBudget budget_;

  std::size_t best_ = 0;
  std::vector<std::int32_t> best_colors_;
  std::size_t lower_bound_ = 0;

  std::size_t width_ = 0;
  std::vector<std::int32_t> color_;
  std::vector<std::uint32_t> saturation_;
  std::vector<std::uint32_t> neighbor_colors_;  // n x width counts
  std::size_t colored_ = 0;

  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  bool stop_ = false;
  std::chrono::steady_clock::time_point started_;
};

bool extend(const Graph& g, std::vector<int>& color, std::size_t v, int k, int used) {
  if (v == color.size()) return true;
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (VertexId u : g.neighbors(static_cast<VertexId>(v))) {
      if (u < v && color[u] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = c;
    if (extend(g, color, v + 1, k, std::max(used, c + 1))) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

std::vector<VertexId> greedy_clique(const Graph& g) {
  std::vector<VertexId> clique;
  for (VertexId v : order_descending(degree(g)).order) {
    const bool fits = std::all_of(clique.begin(), clique.end(), [&](VertexId u) { return g.has_edge(u, v); });
    if (fits) clique.push_back(v);
  }
  return clique;
}

ExactResult chromatic_exact(const Graph& g, const ExactBudget& budget) {
  return DsaturSearch(g, budget).solve();
}

std::size_t brute_force_chromatic(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 12) throw std::invalid_argument("brute_force_chromatic is limited to n <= 12");
  if (n == 0) return 0;
  for (std::size_t k = g.num_edges() == 0 ? 1 : 2; k <= n; ++k) {
    std::vector<int> color(n, -1);
    if (extend(g, color, 0, static_cast<int>(k), 0)) return k;
  }
  return n;
}

std::filesystem::path chi_cache_path(const std::filesystem::path& graph_file) {
  auto out = graph_file;
  out.replace_filename(graph_file.stem().string() + ".chi.json");
  return out;
}

std::string exact_result_json(const ExactResult& r, const std::string& graph_name, const Graph& g,
                              const ExactBudget& budget) {
  nlohmann::json j = {
      {"schema_version", 1},
      {"graph", graph_name},
      {"n", g.num_vertices()},
      {"m", g.num_edges()},
      {"chi", r.chi},
      {"lower_bound", r.lower_bound},
      {"timed_out", r.timed_out},
      {"nodes_explored", r.nodes_explored},
      {"budget_nodes", budget.max_nodes},
      {"witness", r.witness.colors},
  };
  return j.dump(2) + '\n';
}

std::optional<ExactResult> load_cached_exact(const std::filesystem::path& cache_file, const Graph& g) {
  std::ifstream in(cache_file);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("n").get<std::size_t>() != g.num_vertices() || j.at("m").get<std::size_t>() != g.num_edges()) {
      return std::nullopt;
    }
    ExactResult r;
    r.chi = j.at("chi").get<std::size_t>();
    r.lower_bound = j.value("lower_bound", std::size_t{0});
    r.timed_out = j.at("timed_out").get<bool>();
    r.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
    r.witness = make_coloring(j.at("witness").get<std::vector<std::int32_t>>());
    if (!verify(g, r.witness)) return std::nullopt;
    return r;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

}  // namespace colorder
