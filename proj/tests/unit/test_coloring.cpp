#include <doctest.h>

#include <set>

#include "colorder/coloring.hpp"
#include "colorder/exact.hpp"
#include "colorder/generators.hpp"
#include "colorder/rng.hpp"
#include "oracles.hpp"

using namespace colorder;

namespace {

Permutation identity(std::size_t n) {
  Permutation p;
  for (std::size_t v = 0; v < n; ++v) p.order.push_back(static_cast<VertexId>(v));
  return p;
}

/// Post-hoc first-fit check: each vertex holds the minimum color absent among
/// earlier-visited vertices within distance ell.
bool is_first_fit(const Graph& g, const Permutation& order, const Coloring& c, std::uint32_t ell) {
  std::vector<std::size_t> position(g.num_vertices());
  for (std::size_t i = 0; i < order.order.size(); ++i) position[order.order[i]] = i;
  for (VertexId v : order.order) {
    const auto d = bfs_distances(g, v, ell).dist;
    std::set<std::int32_t> taken;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      if (u != v && d[u] != DistanceField::kUnreachable && position[u] < position[v]) taken.insert(c.colors[u]);
    }
    std::int32_t mex = 0;
    while (taken.count(mex)) ++mex;
    if (c.colors[v] != mex) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("greedy_color on cliques, crowns and stars") {
  const Graph k3 = gen::complete(3);
  for (std::uint64_t s = 0; s < 6; ++s) CHECK(greedy_color(k3, random_order(3, s)).num_colors == 3);

  // Crown K3,3 minus a matching, visited as a0, b0, a1, b1, a2, b2.
  const Graph crown = gen::crown(3);
  const Permutation bad{gen::crown_interleaved_order(3)};
  const Coloring c = greedy_color(crown, bad);
  CHECK(c.num_colors == 3);
  CHECK(c.colors == std::vector<std::int32_t>{0, 1, 2, 0, 1, 2});
  CHECK(oracle::first_fit_colors(crown, bad.order) == 3);
  CHECK(brute_force_chromatic(crown) == 2);

  const Graph star = gen::star(5);
  CHECK(greedy_color(star, identity(6), 2).num_colors == 6);
  CHECK(greedy_color(star, random_order(6, 4), 2).num_colors == 6);
  CHECK(greedy_color(star, identity(6), 1).num_colors == 2);
}

TEST_CASE("greedy_color rejects bad input") {
  const Graph g = gen::path(3);
  CHECK_THROWS(greedy_color(g, Permutation{{0, 1}}));
  CHECK_THROWS(greedy_color(g, Permutation{{0, 1, 1}}));
  CHECK_THROWS(greedy_color(g, Permutation{{0, 1, 3}}));
  CHECK_THROWS(greedy_color(g, identity(3), 0));
}

TEST_CASE("verify") {
  const Graph p3 = gen::path(3);
  const Coloring c = make_coloring({0, 1, 0});
  CHECK(verify(p3, c, 1));
  CHECK_FALSE(verify(p3, c, 2));
  CHECK_FALSE(verify(p3, make_coloring({0, 0, 1}), 1));
  CHECK_FALSE(verify(p3, make_coloring({0, -1, 0}), 1));
  CHECK_FALSE(verify(p3, make_coloring({0, 1}), 1));
  CHECK(verify(p3, make_coloring({0, 1, 2}), 2));
}

TEST_CASE("count_colors") {
  CHECK(count_colors(make_coloring({0, 1, 0})) == 2);
  CHECK(count_colors(make_coloring({0})) == 1);
  CHECK(count_colors(make_coloring({0, 1, 2, 1})) == 3);
  CHECK(make_coloring({0, 1, 2, 1}).num_colors == 3);
}

TEST_CASE("property: greedy is proper, first-fit minimal and within max degree + 1") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 5 + rng.below(50);
    const double p = 0.05 + 0.4 * rng.unit();
    const Graph g = gen::gnp(n, p, rng.next());
    for (std::uint32_t ell : {1u, 2u, 3u}) {
      const Permutation order = random_order(n, rng.next());
      const Coloring c = greedy_color(g, order, ell);
      CHECK(verify(g, c, ell));
      CHECK(c.num_colors == static_cast<std::int32_t>(count_colors(c)));
      CHECK(is_first_fit(g, order, c, ell));
      if (ell == 1) {
        CHECK(static_cast<std::size_t>(c.num_colors) <= g.max_degree() + 1);
        CHECK(c.num_colors == oracle::first_fit_colors(g, order.order));
      }
    }
  }
}

TEST_CASE("property: coloring in optimal color-class order recovers chi") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = gen::gnp(10 + seed % 15, 0.3, seed);
    const ExactResult exact = chromatic_exact(g);
    REQUIRE_FALSE(exact.timed_out);
    Permutation order = identity(g.num_vertices());
    std::stable_sort(order.order.begin(), order.order.end(), [&](VertexId a, VertexId b) {
      return exact.witness.colors[a] < exact.witness.colors[b];
    });
    CHECK(static_cast<std::size_t>(greedy_color(g, order).num_colors) == exact.chi);
  }
}

TEST_CASE("FirstFit reuse gives the same answer as fresh runs") {
  const Graph g = gen::random_geometric(300, 0.1, 5);
  FirstFit ff(g);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto order = random_order(g.num_vertices(), s);
    CHECK(ff.run(order.order) == greedy_color(g, order));
  }
}

TEST_CASE("coloring export formats") {
  const Coloring c = make_coloring({0, 1, 0});
  CHECK(coloring_csv(c) == "vertex,color\n0,0\n1,1\n2,0\n");
  const std::string json = coloring_summary_json("closeness", 1, 2, 0.5);
  CHECK(json.find("\"num_colors\": 2") != std::string::npos);
  CHECK(json.find("\"strategy\": \"closeness\"") != std::string::npos);
}
