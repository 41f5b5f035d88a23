#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "colorder/generators.hpp"
#include "colorder/matrix_market.hpp"

using namespace colorder;

TEST_CASE("symmetric pattern file maps entries to edges") {
  const auto parsed = parse_matrix_market(
      "%%MatrixMarket matrix coordinate pattern symmetric\n"
      "% a comment\n"
      "3 3 2\n"
      "2 1\n"
      "3 2\n");
  CHECK(parsed.graph == gen::path(3));
  CHECK(parsed.graph.num_edges() == 2);
  CHECK(parsed.stats.entries == 2);
  CHECK(parsed.stats.symmetric_header);
}

TEST_CASE("diagonal entries are dropped and the dimension is kept") {
  const auto parsed = parse_matrix_market(
      "%%MatrixMarket matrix coordinate real symmetric\n"
      "1 1 1\n"
      "1 1 4.5\n");
  CHECK(parsed.graph.num_vertices() == 1);
  CHECK(parsed.graph.num_edges() == 0);
  CHECK(parsed.stats.diagonal_dropped == 1);
}

TEST_CASE("general files are symmetrized and duplicates merged") {
  const auto parsed = parse_matrix_market(
      "%%MatrixMarket matrix coordinate integer general\n"
      "2 2 2\n"
      "1 2 7\n"
      "2 1 -3\n");
  CHECK(parsed.graph.num_edges() == 1);
  CHECK(parsed.graph.has_edge(0, 1));
  CHECK(parsed.stats.duplicates_merged == 1);
  CHECK_FALSE(parsed.stats.symmetric_header);
}

TEST_CASE("complex values and CRLF line endings are accepted") {
  const auto parsed = parse_matrix_market(
      "%%MatrixMarket matrix coordinate complex hermitian\r\n"
      "3 3 2\r\n"
      "2 1 1.0 -1.0\r\n"
      "3 1 0.5 0.5\r\n");
  CHECK(parsed.graph.num_edges() == 2);
  CHECK(parsed.graph.degree(0) == 2);
}

TEST_CASE("malformed inputs report the offending line") {
  auto line_of = [](const char* text) {
    try {
      parse_matrix_market(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("garbage\n1 1 0\n") == 1);
  CHECK(line_of("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n") == 1);
  CHECK(line_of("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 1\n4 1\n") == 3);
  CHECK(line_of("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n2 1\n") == 3);
  CHECK(line_of("%%MatrixMarket matrix coordinate pattern symmetric\n% c\n3 x 2\n") == 3);
  CHECK(line_of("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 1\n2 1\n3 1\n") == 4);
  CHECK(line_of("%%MatrixMarket matrix coordinate pattern weird\n3 3 1\n2 1\n") == 1);
}

TEST_CASE("edge list format") {
  const auto parsed = parse_edge_list("# comment\n4 3\n0 1\n1 2\n2 3\n");
  CHECK(parsed.graph == gen::path(4));
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
}

TEST_CASE("writers round trip through the readers") {
  const Graph g = gen::gnp(40, 0.1, 3);
  CHECK(parse_matrix_market(write_matrix_market(g)).graph == g);
  CHECK(parse_edge_list(write_edge_list(g)).graph == g);
}

TEST_CASE("read_graph_file dispatches on the banner") {
  const auto dir = std::filesystem::temp_directory_path() / "colorder_mm_test";
  std::filesystem::create_directories(dir);
  const Graph g = gen::cycle(6);
  std::ofstream(dir / "c6.mtx") << write_matrix_market(g);
  std::ofstream(dir / "c6.el") << write_edge_list(g);
  CHECK(read_graph_file(dir / "c6.mtx").graph == g);
  CHECK(read_graph_file(dir / "c6.el").graph == g);
  CHECK_THROWS_AS(read_graph_file(dir / "missing.mtx"), ParseError);
  std::filesystem::remove_all(dir);
}
