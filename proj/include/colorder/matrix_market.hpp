#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "colorder/graph.hpp"

namespace colorder {

/// Malformed input. `line()` is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParseStats {
  std::size_t entries = 0;             // nonzeros read from the file
  std::size_t diagonal_dropped = 0;    // (i, i) entries
  std::size_t duplicates_merged = 0;   // off-diagonal entries that did not add a new edge
  bool symmetric_header = false;
};

struct ParsedGraph {
  Graph graph;
  ParseStats stats;
};

/// Reads a Matrix Market `coordinate` file as the simple undirected graph of
/// its sparsity pattern. Values are ignored; 1-based ids become 0-based.
ParsedGraph parse_matrix_market(std::string_view text);

/// Plain edge list: first line `n m`, then m lines `u v` with 0-based ids.
/// Lines starting with '#' or '%' are skipped.
ParsedGraph parse_edge_list(std::string_view text);

/// Dispatches on content: a `%%MatrixMarket` banner selects the Matrix Market
/// reader, anything else the edge-list reader.
ParsedGraph read_graph_file(const std::filesystem::path& path);

/// Symmetric pattern Matrix Market, lower triangle only.
std::string write_matrix_market(const Graph& g);
std::string write_edge_list(const Graph& g);

}  // namespace colorder
