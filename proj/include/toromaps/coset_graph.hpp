#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "toromaps/permutation.hpp"

namespace toromaps {

struct GraphEdge {
  Point source = 0;
  Point target = 0;
  std::string label;
  bool directed = true;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Schreier coset graph: an edge x -> x^g labelled g for every point x moved
/// by g. Edges of an involution are merged into one undirected edge per
/// pair, stored with source < target. Fixed points give no edge.
struct SchreierGraph {
  std::size_t vertex_count = 0;
  std::vector<GraphEdge> edges;  // sorted by (source, label, target)
};

SchreierGraph build_graph(std::span<const Permutation> generators,
                          std::span<const std::string> labels);
SchreierGraph build_graph(const PermutationRep& rep,
                          std::span<const std::string> labels);

/// Inverse of build_graph: missing edges are fixed points, undirected edges
/// are 2-cycles. Throws std::invalid_argument if the edges are inconsistent.
std::vector<Permutation> permutations_from_graph(const SchreierGraph& g,
                                                 std::span<const std::string> labels);

/// Graphviz digraph, vertices named 1..n, involution edges with dir=none.
std::string emit_dot(const SchreierGraph& g);

enum class Layout { Circular, Spring };

struct Position {
  double x = 0;
  double y = 0;
};

/// Deterministic vertex coordinates in centimetres.
std::vector<Position> layout_positions(const SchreierGraph& g, Layout layout);

/// tikzpicture with one \node per vertex and one \draw per edge.
std::string emit_tikz(const SchreierGraph& g, Layout layout = Layout::Circular);

}  // namespace toromaps
