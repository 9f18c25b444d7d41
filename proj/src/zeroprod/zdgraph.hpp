#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zeroprod/ring.hpp"

namespace zeroprod::zdgraph {

// Simple undirected graph on Z(R). Vertices are stored in canonical element
// order; edges are pairs of vertex indices (i < j), sorted. Elements with
// x^2 = 0 are listed in self_annihilators rather than as loops.
struct ZeroDivisorGraph {
  ring::RingSpec spec;
  std::vector<ring::Element> vertices;
  std::vector<Natural> ann_sizes;  // |Ann(v)| per vertex
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> self_annihilators;  // vertex indices, ascending
};

ZeroDivisorGraph build_graph(const ring::RingSpec& spec, const ring::Limits& limits = {});

struct GraphStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<std::size_t> degrees;  // descending
  std::size_t self_annihilators = 0;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

GraphStats graph_stats(const ZeroDivisorGraph& g);

// Undirected DOT graph. Self-annihilating vertices carry
// `self_annihilating=true` and a double outline.
std::string export_dot(const ZeroDivisorGraph& g);
// "u,v" header, one edge per line.
std::string export_edges_csv(const ZeroDivisorGraph& g);
// "element,ann_size,self_annihilating" header, one vertex per line.
std::string export_vertices_csv(const ZeroDivisorGraph& g);

}  // namespace zeroprod::zdgraph
