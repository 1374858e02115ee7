#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace graphperiod {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Unordered endpoint pair; stored with a <= b.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  bool is_loop() const { return a == b; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// A size cap (subset expansion, oracle vertex limit) was exceeded.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EdgeClass { Bridge, Loop, Ordinary };

std::string_view to_string(EdgeClass c);

// Raised by the edge-list reader; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Finite multigraph with loops and parallel edges. Vertices are 0..r-1 and
// edges 0..q-1; an edge's id is its identity, so parallel edges are distinct.
// Values are immutable: every structural operation returns a new graph.
// Equality is label-sensitive; use canonical_key() for isomorphism tests.
class MultiGraph {
 public:
  MultiGraph() = default;
  // Throws std::invalid_argument if an endpoint is >= vertex_count.
  MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const { return edges_; }

  // Loop contributes 2.
  std::vector<std::size_t> degrees() const;
  bool has_loop() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Edge list format: `#` comments, header `n <r>`, then `e <u> <v>` lines.
MultiGraph parse_edge_list(std::istream& in);
MultiGraph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const MultiGraph& g);
std::string to_edge_list(const MultiGraph& g);

MultiGraph delete_edge(const MultiGraph& g, EdgeId e);

// Identifies the endpoints of e (the merged vertex keeps the smaller index,
// later vertices shift down by one). Edges parallel to e become loops.
// Throws std::invalid_argument when e is a loop.
MultiGraph contract_edge(const MultiGraph& g, EdgeId e);

std::size_t component_count(const MultiGraph& g);

// Components of the spanning subgraph (V(G), kept).
std::size_t spanning_subgraph_components(const MultiGraph& g, std::span<const EdgeId> kept);

EdgeClass classify_edge(const MultiGraph& g, EdgeId e);

// All bridges, found in one DFS pass. Parallel edges and loops are never
// bridges.
std::vector<bool> bridge_mask(const MultiGraph& g);

bool is_connected(const MultiGraph& g);

MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h);

// Applies a vertex relabeling: vertex v of g becomes perm[v]. Edge ids are
// kept.
MultiGraph relabel_vertices(const MultiGraph& g, std::span<const VertexId> perm);

// Drops vertices with no incident edge.
MultiGraph remove_isolated_vertices(const MultiGraph& g);

// Keeps one edge per distinct endpoint pair, loops included.
MultiGraph collapse_parallel_edges(const MultiGraph& g);

// Exact canonical form: equal keys iff the multigraphs are isomorphic.
std::string canonical_key(const MultiGraph& g);

}  // namespace graphperiod
