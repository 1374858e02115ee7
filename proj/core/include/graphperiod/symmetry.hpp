#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphperiod/graph.hpp"

namespace graphperiod {

inline constexpr std::size_t kDefaultOracleVertexLimit = 32;

// Incidence-compatible pair of permutations: edge e with endpoints {a, b}
// goes to edge_perm[e], whose endpoints are {vertex_perm[a], vertex_perm[b]}.
struct Automorphism {
  std::vector<VertexId> vertex_perm;
  std::vector<EdgeId> edge_perm;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

struct Orbits {
  std::vector<std::vector<VertexId>> vertices;
  std::vector<std::vector<EdgeId>> edges;
};

// Orbit partition of a free cyclic action and the resulting quotient.
// Quotient vertex i is vertex orbit i, quotient edge j is edge orbit j; both
// orbit lists are ordered by smallest member.
struct QuotientMap {
  Orbits orbits;
  MultiGraph quotient;
  std::vector<VertexId> vertex_projection;
  std::vector<EdgeId> edge_projection;
  std::uint32_t period = 0;
};

bool is_automorphism(const MultiGraph& g, const Automorphism& h);

// Order of the cyclic group generated by h (lcm of all cycle lengths).
std::uint64_t automorphism_order(const Automorphism& h);

Automorphism compose(const Automorphism& outer, const Automorphism& inner);
Automorphism power(const Automorphism& h, std::uint64_t k);
Automorphism identity_automorphism(const MultiGraph& g);

// Every vertex permutation preserving the multiplicity structure, in
// lexicographic order of the vertex image vector. Parallel edges are matched
// in index order. Throws LimitExceeded when the graph has more than
// `vertex_limit` vertices.
std::vector<Automorphism> enumerate_automorphisms(const MultiGraph& g,
                                                  std::size_t vertex_limit = kDefaultOracleVertexLimit);

// First automorphism of order exactly p (prime) whose edge permutation has no
// fixed point, searching vertex images lexicographically. An edge mapped to
// itself with its ends swapped counts as fixed.
std::optional<Automorphism> find_free_period(const MultiGraph& g, std::uint32_t p,
                                             std::size_t vertex_limit = kDefaultOracleVertexLimit);

// Throws std::invalid_argument if h is not an automorphism of g.
Orbits orbits(const MultiGraph& g, const Automorphism& h);

// Throws std::invalid_argument unless h is an automorphism of prime order
// with no fixed edge.
QuotientMap quotient_graph(const MultiGraph& g, const Automorphism& h);

// Checks that h is a free period of g of order p; throws
// std::invalid_argument with the reason otherwise.
void validate_free_period(const MultiGraph& g, const Automorphism& h, std::uint32_t p);

}  // namespace graphperiod
