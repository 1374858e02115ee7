#include "families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace graphperiod::testkit {

namespace {

std::vector<std::vector<std::uint32_t>> multiplicity_matrix(const MultiGraph& g) {
  std::vector<std::vector<std::uint32_t>> m(g.vertex_count(), std::vector<std::uint32_t>(g.vertex_count(), 0));
  for (const auto& e : g.edges()) {
    ++m[e.a][e.b];
    if (e.a != e.b) ++m[e.b][e.a];
  }
  return m;
}

struct Dsu {
  std::vector<std::size_t> parent;
  std::size_t sets;
  explicit Dsu(std::size_t n) : parent(n), sets(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --sets;
    }
  }
};

std::size_t components_of_mask(const MultiGraph& g, std::uint64_t mask) {
  Dsu d(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (mask >> e & 1U) d.unite(g.edge(static_cast<EdgeId>(e)).a, g.edge(static_cast<EdgeId>(e)).b);
  }
  return d.sets;
}

Integer ipow(std::int64_t base, std::size_t k) {
  Integer r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= base;
  return r;
}

}  // namespace

std::vector<MultiGraph> all_simple_graphs(std::size_t n) {
  if (n == 0) return {MultiGraph(0, {})};
  std::vector<MultiGraph> result;
  std::set<std::string> seen;
  for (const auto& base : all_simple_graphs(n - 1)) {
    const auto v = static_cast<VertexId>(n - 1);
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      std::vector<Edge> edges(base.edges().begin(), base.edges().end());
      for (VertexId u = 0; u < v; ++u) {
        if (mask >> u & 1U) edges.push_back({u, v});
      }
      MultiGraph g(n, std::move(edges));
      if (seen.insert(canonical_key(g)).second) result.push_back(std::move(g));
    }
  }
  return result;
}

std::vector<MultiGraph> connected_simple_graphs_up_to(std::size_t max_n) {
  std::vector<MultiGraph> result;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& g : all_simple_graphs(n)) {
      if (is_connected(g)) result.push_back(std::move(g));
    }
  }
  return result;
}

MultiGraph random_connected_multigraph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, std::min(max_vertices, max_edges + 1))(rng);
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({std::uniform_int_distribution<VertexId>(0, v - 1)(rng), v});
  const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, max_edges - edges.size())(rng);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  for (std::size_t i = 0; i < extra; ++i) edges.push_back({pick(rng), pick(rng)});
  return random_relabel(MultiGraph(n, std::move(edges)), rng);
}

MultiGraph random_multigraph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const std::size_t q = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < q; ++i) edges.push_back({pick(rng), pick(rng)});
  return MultiGraph(n, std::move(edges));
}

MultiGraph random_relabel(const MultiGraph& g, std::mt19937_64& rng) {
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto relabeled = relabel_vertices(g, perm);
  std::vector<Edge> edges(relabeled.edges().begin(), relabeled.edges().end());
  std::shuffle(edges.begin(), edges.end(), rng);
  return MultiGraph(g.vertex_count(), std::move(edges));
}

std::vector<MultiGraph> multigraph_variants() {
  return {
      MultiGraph(1, {{0, 0}}),
      MultiGraph(1, {{0, 0}, {0, 0}}),
      MultiGraph(2, {{0, 1}, {0, 1}}),
      MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}}),
      MultiGraph(2, {{0, 0}, {0, 1}, {1, 1}}),
      MultiGraph(3, {{0, 1}, {0, 1}, {1, 2}}),
      MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}, {0, 2}, {1, 1}}),
      MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {0, 2}}),
      MultiGraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 0}, {2, 0}}),
  };
}

std::uint64_t brute_force_spanning_trees(const MultiGraph& g) {
  const std::size_t q = g.edge_count();
  const std::size_t r = g.vertex_count();
  if (q > 24) throw std::invalid_argument("brute force limited to 24 edges");
  if (r == 0) return 1;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r - 1) continue;
    if (components_of_mask(g, mask) == 1) ++count;
  }
  return count;
}

Integer matrix_tree_count(const MultiGraph& g) {
  const std::size_t r = g.vertex_count();
  if (r <= 1) return 1;
  const auto m = multiplicity_matrix(g);
  const std::size_t n = r - 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t degree = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i) degree += m[i][j];
    }
    for (std::size_t j = 0; j < n; ++j) a[i][j] = i == j ? Integer(degree) : Integer(-static_cast<std::int64_t>(m[i][j]));
  }
  // Bareiss fraction-free elimination.
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::uint64_t brute_force_colorings(const MultiGraph& g, std::uint32_t k) {
  const std::size_t r = g.vertex_count();
  if (g.has_loop()) return 0;
  if (r == 0) return 1;
  if (k == 0) return 0;
  std::vector<std::uint32_t> color(r, 0);
  std::uint64_t count = 0;
  while (true) {
    bool proper = true;
    for (const auto& e : g.edges()) {
      if (color[e.a] == color[e.b]) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    std::size_t i = 0;
    while (i < r && ++color[i] == k) color[i++] = 0;
    if (i == r) return count;
  }
}

Integer whitney_tutte_value(const MultiGraph& g, std::int64_t x, std::int64_t y) {
  const std::size_t q = g.edge_count();
  if (q > 24) throw std::invalid_argument("brute force limited to 24 edges");
  const std::size_t r = g.vertex_count();
  const std::size_t rank_e = r - components_of_mask(g, (std::uint64_t{1} << q) - 1);
  Integer total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q); ++mask) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    const std::size_t rank = r - components_of_mask(g, mask);
    total += ipow(x - 1, rank_e - rank) * ipow(y - 1, size - rank);
  }
  return total;
}

bool brute_force_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const auto ma = multiplicity_matrix(a);
  const auto mb = multiplicity_matrix(b);
  std::vector<VertexId> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      for (std::size_t j = i; j < perm.size() && ok; ++j) ok = ma[i][j] == mb[perm[i]][perm[j]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::uint64_t brute_force_automorphism_count(const MultiGraph& g) {
  const auto m = multiplicity_matrix(g);
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      for (std::size_t j = i; j < perm.size() && ok; ++j) ok = m[i][j] == m[perm[i]][perm[j]];
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

bool brute_force_has_free_period_simple(const MultiGraph& g, std::uint32_t p) {
  const auto m = multiplicity_matrix(g);
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      for (std::size_t j = i; j < perm.size() && ok; ++j) ok = m[i][j] == m[perm[i]][perm[j]];
    }
    if (!ok) continue;
    bool identity = true;
    for (std::size_t v = 0; v < perm.size(); ++v) {
      VertexId x = perm[v];
      std::uint32_t length = 1;
      while (x != v) {
        x = perm[x];
        ++length;
      }
      if (length != 1 && length != p) ok = false;
      if (length != 1) identity = false;
    }
    if (!ok || identity) continue;
    for (const auto& e : g.edges()) {
      const VertexId a = perm[e.a], b = perm[e.b];
      if ((a == e.a && b == e.b) || (a == e.b && b == e.a)) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace graphperiod::testkit
