#include "graphperiod/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "graphperiod/primes.hpp"

namespace graphperiod {

namespace {

using EdgeClasses = std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>>;

EdgeClasses edge_classes(const MultiGraph& g) {
  EdgeClasses classes;
  for (EdgeId e = 0; e < g.edge_count(); ++e) classes[{g.edges()[e].a, g.edges()[e].b}].push_back(e);
  return classes;
}

std::pair<VertexId, VertexId> image_key(const std::vector<VertexId>& perm, std::pair<VertexId, VertexId> k) {
  auto a = perm[k.first], b = perm[k.second];
  return a <= b ? std::pair{a, b} : std::pair{b, a};
}

// Edge permutation matching the k-th edge of each class to the k-th edge of
// its image class.
std::vector<EdgeId> index_order_edge_perm(const EdgeClasses& classes, const std::vector<VertexId>& vperm,
                                          std::size_t q) {
  std::vector<EdgeId> eperm(q);
  for (const auto& [key, members] : classes) {
    const auto& image = classes.at(image_key(vperm, key));
    for (std::size_t k = 0; k < members.size(); ++k) eperm[members[k]] = image[k];
  }
  return eperm;
}

// Edge permutation of order dividing p with no fixed edge, or nullopt. Needs
// vperm^p = id. Classes moved by vperm sit on cycles of length p, where
// index-order matching composes to the identity; a class fixed by vperm is
// split into consecutive blocks of p edges that are rotated.
std::optional<std::vector<EdgeId>> free_edge_perm(const EdgeClasses& classes, const std::vector<VertexId>& vperm,
                                                  std::size_t q, std::uint32_t p) {
  std::vector<EdgeId> eperm(q);
  for (const auto& [key, members] : classes) {
    const auto target = image_key(vperm, key);
    if (target != key) {
      const auto& image = classes.at(target);
      for (std::size_t k = 0; k < members.size(); ++k) eperm[members[k]] = image[k];
      continue;
    }
    if (members.size() % p != 0) return std::nullopt;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const std::size_t block = k - k % p;
      eperm[members[k]] = members[block + (k + 1) % p];
    }
  }
  return eperm;
}

// Backtracking over vertex images with multiplicity-consistency pruning.
class VertexMatcher {
 public:
  // Called on each complete vertex permutation; return true to stop.
  using Visitor = std::function<bool(const std::vector<VertexId>&)>;

  VertexMatcher(const MultiGraph& g, std::uint32_t cycle_bound)
      : n_(g.vertex_count()), mult_(n_ * n_, 0), cycle_bound_(cycle_bound) {
    for (const auto& e : g.edges()) {
      ++mult_[e.a * n_ + e.b];
      if (!e.is_loop()) ++mult_[e.b * n_ + e.a];
    }
    const auto deg = g.degrees();
    signature_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      auto& sig = signature_[v];
      sig.push_back(deg[v]);
      sig.push_back(mult_[v * n_ + v]);
      std::vector<std::size_t> profile;
      for (std::size_t w = 0; w < n_; ++w) {
        if (w != v && mult_[v * n_ + w] != 0) profile.push_back(deg[w] * 1024 + mult_[v * n_ + w]);
      }
      std::sort(profile.begin(), profile.end());
      sig.insert(sig.end(), profile.begin(), profile.end());
    }
  }

  void run(const Visitor& visit) {
    image_.assign(n_, kUnset);
    preimage_.assign(n_, kUnset);
    stop_ = false;
    extend(0, visit);
  }

 private:
  static constexpr VertexId kUnset = static_cast<VertexId>(-1);

  bool consistent(VertexId v, VertexId w) const {
    if (signature_[v] != signature_[w]) return false;
    for (VertexId u = 0; u < v; ++u) {
      if (mult_[v * n_ + u] != mult_[w * n_ + image_[u]]) return false;
    }
    return true;
  }

  // With a cycle bound p, every completed cycle must have length 1 or p and
  // every open chain at most p vertices.
  bool cycle_ok(VertexId v) const {
    if (cycle_bound_ == 0) return true;
    std::size_t length = 1;
    VertexId x = image_[v];
    while (x != v) {
      if (++length > cycle_bound_) return false;
      if (image_[x] == kUnset) break;
      x = image_[x];
    }
    if (x == v) return length == 1 || length == cycle_bound_;
    for (VertexId y = v; preimage_[y] != kUnset; y = preimage_[y]) {
      if (++length > cycle_bound_) return false;
    }
    return true;
  }

  void extend(VertexId v, const Visitor& visit) {
    if (stop_) return;
    if (v == n_) {
      stop_ = visit(image_);
      return;
    }
    for (VertexId w = 0; w < n_ && !stop_; ++w) {
      if (preimage_[w] != kUnset || !consistent(v, w)) continue;
      image_[v] = w;
      preimage_[w] = v;
      if (cycle_ok(v)) extend(v + 1, visit);
      image_[v] = kUnset;
      preimage_[w] = kUnset;
    }
  }

  std::size_t n_;
  std::vector<std::uint32_t> mult_;
  std::vector<std::vector<std::size_t>> signature_;
  std::uint32_t cycle_bound_;
  std::vector<VertexId> image_;
  std::vector<VertexId> preimage_;
  bool stop_ = false;
};

void check_limit(const MultiGraph& g, std::size_t limit) {
  if (g.vertex_count() > limit) {
    throw LimitExceeded("automorphism search limited to " + std::to_string(limit) + " vertices, graph has " +
                        std::to_string(g.vertex_count()));
  }
}

template <typename Id>
std::vector<std::vector<Id>> cycles_of(const std::vector<Id>& perm) {
  std::vector<std::vector<Id>> cycles;
  std::vector<bool> seen(perm.size(), false);
  for (Id start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    auto& cycle = cycles.emplace_back();
    for (Id x = start; !seen[x]; x = perm[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    std::sort(cycle.begin(), cycle.end());
  }
  return cycles;
}

template <typename Id>
bool is_permutation_of_size(const std::vector<Id>& perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto x : perm) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

}  // namespace

bool is_automorphism(const MultiGraph& g, const Automorphism& h) {
  if (!is_permutation_of_size(h.vertex_perm, g.vertex_count())) return false;
  if (!is_permutation_of_size(h.edge_perm, g.edge_count())) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& src = g.edges()[e];
    const auto& dst = g.edges()[h.edge_perm[e]];
    auto a = h.vertex_perm[src.a], b = h.vertex_perm[src.b];
    if (a > b) std::swap(a, b);
    if (dst.a != a || dst.b != b) return false;
  }
  return true;
}

std::uint64_t automorphism_order(const Automorphism& h) {
  std::uint64_t order = 1;
  for (const auto& c : cycles_of(h.vertex_perm)) order = std::lcm(order, c.size());
  for (const auto& c : cycles_of(h.edge_perm)) order = std::lcm(order, c.size());
  return order;
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  Automorphism out;
  out.vertex_perm.resize(inner.vertex_perm.size());
  out.edge_perm.resize(inner.edge_perm.size());
  for (std::size_t v = 0; v < inner.vertex_perm.size(); ++v) out.vertex_perm[v] = outer.vertex_perm[inner.vertex_perm[v]];
  for (std::size_t e = 0; e < inner.edge_perm.size(); ++e) out.edge_perm[e] = outer.edge_perm[inner.edge_perm[e]];
  return out;
}

Automorphism identity_automorphism(const MultiGraph& g) {
  Automorphism id;
  id.vertex_perm.resize(g.vertex_count());
  id.edge_perm.resize(g.edge_count());
  std::iota(id.vertex_perm.begin(), id.vertex_perm.end(), 0u);
  std::iota(id.edge_perm.begin(), id.edge_perm.end(), 0u);
  return id;
}

Automorphism power(const Automorphism& h, std::uint64_t k) {
  Automorphism result;
  result.vertex_perm.resize(h.vertex_perm.size());
  result.edge_perm.resize(h.edge_perm.size());
  std::iota(result.vertex_perm.begin(), result.vertex_perm.end(), 0u);
  std::iota(result.edge_perm.begin(), result.edge_perm.end(), 0u);
  for (std::uint64_t i = 0; i < k; ++i) result = compose(h, result);
  return result;
}

std::vector<Automorphism> enumerate_automorphisms(const MultiGraph& g, std::size_t vertex_limit) {
  check_limit(g, vertex_limit);
  const auto classes = edge_classes(g);
  std::vector<Automorphism> found;
  VertexMatcher matcher(g, 0);
  matcher.run([&](const std::vector<VertexId>& vperm) {
    found.push_back({vperm, index_order_edge_perm(classes, vperm, g.edge_count())});
    return false;
  });
  return found;
}

std::optional<Automorphism> find_free_period(const MultiGraph& g, std::uint32_t p, std::size_t vertex_limit) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  check_limit(g, vertex_limit);
  const auto classes = edge_classes(g);
  std::optional<Automorphism> result;
  VertexMatcher matcher(g, p);
  matcher.run([&](const std::vector<VertexId>& vperm) {
    auto eperm = free_edge_perm(classes, vperm, g.edge_count(), p);
    if (!eperm) return false;
    Automorphism h{vperm, std::move(*eperm)};
    // The identity on an edgeless graph is not of order p.
    if (automorphism_order(h) != p) return false;
    result = std::move(h);
    return true;
  });
  return result;
}

Orbits orbits(const MultiGraph& g, const Automorphism& h) {
  if (!is_automorphism(g, h)) throw std::invalid_argument("permutation pair is not an automorphism of the graph");
  // Cycles come out ordered by smallest member.
  return {cycles_of(h.vertex_perm), cycles_of(h.edge_perm)};
}

void validate_free_period(const MultiGraph& g, const Automorphism& h, std::uint32_t p) {
  if (!is_automorphism(g, h)) throw std::invalid_argument("permutation pair is not an automorphism of the graph");
  const auto order = automorphism_order(h);
  if (order != p) {
    throw std::invalid_argument("automorphism has order " + std::to_string(order) + ", expected " + std::to_string(p));
  }
  for (EdgeId e = 0; e < h.edge_perm.size(); ++e) {
    if (h.edge_perm[e] == e) throw std::invalid_argument("automorphism fixes edge " + std::to_string(e));
  }
}

QuotientMap quotient_graph(const MultiGraph& g, const Automorphism& h) {
  if (!is_automorphism(g, h)) throw std::invalid_argument("permutation pair is not an automorphism of the graph");
  const auto order = automorphism_order(h);
  if (!is_prime(order)) throw std::invalid_argument("automorphism order " + std::to_string(order) + " is not prime");
  validate_free_period(g, h, static_cast<std::uint32_t>(order));

  QuotientMap map;
  map.period = static_cast<std::uint32_t>(order);
  map.orbits = orbits(g, h);
  map.vertex_projection.resize(g.vertex_count());
  map.edge_projection.resize(g.edge_count());
  for (VertexId i = 0; i < map.orbits.vertices.size(); ++i) {
    for (auto v : map.orbits.vertices[i]) map.vertex_projection[v] = i;
  }
  std::vector<Edge> edges;
  for (EdgeId j = 0; j < map.orbits.edges.size(); ++j) {
    const auto& members = map.orbits.edges[j];
    for (auto e : members) map.edge_projection[e] = j;
    const auto& rep = g.edges()[members.front()];
    edges.push_back({map.vertex_projection[rep.a], map.vertex_projection[rep.b]});
  }
  map.quotient = MultiGraph(map.orbits.vertices.size(), std::move(edges));
  if (g.edge_count() != map.period * map.quotient.edge_count()) {
    throw std::logic_error("free action produced an edge orbit of size other than p");
  }
  return map;
}

}  // namespace graphperiod
