#include "graphperiod/invariants.hpp"

#include <algorithm>
#include <random>

namespace graphperiod {

const VarSet& negami_vars() {
  static const VarSet vars{"u", "x", "y"};
  return vars;
}

const VarSet& tutte_classic_vars() {
  static const VarSet vars{"x", "y"};
  return vars;
}

const VarSet& tutte_shifted_vars() {
  static const VarSet vars{"s", "t"};
  return vars;
}

const VarSet& chromatic_vars() {
  static const VarSet vars{"lambda"};
  return vars;
}

std::optional<Polynomial> InvariantCache::find_tutte(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = tutte_.find(key);
  if (it == tutte_.end()) return std::nullopt;
  return it->second;
}

void InvariantCache::store_tutte(const std::string& key, const Polynomial& value) {
  std::lock_guard lock(mutex_);
  tutte_.try_emplace(key, value);
}

std::optional<Polynomial> InvariantCache::find_chromatic(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = chromatic_.find(key);
  if (it == chromatic_.end()) return std::nullopt;
  return it->second;
}

void InvariantCache::store_chromatic(const std::string& key, const Polynomial& value) {
  std::lock_guard lock(mutex_);
  chromatic_.try_emplace(key, value);
}

std::size_t InvariantCache::size() const {
  std::lock_guard lock(mutex_);
  return tutte_.size() + chromatic_.size();
}

namespace {

// Picks the edge to branch on for the non-heuristic orders.
class EdgePicker {
 public:
  explicit EdgePicker(const RecursionOptions& options) : order_(options.order), rng_(options.seed) {}

  EdgeId pick(const MultiGraph& g) {
    switch (order_) {
      case EdgeOrder::First:
        return 0;
      case EdgeOrder::Last:
        return static_cast<EdgeId>(g.edge_count() - 1);
      case EdgeOrder::Random: {
        std::uniform_int_distribution<std::size_t> dist(0, g.edge_count() - 1);
        return static_cast<EdgeId>(dist(rng_));
      }
      case EdgeOrder::Heuristic:
        break;
    }
    return max_degree_sum_edge(g);
  }

  static EdgeId max_degree_sum_edge(const MultiGraph& g) {
    const auto deg = g.degrees();
    EdgeId best = 0;
    std::size_t best_sum = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& x = g.edges()[e];
      const auto sum = deg[x.a] + deg[x.b];
      if (sum > best_sum) {
        best_sum = sum;
        best = e;
      }
    }
    return best;
  }

 private:
  EdgeOrder order_;
  std::mt19937_64 rng_;
};

class TutteRecursion {
 public:
  TutteRecursion(const RecursionOptions& options, InvariantCache& cache)
      : options_(options), cache_(cache), picker_(options) {}

  Polynomial solve(MultiGraph g) {
    const auto& vars = tutte_classic_vars();
    std::uint32_t x_power = 0;
    std::uint32_t y_power = 0;
    EdgeId branch = 0;
    if (options_.order == EdgeOrder::Heuristic) {
      std::vector<Edge> kept;
      for (const auto& e : g.edges()) {
        if (e.is_loop()) {
          ++y_power;
        } else {
          kept.push_back(e);
        }
      }
      if (y_power > 0) g = MultiGraph(g.vertex_count(), std::move(kept));
      // Contracting a bridge leaves every other bridge a bridge and creates
      // no loops, so all of them go at once (highest id first keeps ids valid).
      const auto bridges = bridge_mask(g);
      for (EdgeId e = static_cast<EdgeId>(g.edge_count()); e-- > 0;) {
        if (bridges[e]) {
          g = contract_edge(g, e);
          ++x_power;
        }
      }
      branch = EdgePicker::max_degree_sum_edge(g);
    } else {
      while (g.edge_count() > 0) {
        const EdgeId e = picker_.pick(g);
        const auto kind = classify_edge(g, e);
        if (kind == EdgeClass::Ordinary) {
          branch = e;
          break;
        }
        if (kind == EdgeClass::Loop) {
          ++y_power;
          g = delete_edge(g, e);
        } else {
          ++x_power;
          g = contract_edge(g, e);
        }
      }
    }
    const Polynomial factor = Polynomial::monomial(vars, {x_power, y_power});
    if (g.edge_count() == 0) return factor;
    return factor * solve_ordinary(std::move(g), branch);
  }

 private:
  // e is an ordinary edge of g.
  Polynomial solve_ordinary(MultiGraph g, EdgeId e) {
    std::string key;
    if (options_.memoize) {
      key = canonical_key(remove_isolated_vertices(g));
      if (auto hit = cache_.find_tutte(key)) return *hit;
    }
    Polynomial result = solve(delete_edge(g, e));
    result += solve(contract_edge(g, e));
    if (options_.memoize) cache_.store_tutte(key, result);
    return result;
  }

  const RecursionOptions& options_;
  InvariantCache& cache_;
  EdgePicker picker_;
};

class ChromaticRecursion {
 public:
  ChromaticRecursion(const RecursionOptions& options, InvariantCache& cache)
      : options_(options), cache_(cache), picker_(options) {}

  Polynomial solve(const MultiGraph& input) {
    const auto& vars = chromatic_vars();
    if (input.has_loop()) return Polynomial(vars);
    MultiGraph g = collapse_parallel_edges(input);
    const std::uint32_t w = static_cast<std::uint32_t>(component_count(g));
    // Forest: lambda^w (lambda - 1)^q.
    if (g.edge_count() + w == g.vertex_count()) {
      Polynomial result = Polynomial::monomial(vars, {w});
      const auto factor = Polynomial::variable(vars, "lambda") - Polynomial::constant(vars, 1);
      for (std::size_t i = 0; i < g.edge_count(); ++i) result *= factor;
      return result;
    }
    std::string key;
    if (options_.memoize) {
      key = canonical_key(g);
      if (auto hit = cache_.find_chromatic(key)) return *hit;
    }
    const EdgeId e = picker_.pick(g);
    Polynomial result = solve(delete_edge(g, e)) - solve(contract_edge(g, e));
    if (options_.memoize) cache_.store_chromatic(key, result);
    return result;
  }

 private:
  const RecursionOptions& options_;
  InvariantCache& cache_;
  EdgePicker picker_;
};

// Subset enumeration with a rollback union-find: each include/exclude step is
// undone on return, so the 2^q leaves cost O(q log r) each at worst.
class SubsetExpansion {
 public:
  explicit SubsetExpansion(const MultiGraph& g)
      : g_(g),
        parent_(g.vertex_count()),
        size_(g.vertex_count(), 1),
        counts_((g.vertex_count() + 1) * (g.edge_count() + 1), 0) {
    for (std::size_t v = 0; v < parent_.size(); ++v) parent_[v] = static_cast<VertexId>(v);
  }

  NegamiPolynomial run() {
    components_ = g_.vertex_count();
    visit(0, 0);
    const auto q = static_cast<std::uint32_t>(g_.edge_count());
    NegamiPolynomial out{Polynomial(negami_vars()), g_.vertex_count(), g_.edge_count(), component_count(g_)};
    for (std::uint32_t w = 0; w <= g_.vertex_count(); ++w) {
      for (std::uint32_t k = 0; k <= q; ++k) {
        const auto c = counts_[w * (q + 1) + k];
        if (c != 0) out.poly.add_term({w, q - k, k}, Integer(c));
      }
    }
    return out;
  }

 private:
  VertexId find(VertexId v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  void visit(std::size_t i, std::uint32_t kept) {
    if (i == g_.edge_count()) {
      ++counts_[components_ * (g_.edge_count() + 1) + kept];
      return;
    }
    visit(i + 1, kept);
    auto a = find(g_.edges()[i].a);
    auto b = find(g_.edges()[i].b);
    if (a == b) {
      visit(i + 1, kept + 1);
      return;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    visit(i + 1, kept + 1);
    ++components_;
    size_[a] -= size_[b];
    parent_[b] = b;
  }

  const MultiGraph& g_;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::uint64_t> counts_;
  std::size_t components_ = 0;
};

}  // namespace

TuttePair tutte_deletion_contraction(const MultiGraph& g, const RecursionOptions& options) {
  InvariantCache local;
  InvariantCache& cache = options.cache ? *options.cache : local;
  TutteRecursion recursion(options, cache);
  Polynomial classic = recursion.solve(g);
  Polynomial shifted = shift_tutte(classic);
  return {std::move(classic), std::move(shifted)};
}

Polynomial shift_tutte(const Polynomial& classic) {
  const auto& target = tutte_shifted_vars();
  const auto one = Polynomial::constant(target, 1);
  return substitute(classic,
                    {{"x", Polynomial::variable(target, "s") + one}, {"y", Polynomial::variable(target, "t") + one}},
                    target);
}

NegamiPolynomial negami_subset_expansion(const MultiGraph& g, std::size_t cap) {
  if (g.edge_count() > cap) {
    throw LimitExceeded("subset expansion over " + std::to_string(g.edge_count()) + " edges exceeds the cap of " +
                        std::to_string(cap) + " (2^q subsets); use the deletion-contraction Tutte route instead");
  }
  return SubsetExpansion(g).run();
}

Polynomial tutte_from_negami(const NegamiPolynomial& n) {
  const auto& target = tutte_shifted_vars();
  const auto s = Polynomial::variable(target, "s");
  const auto t = Polynomial::variable(target, "t");
  const auto specialized =
      substitute(n.poly, {{"u", s * t}, {"x", Polynomial::constant(target, 1)}, {"y", t}}, target);
  return divide_exact_monomial(specialized, {static_cast<std::uint32_t>(n.components),
                                             static_cast<std::uint32_t>(n.vertices)});
}

Polynomial chromatic_deletion_contraction(const MultiGraph& g, const RecursionOptions& options) {
  InvariantCache local;
  InvariantCache& cache = options.cache ? *options.cache : local;
  return ChromaticRecursion(options, cache).solve(g);
}

Polynomial chromatic_from_negami(const NegamiPolynomial& n) {
  const auto& target = chromatic_vars();
  auto value = substitute(n.poly,
                          {{"u", Polynomial::variable(target, "lambda")},
                           {"x", Polynomial::constant(target, -1)},
                           {"y", Polynomial::constant(target, 1)}},
                          target);
  return n.edges % 2 == 0 ? value : -value;
}

}  // namespace graphperiod
