#include "graphperiod/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace graphperiod {

namespace {

Edge make_edge(VertexId u, VertexId v) { return u <= v ? Edge{u, v} : Edge{v, u}; }

void check_edge(const MultiGraph& g, EdgeId e) {
  if (e >= g.edge_count()) {
    throw std::out_of_range("edge " + std::to_string(e) + " out of range (q=" +
                            std::to_string(g.edge_count()) + ")");
  }
}

// Union-find with path halving; the smaller root wins.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[std::max(a, b)] = std::min(a, b);
    --count_;
  }
  std::size_t count() const { return count_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::size_t count_;
};

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::size_t parse_count(std::string_view word, std::size_t line) {
  std::size_t value = 0;
  const auto* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(word) + "'");
  }
  return value;
}

}  // namespace

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Bridge:
      return "bridge";
    case EdgeClass::Loop:
      return "loop";
    case EdgeClass::Ordinary:
      return "ordinary";
  }
  return "?";
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.a >= vertex_count_ || e.b >= vertex_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    e = make_edge(e.a, e.b);
  }
}

const Edge& MultiGraph::edge(EdgeId e) const {
  check_edge(*this, e);
  return edges_[e];
}

std::vector<std::size_t> MultiGraph::degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const auto& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

bool MultiGraph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

MultiGraph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;
    if (!have_header) {
      if (words[0] != "n" || words.size() != 2) {
        throw ParseError(line_no, "missing 'n <vertex count>' header");
      }
      n = parse_count(words[1], line_no);
      have_header = true;
      continue;
    }
    if (words[0] != "e" || words.size() != 3) {
      throw ParseError(line_no, "malformed line, expected 'e <u> <v>'");
    }
    const auto u = parse_count(words[1], line_no);
    const auto v = parse_count(words[2], line_no);
    if (u >= n || v >= n) {
      throw ParseError(line_no, "endpoint out of range for n=" + std::to_string(n));
    }
    edges.push_back(make_edge(static_cast<VertexId>(u), static_cast<VertexId>(v)));
  }
  if (!have_header) throw ParseError(std::max<std::size_t>(line_no, 1), "missing 'n <vertex count>' header");
  return MultiGraph(n, std::move(edges));
}

MultiGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const MultiGraph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.a << ' ' << e.b << '\n';
}

std::string to_edge_list(const MultiGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

MultiGraph delete_edge(const MultiGraph& g, EdgeId e) {
  check_edge(g, e);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f != e) edges.push_back(g.edges()[f]);
  }
  return MultiGraph(g.vertex_count(), std::move(edges));
}

MultiGraph contract_edge(const MultiGraph& g, EdgeId e) {
  check_edge(g, e);
  const Edge ce = g.edges()[e];
  if (ce.is_loop()) throw std::invalid_argument("cannot contract a loop");
  const VertexId keep = ce.a;
  const VertexId drop = ce.b;
  auto remap = [&](VertexId v) -> VertexId {
    if (v == drop) return keep;
    return v > drop ? v - 1 : v;
  };
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    const auto& x = g.edges()[f];
    edges.push_back(make_edge(remap(x.a), remap(x.b)));
  }
  return MultiGraph(g.vertex_count() - 1, std::move(edges));
}

std::size_t component_count(const MultiGraph& g) {
  DisjointSets sets(g.vertex_count());
  for (const auto& e : g.edges()) sets.unite(e.a, e.b);
  return sets.count();
}

std::size_t spanning_subgraph_components(const MultiGraph& g, std::span<const EdgeId> kept) {
  DisjointSets sets(g.vertex_count());
  for (EdgeId e : kept) {
    check_edge(g, e);
    sets.unite(g.edges()[e].a, g.edges()[e].b);
  }
  return sets.count();
}

std::vector<bool> bridge_mask(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& x = g.edges()[e];
    if (x.is_loop()) continue;
    adj[x.a].emplace_back(x.b, e);
    adj[x.b].emplace_back(x.a, e);
  }
  std::vector<bool> bridge(g.edge_count(), false);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  // Iterative Tarjan lowlink; the parent edge is skipped by id so parallel
  // edges correctly form cycles.
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, kNone, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, e] = adj[f.v][f.next++];
        if (e == f.via) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          auto& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) bridge[done.via] = true;
        }
      }
    }
  }
  return bridge;
}

EdgeClass classify_edge(const MultiGraph& g, EdgeId e) {
  check_edge(g, e);
  if (g.edges()[e].is_loop()) return EdgeClass::Loop;
  return bridge_mask(g)[e] ? EdgeClass::Bridge : EdgeClass::Ordinary;
}

bool is_connected(const MultiGraph& g) { return component_count(g) <= 1; }

MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const auto shift = static_cast<VertexId>(g.vertex_count());
  for (const auto& e : h.edges()) edges.push_back({e.a + shift, e.b + shift});
  return MultiGraph(g.vertex_count() + h.vertex_count(), std::move(edges));
}

MultiGraph relabel_vertices(const MultiGraph& g, std::span<const VertexId> perm) {
  if (perm.size() != g.vertex_count()) throw std::invalid_argument("relabeling has wrong size");
  std::vector<bool> seen(perm.size(), false);
  for (auto v : perm) {
    if (v >= perm.size() || seen[v]) throw std::invalid_argument("relabeling is not a permutation");
    seen[v] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back(make_edge(perm[e.a], perm[e.b]));
  return MultiGraph(g.vertex_count(), std::move(edges));
}

MultiGraph remove_isolated_vertices(const MultiGraph& g) {
  std::vector<bool> used(g.vertex_count(), false);
  for (const auto& e : g.edges()) used[e.a] = used[e.b] = true;
  std::vector<VertexId> index(g.vertex_count(), 0);
  VertexId next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (used[v]) index[v] = next++;
  }
  if (next == g.vertex_count()) return g;
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({index[e.a], index[e.b]});
  return MultiGraph(next, std::move(edges));
}

MultiGraph collapse_parallel_edges(const MultiGraph& g) {
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (seen.emplace(e.a, e.b).second) edges.push_back(e);
  }
  return MultiGraph(g.vertex_count(), std::move(edges));
}

}  // namespace graphperiod
