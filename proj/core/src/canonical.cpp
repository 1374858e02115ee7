#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "graphperiod/graph.hpp"

// Canonical labeling by individualization-refinement. Every leaf of the
// search tree is a discrete ordered partition; the certificate of a leaf is
// the multiplicity matrix read in that order, and the key is the minimum
// certificate. Pruning only ever skips subtrees whose certificates are images
// of already-visited ones under a discovered automorphism, so the minimum is
// exact.

namespace graphperiod {

namespace {

using Coloring = std::vector<std::uint32_t>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const MultiGraph& g) : n_(g.vertex_count()), mult_(n_ * n_, 0) {
    for (const auto& e : g.edges()) {
      ++mult_[e.a * n_ + e.b];
      if (!e.is_loop()) ++mult_[e.b * n_ + e.a];
    }
    neighbors_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t w = 0; w < n_; ++w) {
        if (w != v && mult_[v * n_ + w] != 0) neighbors_[v].push_back(static_cast<std::uint32_t>(w));
      }
    }
    header_ = encode_header(g);
  }

  std::string run() {
    if (n_ == 0) return header_;
    Coloring start(n_, 0);
    refine(start);
    std::vector<std::uint32_t> path;
    search(start, path);
    return header_ + best_cert_;
  }

 private:
  static void put_varint(std::string& out, std::uint64_t v) {
    while (v >= 0x80) {
      out.push_back(static_cast<char>((v & 0x7f) | 0x80));
      v >>= 7;
    }
    out.push_back(static_cast<char>(v));
  }

  static std::string encode_header(const MultiGraph& g) {
    std::string h;
    put_varint(h, g.vertex_count());
    put_varint(h, g.edge_count());
    return h;
  }

  // Equitable refinement. New colors are ranks of (old color, sorted
  // neighbor-color/multiplicity profile), so cell order is preserved and the
  // result is labeling-independent.
  void refine(Coloring& color) const {
    using Signature = std::tuple<std::uint32_t, std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>>;
    std::size_t cells = count_cells(color);
    std::vector<Signature> sig(n_);
    std::vector<std::uint32_t> order(n_);
    while (true) {
      for (std::size_t v = 0; v < n_; ++v) {
        auto& profile = std::get<2>(sig[v]);
        profile.clear();
        for (auto w : neighbors_[v]) profile.emplace_back(color[w], mult_[v * n_ + w]);
        std::sort(profile.begin(), profile.end());
        std::get<0>(sig[v]) = color[v];
        std::get<1>(sig[v]) = mult_[v * n_ + v];
      }
      std::iota(order.begin(), order.end(), 0u);
      std::sort(order.begin(), order.end(), [&](auto a, auto b) { return sig[a] < sig[b]; });
      std::uint32_t rank = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) rank = static_cast<std::uint32_t>(i);
        color[order[i]] = rank;
      }
      const std::size_t next = count_cells(color);
      if (next == cells) return;
      cells = next;
    }
  }

  // Colors are "first position of the cell", so counting distinct values
  // counts cells.
  std::size_t count_cells(const Coloring& color) const {
    std::vector<bool> seen(n_, false);
    std::size_t cells = 0;
    for (auto c : color) {
      if (c >= n_) return 0;
      if (!seen[c]) {
        seen[c] = true;
        ++cells;
      }
    }
    return cells;
  }

  std::string certificate(const Coloring& color, std::vector<std::uint32_t>& at) const {
    at.assign(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) at[color[v]] = static_cast<std::uint32_t>(v);
    std::string cert;
    cert.reserve(n_ * (n_ + 1) / 2);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) put_varint(cert, mult_[at[i] * n_ + at[j]]);
    }
    return cert;
  }

  struct Leaf {
    std::vector<std::uint32_t> path;
    std::vector<std::uint32_t> at;  // position -> vertex
    std::string cert;
  };

  static std::size_t common_prefix(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  void record_automorphism(const Leaf& known, const std::vector<std::uint32_t>& at) {
    if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
    std::vector<std::uint32_t> gamma(n_);
    for (std::size_t i = 0; i < n_; ++i) gamma[known.at[i]] = at[i];
    automorphisms_.push_back(std::move(gamma));
  }

  // Returns the tree level the search should resume at; a value below the
  // caller's level unwinds it.
  std::size_t search(const Coloring& color, std::vector<std::uint32_t>& path) {
    const std::size_t level = path.size();
    if (count_cells(color) == n_) return visit_leaf(color, path);

    // First non-singleton cell in color order.
    std::vector<std::uint32_t> cell_size(n_, 0);
    for (auto c : color) ++cell_size[c];
    std::uint32_t target = 0;
    while (cell_size[target] <= 1) ++target;
    std::vector<std::uint32_t> cell;
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (color[v] == target) cell.push_back(v);
    }

    std::vector<std::uint32_t> explored;
    for (auto v : cell) {
      if (in_explored_orbit(v, explored, path)) continue;
      explored.push_back(v);
      Coloring child(n_);
      for (std::size_t u = 0; u < n_; ++u) {
        child[u] = 2 * color[u] + ((color[u] == target && u != v) ? 1u : 0u);
      }
      refine(child);
      path.push_back(v);
      const std::size_t resume = search(child, path);
      path.pop_back();
      if (resume < level) return resume;
    }
    return level;
  }

  std::size_t visit_leaf(const Coloring& color, const std::vector<std::uint32_t>& path) {
    std::vector<std::uint32_t> at;
    std::string cert = certificate(color, at);
    if (!have_first_) {
      have_first_ = true;
      first_ = {path, at, cert};
      best_ = first_;
      best_cert_ = cert;
      return path.size();
    }
    if (cert == first_.cert) {
      record_automorphism(first_, at);
      return common_prefix(first_.path, path);
    }
    if (cert == best_.cert) {
      record_automorphism(best_, at);
      return common_prefix(best_.path, path);
    }
    if (cert < best_.cert) {
      best_ = {path, at, cert};
      best_cert_ = std::move(cert);
    }
    return path.size();
  }

  // Orbit test under the automorphisms found so far that fix the current
  // prefix pointwise.
  bool in_explored_orbit(std::uint32_t v, const std::vector<std::uint32_t>& explored,
                         const std::vector<std::uint32_t>& prefix) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<std::uint32_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](auto s) { return gamma[s] == s; });
      if (!fixes) continue;
      any = true;
      for (std::uint32_t x = 0; x < n_; ++x) {
        auto a = find(x), b = find(gamma[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    if (!any) return false;
    const auto root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](auto w) { return find(w) == root; });
  }

  static constexpr std::size_t kMaxStoredAutomorphisms = 64;

  std::size_t n_;
  std::vector<std::uint32_t> mult_;
  std::vector<std::vector<std::uint32_t>> neighbors_;
  std::string header_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::string best_cert_;
  std::vector<std::vector<std::uint32_t>> automorphisms_;
};

}  // namespace

std::string canonical_key(const MultiGraph& g) { return CanonicalSearch(g).run(); }

}  // namespace graphperiod
