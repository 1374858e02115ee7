#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "graphperiod/graph.hpp"
#include "graphperiod/polynomial.hpp"

namespace graphperiod {

const VarSet& negami_vars();          // u, x, y
const VarSet& tutte_classic_vars();   // x, y
const VarSet& tutte_shifted_vars();   // s, t
const VarSet& chromatic_vars();       // lambda

inline constexpr std::size_t kDefaultSubsetCap = 24;

// Both Tutte forms: classic tau(x, y) and shifted T(s, t) = tau(s+1, t+1).
struct TuttePair {
  Polynomial classic;
  Polynomial shifted;
};

// Negami polynomial plus the size data its specializations need.
struct NegamiPolynomial {
  Polynomial poly;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
};

// Memo tables keyed by exact canonical form. Safe to share across threads;
// concurrent inserts for one key always carry equal values.
class InvariantCache {
 public:
  std::optional<Polynomial> find_tutte(const std::string& key) const;
  void store_tutte(const std::string& key, const Polynomial& value);
  std::optional<Polynomial> find_chromatic(const std::string& key) const;
  void store_chromatic(const std::string& key, const Polynomial& value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Polynomial> tutte_;
  std::unordered_map<std::string, Polynomial> chromatic_;
};

enum class EdgeOrder {
  Heuristic,  // loops, then bridges, then the ordinary edge of largest degree sum
  First,      // lowest edge id
  Last,       // highest edge id
  Random,     // uniform, seeded
};

struct RecursionOptions {
  EdgeOrder order = EdgeOrder::Heuristic;
  std::uint64_t seed = 0;
  bool memoize = true;
  // Shared memo; a call-local one is used when null.
  InvariantCache* cache = nullptr;
};

TuttePair tutte_deletion_contraction(const MultiGraph& g, const RecursionOptions& options = {});

// tau(x, y) -> tau(s + 1, t + 1).
Polynomial shift_tutte(const Polynomial& classic);

// Throws LimitExceeded when the graph has more than `cap` edges.
NegamiPolynomial negami_subset_expansion(const MultiGraph& g, std::size_t cap = kDefaultSubsetCap);

// T(s, t) = t^-r s^-w N(st, 1, t). Throws std::domain_error if the division
// is not exact.
Polynomial tutte_from_negami(const NegamiPolynomial& n);

Polynomial chromatic_deletion_contraction(const MultiGraph& g, const RecursionOptions& options = {});

// (-1)^q N(lambda, -1, 1).
Polynomial chromatic_from_negami(const NegamiPolynomial& n);

}  // namespace graphperiod
