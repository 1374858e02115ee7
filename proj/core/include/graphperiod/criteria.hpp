#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphperiod/graph.hpp"
#include "graphperiod/invariants.hpp"
#include "graphperiod/polynomial.hpp"
#include "graphperiod/symmetry.hpp"

namespace graphperiod {

// Criterion ids, as they appear in reports.
namespace criterion_id {
inline constexpr const char* kNegamiShape = "negami-shape";
inline constexpr const char* kTutteCoefficients = "tutte-coefficients";
inline constexpr const char* kSelfDualVertexCount = "selfdual-vertex-count";
inline constexpr const char* kNegamiQuotient = "negami-quotient-congruence";
inline constexpr const char* kTutteQuotient = "tutte-quotient-congruence";
inline constexpr const char* kTutteQuotientCleared = "tutte-quotient-cleared";
inline constexpr const char* kChromaticVanishing = "chromatic-vanishing";
}  // namespace criterion_id

enum class Verdict { Pass, Fail };

std::string_view to_string(Verdict v);

struct Violation {
  std::string monomial;
  Integer coefficient;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Outcome of one necessary condition. A failing verdict excludes p-periodicity;
// a passing one only means "not excluded". For coefficient-shaped criteria
// verdict is Fail exactly when violations is non-empty.
struct CriterionReport {
  std::string criterion;
  std::string graph;
  std::uint32_t p = 0;
  Verdict verdict = Verdict::Pass;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
};

struct CheckOptions {
  std::string graph_label = "G";
  std::size_t subset_cap = kDefaultSubsetCap;
  // Memo for the recursive invariants; a call-local one is used when null.
  InvariantCache* cache = nullptr;
};

// Modulo p, every monomial u^i x^a y^b of N_G must have b = 0 (mod p).
// Throws std::invalid_argument for a disconnected graph or non-prime p.
CriterionReport check_negami_shape(const MultiGraph& g, std::uint32_t p, const CheckOptions& options = {});

// Modulo p, every nonzero a_ij s^i t^j of T_G must have j - i = 1 - r (mod p).
CriterionReport check_tutte_coefficients(const MultiGraph& g, std::uint32_t p, const CheckOptions& options = {});

// For a graph asserted planar and self-dual: r = 1 (mod p). Verifies the
// computable consequence T(s,t) = T(t,s) and throws std::invalid_argument if
// it fails or if self-duality is not asserted.
CriterionReport check_selfdual_vertex_count(const MultiGraph& g, std::uint32_t p, bool asserted_self_dual,
                                            const CheckOptions& options = {});

// N_G = (N_quotient)^p modulo (p, u^p - u). h must be a free period of order p.
CriterionReport check_negami_quotient_congruence(const MultiGraph& g, const Automorphism& h, std::uint32_t p,
                                                 const CheckOptions& options = {});

// T_G = (T_quotient)^p modulo (p, s^p - s, t^p - t), compared literally.
CriterionReport check_tutte_quotient_congruence(const MultiGraph& g, const Automorphism& h, std::uint32_t p,
                                                const CheckOptions& options = {});

// s^w(G) t^r T_G = (s^w(Q) t^r(Q) T_quotient)^p modulo (p, s^p - s, t^p - t):
// the Tutte congruence with the specialization's monomial denominators
// cleared before reducing.
CriterionReport check_tutte_quotient_cleared(const MultiGraph& g, const Automorphism& h, std::uint32_t p,
                                             const CheckOptions& options = {});

// P_G = 0 modulo (p, lambda^p - lambda) when the quotient has a loop, and
// P_G = (P_quotient)^p otherwise.
CriterionReport check_chromatic_vanishing(const MultiGraph& g, const Automorphism& h, std::uint32_t p,
                                          const CheckOptions& options = {});

enum class OracleStatus { NotRun, PeriodFound, NoPeriod };

std::string_view to_string(OracleStatus s);

struct ExclusionEntry {
  std::uint32_t p = 0;
  bool excluded = false;
  std::vector<CriterionReport> reports;  // ordered by criterion id
  OracleStatus oracle = OracleStatus::NotRun;
};

struct ExclusionOptions {
  CheckOptions check;
  bool use_oracle = false;
  std::size_t oracle_vertex_limit = kDefaultOracleVertexLimit;
};

// Runs the coefficient criteria for each prime (sorted, deduplicated). With
// the oracle enabled (and r within its limit), an excluded prime that still
// has a free period raises std::logic_error: that would be a soundness bug.
std::vector<ExclusionEntry> exclusion_report(const MultiGraph& g, std::vector<std::uint32_t> primes,
                                             const ExclusionOptions& options = {});

}  // namespace graphperiod
