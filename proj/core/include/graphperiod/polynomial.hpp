#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphperiod/primes.hpp"

namespace graphperiod {

using Integer = boost::multiprecision::cpp_int;
using Exponents = std::vector<std::uint32_t>;

// Ordered set of variable names a polynomial lives over.
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<std::string> names);
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // Throws std::invalid_argument for an unknown name.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<std::string> names_;
};

// Term order used for storage and display: exponent vectors compared from
// the last variable to the first, ascending. Over (s,t) this lists terms by
// increasing t-degree, then increasing s-degree.
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse polynomial with exact integer coefficients. Zero coefficients are
// never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Integer, TermOrder>;

  Polynomial() = default;
  explicit Polynomial(VarSet vars) : vars_(std::move(vars)) {}

  static Polynomial constant(const VarSet& vars, const Integer& c);
  static Polynomial monomial(const VarSet& vars, Exponents exps, const Integer& c = 1);
  static Polynomial variable(const VarSet& vars, std::string_view name);

  const VarSet& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Exponents& exps) const;

  // Adds c * m in place (merging like terms, pruning zeros).
  void add_term(const Exponents& exps, const Integer& c);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator*=(const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Value at an integer point (one entry per variable).
  Integer evaluate(std::span<const Integer> point) const;

  // e.g. `s^4 + 2*s^5*t - t^6`; the zero polynomial renders as `0`.
  std::string to_string() const;

  // Accepts the to_string grammar (whitespace tolerated). Throws
  // std::invalid_argument on syntax errors or unknown variables.
  static Polynomial parse(std::string_view text, const VarSet& vars);

 private:
  VarSet vars_;
  Terms terms_;
};

std::string render_monomial(const VarSet& vars, const Exponents& exps);

// Polynomial over Z_p: coefficients kept in 0..p-1.
class ModPolynomial {
 public:
  // Reduces a mod p. Throws std::invalid_argument if p is not prime.
  ModPolynomial(const Polynomial& a, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  const Polynomial& poly() const { return poly_; }
  const VarSet& vars() const { return poly_.vars(); }
  bool is_zero() const { return poly_.is_zero(); }
  std::string to_string() const { return poly_.to_string(); }

  friend ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b);
  friend ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b);
  friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b);
  friend bool operator==(const ModPolynomial&, const ModPolynomial&) = default;

 private:
  static void check_compatible(const ModPolynomial& a, const ModPolynomial& b);

  Polynomial poly_;
  std::uint32_t p_;
};

ModPolynomial reduce_mod_p(const Polynomial& a, std::uint32_t p);

// Canonical representative modulo v^p - v: an exponent e >= 1 of v becomes
// ((e - 1) mod (p - 1)) + 1; exponent 0 is left alone.
ModPolynomial fold_variable(const ModPolynomial& a, std::string_view var);
ModPolynomial fold_variables(const ModPolynomial& a, std::span<const std::string> vars);

// a^k, folding the listed variables after every multiplication.
ModPolynomial power_mod(const ModPolynomial& a, std::uint32_t k, std::span<const std::string> folded);

// Replaces every variable named in `values` by the given polynomial (over
// `target`); remaining variables of `a` must exist in `target`.
Polynomial substitute(const Polynomial& a, const std::map<std::string, Polynomial>& values,
                      const VarSet& target);

// Single-variable form within a's own variable set.
Polynomial substitute(const Polynomial& a, std::string_view var, const Polynomial& value);

// Exact quotient by a monomial. Throws std::domain_error if a term is not
// divisible.
Polynomial divide_exact_monomial(const Polynomial& a, const Exponents& m);

}  // namespace graphperiod
