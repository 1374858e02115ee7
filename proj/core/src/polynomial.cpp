#include "graphperiod/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace graphperiod {

VarSet::VarSet(std::initializer_list<std::string> names) : names_(names) {}
VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {}

std::size_t VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

bool VarSet::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

namespace {

void require_same_vars(const Polynomial& a, const Polynomial& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("polynomials over different variable sets");
}

Integer mod_nonneg(const Integer& c, std::uint32_t p) {
  Integer r = c % p;
  if (r < 0) r += p;
  return r;
}

Polynomial reduce_coefficients(const Polynomial& a, std::uint32_t p) {
  Polynomial out(a.vars());
  for (const auto& [exps, c] : a.terms()) out.add_term(exps, mod_nonneg(c, p));
  return out;
}

}  // namespace

Polynomial Polynomial::constant(const VarSet& vars, const Integer& c) {
  return monomial(vars, Exponents(vars.size(), 0), c);
}

Polynomial Polynomial::monomial(const VarSet& vars, Exponents exps, const Integer& c) {
  if (exps.size() != vars.size()) throw std::invalid_argument("exponent vector has wrong length");
  Polynomial p(vars);
  p.add_term(exps, c);
  return p;
}

Polynomial Polynomial::variable(const VarSet& vars, std::string_view name) {
  Exponents exps(vars.size(), 0);
  exps[vars.index_of(name)] = 1;
  return monomial(vars, std::move(exps));
}

Integer Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Exponents& exps, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [exps, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  require_same_vars(*this, b);
  for (const auto& [exps, c] : b.terms_) add_term(exps, c);
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out += b;
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_vars(a, b);
  Polynomial out(a.vars());
  Exponents exps(a.vars().size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
      out.add_term(exps, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& b) {
  *this = *this * b;
  return *this;
}

Integer Polynomial::evaluate(std::span<const Integer> point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("point has wrong dimension");
  Integer total = 0;
  for (const auto& [exps, c] : terms_) {
    Integer term = c;
    for (std::size_t i = 0; i < exps.size(); ++i) term *= boost::multiprecision::pow(point[i], exps[i]);
    total += term;
  }
  return total;
}

std::string render_monomial(const VarSet& vars, const Exponents& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool is_constant = std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
    if (is_constant) {
      out << magnitude;
    } else if (magnitude == 1) {
      out << render_monomial(vars_, exps);
    } else {
      out << magnitude << '*' << render_monomial(vars_, exps);
    }
  }
  return out.str();
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const VarSet& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial result(vars_);
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto [exps, c] = parse_term();
      result.add_term(exps, negative ? Integer(-c) : c);
      skip_space();
      if (pos_ == text_.size()) break;
      const char op = text_[pos_++];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = (op == '-');
    }
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string read_digits() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<Exponents, Integer> parse_term() {
    Exponents exps(vars_.size(), 0);
    Integer coeff = 1;
    while (true) {
      skip_space();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= Integer(read_digits());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const auto start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          ++pos_;
        }
        const auto name = text_.substr(start, pos_ - start);
        if (!vars_.contains(name)) fail("unknown variable '" + std::string(name) + "'");
        std::uint32_t power = 1;
        skip_space();
        if (peek() == '^') {
          ++pos_;
          power = static_cast<std::uint32_t>(std::stoul(read_digits()));
        }
        exps[vars_.index_of(name)] += power;
      } else {
        fail("expected a coefficient or variable");
      }
      skip_space();
      if (peek() != '*') break;
      ++pos_;
    }
    return {exps, coeff};
  }

  std::string_view text_;
  const VarSet& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, const VarSet& vars) {
  return PolynomialParser(text, vars).parse();
}

ModPolynomial::ModPolynomial(const Polynomial& a, std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  poly_ = reduce_coefficients(a, p);
}

void ModPolynomial::check_compatible(const ModPolynomial& a, const ModPolynomial& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("polynomials over different moduli");
  require_same_vars(a.poly_, b.poly_);
}

ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b) {
  ModPolynomial::check_compatible(a, b);
  return ModPolynomial(a.poly_ + b.poly_, a.p_);
}

ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b) {
  ModPolynomial::check_compatible(a, b);
  return ModPolynomial(a.poly_ - b.poly_, a.p_);
}

ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
  ModPolynomial::check_compatible(a, b);
  return ModPolynomial(a.poly_ * b.poly_, a.p_);
}

ModPolynomial reduce_mod_p(const Polynomial& a, std::uint32_t p) { return ModPolynomial(a, p); }

ModPolynomial fold_variable(const ModPolynomial& a, std::string_view var) {
  const std::string name(var);
  return fold_variables(a, std::span<const std::string>(&name, 1));
}

ModPolynomial fold_variables(const ModPolynomial& a, std::span<const std::string> vars) {
  const std::uint32_t p = a.modulus();
  std::vector<std::size_t> idx;
  for (const auto& v : vars) idx.push_back(a.vars().index_of(v));
  Polynomial out(a.vars());
  for (const auto& [key, c] : a.poly().terms()) {
    Exponents exps = key;
    for (auto i : idx) {
      if (exps[i] >= 1) exps[i] = (exps[i] - 1) % (p - 1) + 1;
    }
    out.add_term(exps, c);
  }
  return ModPolynomial(out, p);
}

ModPolynomial power_mod(const ModPolynomial& a, std::uint32_t k, std::span<const std::string> folded) {
  if (k == 0) throw std::invalid_argument("power_mod needs k >= 1");
  ModPolynomial base = fold_variables(a, folded);
  ModPolynomial result = base;
  --k;
  while (k > 0) {
    if (k & 1u) result = fold_variables(result * base, folded);
    k >>= 1;
    if (k > 0) base = fold_variables(base * base, folded);
  }
  return result;
}

Polynomial substitute(const Polynomial& a, const std::map<std::string, Polynomial>& values,
                      const VarSet& target) {
  for (const auto& [name, value] : values) {
    if (!a.vars().contains(name)) throw std::invalid_argument("substituted variable '" + name + "' not present");
    if (value.vars() != target) throw std::invalid_argument("substitution value over wrong variable set");
  }
  // Per source variable: either a polynomial image, or a target index to keep.
  const std::size_t n = a.vars().size();
  std::vector<const Polynomial*> image(n, nullptr);
  std::vector<std::size_t> keep(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& name = a.vars().name(i);
    if (auto it = values.find(name); it != values.end()) {
      image[i] = &it->second;
    } else {
      keep[i] = target.index_of(name);
    }
  }
  std::vector<std::vector<Polynomial>> powers(n);
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *image[i]);
    return cache[e];
  };
  Polynomial out(target);
  for (const auto& [exps, c] : a.terms()) {
    Exponents kept(target.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!image[i]) kept[keep[i]] += exps[i];
    }
    Polynomial term = Polynomial::monomial(target, kept, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (image[i] && exps[i] > 0) term = term * power_of(i, exps[i]);
    }
    out += term;
  }
  return out;
}

Polynomial substitute(const Polynomial& a, std::string_view var, const Polynomial& value) {
  return substitute(a, {{std::string(var), value}}, a.vars());
}

Polynomial divide_exact_monomial(const Polynomial& a, const Exponents& m) {
  if (m.size() != a.vars().size()) throw std::invalid_argument("monomial has wrong length");
  Polynomial out(a.vars());
  for (const auto& [key, c] : a.terms()) {
    Exponents exps = key;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (exps[i] < m[i]) {
        throw std::domain_error("term " + render_monomial(a.vars(), exps) + " is not divisible by " +
                                render_monomial(a.vars(), m));
      }
      exps[i] -= m[i];
    }
    out.add_term(exps, c);
  }
  return out;
}

}  // namespace graphperiod
