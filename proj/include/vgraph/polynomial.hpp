#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vgraph/numeric.hpp"

namespace vgraph {

/// Sparse multivariate polynomial with rational coefficients. Variables are
/// small integer ids; names are supplied by the caller when printing.
class Polynomial {
 public:
  using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (variable, exponent), sorted

  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT: implicit like a scalar
  Polynomial(const Rational& c) {                 // NOLINT
    if (c != 0) terms_.emplace(Monomial{}, c);
  }

  static Polynomial variable(std::uint32_t id) {
    Polynomial p;
    p.terms_.emplace(Monomial{{id, 1}}, Rational(1));
    return p;
  }

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
    return out;
  }
  friend Polynomial operator*(const Polynomial& a, const Rational& s) {
    Polynomial out;
    if (s == 0) return out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, c * s);
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Coefficient-wise rendering, monomials as `name^e*name`.
  std::string to_string(const std::vector<std::string>& names) const;
  static std::string monomial_string(const Monomial& m, const std::vector<std::string>& names);

 private:
  static Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.push_back(b[j++]);
      } else {
        out.emplace_back(a[i].first, a[i].second + b[j].second);
        ++i, ++j;
      }
    }
    return out;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Monomial, Rational> terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }
inline bool is_zero(const Rational& r) { return r == 0; }

inline std::string Polynomial::monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += "*";
    out += m[i].first < names.size() ? names[m[i].first] : "v" + std::to_string(m[i].first);
    if (m[i].second > 1) out += "^" + std::to_string(m[i].second);
  }
  return out;
}

inline std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += monomial_string(m, names);
    }
  }
  return out;
}

}  // namespace vgraph
