#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "vgraph/error.hpp"
#include "vgraph/numeric.hpp"
#include "vgraph/polynomial.hpp"

namespace vgraph {

/// Truncated power series c_0 + c_1 t + ... + c_N t^N over a ring R
/// (Rational, or Polynomial for symbolic expansion). Arithmetic keeps N.
template <class R>
class Jet {
 public:
  explicit Jet(std::size_t order = 0) : c_(order + 1, R(0)) {}
  explicit Jet(std::vector<R> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) c_.push_back(R(0));
  }

  static Jet variable(std::size_t order) {
    Jet j(order);
    if (order >= 1) j.c_[1] = R(1);
    return j;
  }
  static Jet constant(const R& value, std::size_t order) {
    Jet j(order);
    j.c_[0] = value;
    return j;
  }

  std::size_t order() const noexcept { return c_.size() - 1; }
  const R& operator[](std::size_t k) const { return c_.at(k); }
  R& operator[](std::size_t k) { return c_.at(k); }
  const std::vector<R>& coefficients() const noexcept { return c_; }

  friend Jet operator+(const Jet& a, const Jet& b) {
    check_orders(a, b);
    Jet out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) out.c_[k] = a.c_[k] + b.c_[k];
    return out;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    check_orders(a, b);
    Jet out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) out.c_[k] = a.c_[k] - b.c_[k];
    return out;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    check_orders(a, b);
    const std::size_t n = a.order();
    Jet out(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
    }
    return out;
  }
  friend Jet operator*(const Jet& a, const R& s) {
    Jet out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) out.c_[k] = a.c_[k] * s;
    return out;
  }

  friend bool operator==(const Jet& a, const Jet& b) { return a.c_ == b.c_; }

 private:
  static void check_orders(const Jet& a, const Jet& b) {
    if (a.order() != b.order()) throw InvalidArgument("jet truncation orders differ");
  }

  std::vector<R> c_;
};

/// Taylor coefficients of outer(inner(t)); inner must have zero constant term.
template <class R>
Jet<R> jet_compose(const Jet<R>& outer, const Jet<R>& inner) {
  if (!is_zero(inner[0])) throw InvalidArgument("jet_compose: inner jet must have zero constant term");
  if (outer.order() != inner.order()) throw InvalidArgument("jet truncation orders differ");
  const std::size_t n = inner.order();
  Jet<R> out = Jet<R>::constant(outer[n], n);
  for (std::size_t k = n; k-- > 0;) {
    out = out * inner;
    out[0] = out[0] + outer[k];
  }
  return out;
}

/// Compositional inverse of f (f_0 = 0). `inverse_linear` is 1/f_1, given by
/// the caller so that symbolic rings can supply it as an independent symbol.
template <class R>
Jet<R> jet_reverse(const Jet<R>& f, const R& inverse_linear) {
  if (!is_zero(f[0])) throw InvalidArgument("jet_reverse: f must have zero constant term");
  const std::size_t n = f.order();
  Jet<R> g(n);
  if (n == 0) return g;
  g[1] = inverse_linear;
  for (std::size_t m = 2; m <= n; ++m) {
    // [t^m] f(g) = f_1 g_m + (terms in g_1..g_{m-1}); g_m is still zero here.
    Jet<R> fg = jet_compose(f, g);
    g[m] = R(0) - fg[m] * inverse_linear;
  }
  return g;
}

inline Jet<Rational> jet_reverse(const Jet<Rational>& f) {
  if (f.order() >= 1 && f[1] == 0) throw InvalidArgument("jet_reverse: linear coefficient is zero, no inverse");
  if (f.order() == 0) return jet_reverse(f, Rational(0));
  return jet_reverse(f, Rational(1 / f[1]));
}

/// Re-expands the polynomial f(y) = sum f_j y^j around y = y0.
template <class R>
Jet<R> jet_shift(const Jet<R>& f, const R& y0) {
  const std::size_t n = f.order();
  Jet<R> out(n);
  std::vector<R> powers(n + 1, R(1));
  for (std::size_t k = 1; k <= n; ++k) powers[k] = powers[k - 1] * y0;
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t k = 0; k <= j; ++k)
      out[k] = out[k] + f[j] * powers[j - k] * R(Rational(binomial(j, k)));
  return out;
}

/// Taylor coefficients in t of the solution of y' = f(y), y(0) = y0, where f
/// is the polynomial with coefficients `f` (about y = 0).
template <class R>
Jet<R> jet_ode_flow(const Jet<R>& f, const R& y0, std::size_t order) {
  if (order < 1) throw InvalidArgument("jet_ode_flow: truncation order must be >= 1");
  Jet<R> local(order);  // f about y0, truncated to the flow order
  Jet<R> shifted = jet_shift(f, y0);
  for (std::size_t k = 0; k <= order && k <= shifted.order(); ++k) local[k] = shifted[k];
  Jet<R> y = Jet<R>::constant(y0, order);
  for (std::size_t m = 0; m < order; ++m) {
    Jet<R> u = y;
    u[0] = R(0);
    Jet<R> rhs = jet_compose(local, u);
    y[m + 1] = rhs[m] * Rational(1, static_cast<unsigned long>(m + 1));
  }
  return y;
}

/// Truncated Taylor series in several variables: coefficients p_alpha for
/// |alpha| <= order.
template <class R>
class MultiJet {
 public:
  using Index = std::vector<unsigned>;

  MultiJet(std::size_t arity, std::size_t order) : arity_(arity), order_(order) {}

  std::size_t arity() const noexcept { return arity_; }
  std::size_t order() const noexcept { return order_; }

  void set(const Index& alpha, R value) {
    if (alpha.size() != arity_) throw InvalidArgument("multi-index arity mismatch");
    std::size_t total = 0;
    for (unsigned a : alpha) total += a;
    if (total > order_) throw InvalidArgument("multi-index exceeds truncation order");
    c_[alpha] = std::move(value);
  }
  R get(const Index& alpha) const {
    auto it = c_.find(alpha);
    return it == c_.end() ? R(0) : it->second;
  }
  const std::map<Index, R>& coefficients() const noexcept { return c_; }

  /// All multi-indices of this arity with |alpha| <= order, in lexicographic order.
  static std::vector<Index> indices(std::size_t arity, std::size_t order) {
    std::vector<Index> out;
    Index cur(arity, 0);
    auto rec = [&](auto&& self, std::size_t slot, std::size_t left) -> void {
      if (slot == arity) {
        out.push_back(cur);
        return;
      }
      for (unsigned a = 0; a <= left; ++a) {
        cur[slot] = a;
        self(self, slot + 1, left - a);
      }
      cur[slot] = 0;
    };
    rec(rec, 0, order);
    return out;
  }

 private:
  std::size_t arity_;
  std::size_t order_;
  std::map<Index, R> c_;
};

/// sum_alpha p_alpha * prod_i z_i^alpha_i for increment jets z_i with zero
/// constant term.
template <class R>
Jet<R> multi_compose(const MultiJet<R>& outer, std::span<const Jet<R>> increments) {
  if (increments.size() != outer.arity()) throw InvalidArgument("multi_compose: arity mismatch");
  if (increments.empty()) throw InvalidArgument("multi_compose: need at least one argument");
  const std::size_t n = increments.front().order();
  std::vector<std::vector<Jet<R>>> powers(increments.size());
  for (std::size_t i = 0; i < increments.size(); ++i) {
    if (!is_zero(increments[i][0])) throw InvalidArgument("multi_compose: increments need zero constant term");
    powers[i].push_back(Jet<R>::constant(R(1), n));
    for (std::size_t k = 1; k <= n; ++k) powers[i].push_back(powers[i].back() * increments[i]);
  }
  Jet<R> out(n);
  for (const auto& [alpha, p] : outer.coefficients()) {
    std::size_t total = 0;
    for (unsigned a : alpha) total += a;
    if (total > n || is_zero(p)) continue;
    Jet<R> term = Jet<R>::constant(p, n);
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i]) term = term * powers[i][alpha[i]];
    out = out + term;
  }
  return out;
}

}  // namespace vgraph
