#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vgraph/error.hpp"
#include "vgraph/jet.hpp"
#include "vgraph/polynomial.hpp"

using namespace vgraph;
using J = Jet<Rational>;

namespace {

J jet(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return J(v);
}

Rational small(std::mt19937_64& rng) {
  Rational q(static_cast<long>(rng() % 19) - 9, static_cast<unsigned long>(rng() % 9 + 1));
  q.canonicalize();
  return q;
}

J random_jet(std::mt19937_64& rng, std::size_t n, bool zero_constant, bool unit) {
  J j(n);
  for (std::size_t k = 0; k <= n; ++k) j[k] = small(rng);
  if (zero_constant) j[0] = 0;
  while (unit && n >= 1 && j[1] == 0) j[1] = small(rng);
  return j;
}

// sum_k outer_k * inner^k by repeated multiplication
J naive_compose(const J& outer, const J& inner) {
  J out(inner.order()), power = J::constant(1, inner.order());
  for (std::size_t k = 0; k <= outer.order(); ++k) {
    out = out + power * outer[k];
    power = power * inner;
  }
  return out;
}

}  // namespace

TEST_CASE("arithmetic") {
  J a = jet({1, 2, 3}), b = jet({0, 1, -1});
  CHECK(a + b == jet({1, 3, 2}));
  CHECK(a - b == jet({1, 1, 4}));
  CHECK(a * b == jet({0, 1, 1}));
  CHECK(a * Rational(2) == jet({2, 4, 6}));
  CHECK(J::variable(3) == jet({0, 1, 0, 0}));
  CHECK_THROWS_AS(a + jet({1, 2}), InvalidArgument);
}

TEST_CASE("composition") {
  J x = J::variable(3);
  J g = jet({0, 1, 1, 0});
  CHECK(jet_compose(x, g) == g);
  CHECK(jet_compose(jet({1, 1, 1, 1}), g) == jet({1, 1, 2, 3}));
  CHECK_THROWS_AS(jet_compose(x, jet({1, 1, 0, 0})), InvalidArgument);
  CHECK_THROWS_AS(jet_compose(x, jet({0, 1})), InvalidArgument);
}

TEST_CASE("composition matches naive expansion and is associative") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      J f = random_jet(rng, n, false, false);
      J g = random_jet(rng, n, true, false);
      J h = random_jet(rng, n, true, false);
      CHECK(jet_compose(f, g) == naive_compose(f, g));
      CHECK(jet_compose(jet_compose(f, g), h) == jet_compose(f, jet_compose(g, h)));
    }
}

TEST_CASE("reversion") {
  CHECK(jet_reverse(J::variable(4)) == J::variable(4));
  CHECK(jet_reverse(jet({0, 1, 1, 0})) == jet({0, 1, -1, 2}));
  CHECK_THROWS_AS(jet_reverse(jet({0, 0, 1})), InvalidArgument);
  CHECK_THROWS_AS(jet_reverse(jet({1, 1, 1})), InvalidArgument);
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      J f = random_jet(rng, n, true, true);
      J g = jet_reverse(f);
      CHECK(jet_compose(f, g) == J::variable(n));
      CHECK(jet_compose(g, f) == J::variable(n));
    }
}

TEST_CASE("shift") {
  // (1 + y)^2 about y0 = 2 is 9 + 6u + u^2
  CHECK(jet_shift(jet({1, 2, 1}), Rational(2)) == jet({9, 6, 1}));
}

TEST_CASE("ode flow") {
  J e = jet_ode_flow(jet({0, 1, 0, 0, 0, 0}), Rational(1), 5);
  for (std::size_t k = 0; k <= 5; ++k) CHECK(e[k] == Rational(1) / Rational(factorial(k)));
  J geometric = jet_ode_flow(jet({0, 0, 1, 0, 0, 0, 0}), Rational(1), 6);
  for (std::size_t k = 0; k <= 6; ++k) CHECK(geometric[k] == 1);
  CHECK_THROWS_AS(jet_ode_flow(jet({0, 1}), Rational(1), 0), InvalidArgument);
}

TEST_CASE("ode flow satisfies the equation on random fields") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 8; ++n) {
    J f = random_jet(rng, n, false, false);
    Rational y0 = small(rng);
    J y = jet_ode_flow(f, y0, n);
    CHECK(y[0] == y0);
    // y'(t) = f(y(t)) up to t^(n-1), with f evaluated by naive expansion
    J u = y;
    u[0] = 0;
    J rhs = naive_compose(jet_shift(f, y0), u);
    for (std::size_t k = 0; k < n; ++k) CHECK(y[k + 1] * Rational(static_cast<long>(k + 1)) == rhs[k]);
  }
}

TEST_CASE("multivariate composition") {
  MultiJet<Rational> p(2, 3);
  p.set({1, 0}, 2);
  p.set({1, 1}, 3);
  p.set({0, 2}, -1);
  CHECK(p.get({1, 1}) == 3);
  CHECK(p.get({2, 0}) == 0);
  CHECK_THROWS_AS(p.set({2, 2}, 1), InvalidArgument);
  CHECK_THROWS_AS(p.set({1}, 1), InvalidArgument);
  CHECK(MultiJet<Rational>::indices(2, 2).size() == 6);
  CHECK(MultiJet<Rational>::indices(3, 3).size() == 20);

  std::vector<J> z{jet({0, 1, 0, 0}), jet({0, 0, 1, 0})};
  // 2a + 3ab - b^2 with a = t, b = t^2
  CHECK(multi_compose<Rational>(p, z) == jet({0, 2, 0, 3}));
  std::vector<J> wrong{jet({0, 1, 0, 0})};
  CHECK_THROWS_AS(multi_compose<Rational>(p, wrong), InvalidArgument);

  std::mt19937_64 rng(2);
  for (std::size_t n = 1; n <= 6; ++n) {
    J f = random_jet(rng, n, false, false), g = random_jet(rng, n, true, false);
    MultiJet<Rational> m(1, n);
    for (std::size_t k = 0; k <= n; ++k) m.set({static_cast<unsigned>(k)}, f[k]);
    std::vector<J> args{g};
    CHECK(multi_compose<Rational>(m, args) == jet_compose(f, g));
  }
}

TEST_CASE("symbolic coefficients") {
  Polynomial a = Polynomial::variable(0), b = Polynomial::variable(1);
  Polynomial s = (a + b) * (a - b);
  CHECK(s == a * a - b * b);
  CHECK(s.to_string({"a", "b"}) == "a^2 - b^2");
  CHECK(is_zero((a * b) - (b * a)));
  CHECK((a * Rational(1, 2)).to_string({"a"}) == "1/2*a");

  Jet<Polynomial> g(2);
  g[1] = a;
  g[2] = b;
  Jet<Polynomial> f(2);
  f[1] = Polynomial(1);
  f[2] = Polynomial(1);
  Jet<Polynomial> fg = jet_compose(f, g);
  CHECK(fg[2] == b + a * a);
}
