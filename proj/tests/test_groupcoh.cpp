#include <doctest.h>

#include <random>

#include "qhopf/catalog.hpp"
#include "qhopf/error.hpp"
#include "qhopf/groupcoh.hpp"

using namespace qhopf;

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Inhomogeneous coboundary with trivial coefficients, written out directly.
std::vector<std::int64_t> d_oracle(int n, int k, std::int64_t m, const std::vector<std::int64_t>& c) {
  auto at = [&](const std::vector<int>& args) {
    std::size_t f = 0;
    for (int a : args) f = f * n + a;
    return c[f];
  };
  std::size_t size = 1;
  for (int t = 0; t <= k; ++t) size *= n;
  std::vector<std::int64_t> out(size);
  for (std::size_t f = 0; f < size; ++f) {
    std::vector<int> g(k + 1);
    std::size_t r = f;
    for (int t = k; t >= 0; --t) {
      g[t] = static_cast<int>(r % n);
      r /= n;
    }
    std::int64_t v = at(std::vector<int>(g.begin() + 1, g.end()));
    for (int i = 0; i < k; ++i) {
      std::vector<int> h;
      for (int t = 0; t <= k; ++t) {
        if (t == i) {
          h.push_back((g[t] + g[t + 1]) % n);
          ++t;
        } else {
          h.push_back(g[t]);
        }
      }
      v += (i % 2 == 0 ? -1 : 1) * at(h);
    }
    v += (k % 2 == 0 ? -1 : 1) * at(std::vector<int>(g.begin(), g.end() - 1));
    out[f] = mod(v, m);
  }
  return out;
}

ExpCochain random_cochain(std::mt19937_64& rng, int n, int k, std::int64_t m) {
  ExpCochain c(n, k, m);
  std::vector<std::int64_t> vals(c.size());
  for (auto& v : vals) v = static_cast<std::int64_t>(rng() % m);
  return ExpCochain(n, k, m, vals);
}

}  // namespace

TEST_SUITE("groupcoh") {
  TEST_CASE("differential matches the explicit coboundary formula") {
    std::mt19937_64 rng(1);
    for (auto [n, m] : {std::pair{2, 4}, {3, 9}, {4, 4}, {5, 25}})
      for (int k = 0; k <= 3; ++k) {
        const auto c = random_cochain(rng, n, k, m);
        CHECK(differential(c).values() == d_oracle(n, k, m, c.values()));
      }
  }

  TEST_CASE("d squared vanishes on random cochains") {
    std::mt19937_64 rng(2);
    for (auto [n, m] : {std::pair{2, 4}, {3, 9}, {4, 4}, {9, 9}})
      for (int k = 0; k <= 3; ++k)
        for (int trial = 0; trial < 13; ++trial) CHECK(differential(differential(random_cochain(rng, n, k, m))).is_zero());
  }

  TEST_CASE("carry cocycles are cocycles and normalized") {
    for (int n = 2; n <= 6; ++n)
      for (int s = 0; s < n; ++s) {
        const auto w = carry_cocycle(n, s);
        CHECK(w.modulus() == n * n);
        CHECK(w.is_normalized());
        CHECK(differential(w).is_zero());
      }
    CHECK(assoc_cocycle_Aq(3, 1) == carry_cocycle(3, -1));
    CHECK_THROWS_AS(assoc_cocycle_Aq(2, 2), Error);
  }

  TEST_CASE("associator cocycle of A(q) on Z2 has no cochain solution at all") {
    const auto omega = assoc_cocycle_Aq(2, 1);
    CHECK(omega(std::vector<int>{1, 1, 1}) == 2);
    CHECK_FALSE(solve_coboundary(omega).has_value());
    int solutions = 0;
    for (int code = 0; code < 256; ++code) {
      std::vector<std::int64_t> vals(4);
      for (int t = 0; t < 4; ++t) vals[t] = (code >> (2 * t)) & 3;
      if (d_oracle(2, 2, 4, vals) == omega.values()) ++solutions;
    }
    CHECK(solutions == 0);
  }

  TEST_CASE("inflation to a larger cyclic group trivializes the class") {
    for (auto [n, r] : {std::pair{2, 1}, {2, 3}, {3, 1}, {3, 2}}) {
      const auto omega = assoc_cocycle_Aq(n, r);
      const auto lifted = inflate(omega, n * n);
      for (std::size_t f = 0; f < lifted.size(); ++f) {
        auto args = lifted.unflatten(f);
        for (auto& a : args) a %= n;
        CHECK(lifted.at(f) == omega(args));
      }
      const auto c = solve_coboundary(lifted);
      REQUIRE(c.has_value());
      CHECK(c->is_normalized());
      CHECK(differential(*c) == lifted);
    }
    CHECK_THROWS_AS(inflate(assoc_cocycle_Aq(2, 1), 3), Error);
  }

  TEST_CASE("solver recovers random coboundaries") {
    std::mt19937_64 rng(3);
    for (auto [n, m] : {std::pair{2, 4}, {3, 9}, {4, 8}, {6, 12}, {9, 9}})
      for (int trial = 0; trial < 5; ++trial) {
        auto c = random_cochain(rng, n, 2, m);
        const auto w = differential(c);
        const auto sol = solve_coboundary(w);
        REQUIRE(sol.has_value());
        CHECK(differential(*sol) == w);
      }
  }

  TEST_CASE("zero cocycle has the zero primitive") {
    const auto c = solve_coboundary(ExpCochain(4, 3, 4));
    REQUIRE(c.has_value());
    CHECK(c->is_zero());
  }

  TEST_CASE("solver refuses a non-cocycle") {
    ExpCochain w(2, 3, 4);
    w.set({1, 0, 1}, 1);
    CHECK_FALSE(differential(w).is_zero());
    CHECK_THROWS_AS(solve_coboundary(w), Error);
  }

  TEST_CASE("cochains become diagonal tensors on eigen-idempotents") {
    const auto q = build_taft(4, 1);
    const Element& g = q.generators[0];
    std::mt19937_64 rng(4);
    const auto c = random_cochain(rng, 4, 2, 4);
    const auto j = cochain_to_tensor(c, q, g);
    std::vector<Element> e;
    for (int i = 0; i < 4; ++i) {
      Element x(q.algebra, 1);
      for (int k = 0; k < 4; ++k) x = x + g.pow(k) * (CycScalar::root(4, -i * k) * Rational(1, 4));
      CHECK(g * x == x * CycScalar::root(4, i));
      e.push_back(x);
    }
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const auto eab = tensor_elem(e[a], e[b]);
        CHECK(j * eab == eab * CycScalar::root(4, c(std::vector<int>{a, b})));
      }
    CHECK_THROWS_AS(cochain_to_tensor(c, q, g.pow(2)), Error);
  }
}
