#include <doctest.h>

#include "qhopf/catalog.hpp"
#include "qhopf/error.hpp"
#include "qhopf/groupcoh.hpp"
#include "support.hpp"

using namespace qhopf;

namespace {

// 1_i = (1/n) Σ_j ζ^{-λij} a^j, the idempotent on which a acts by ζ^{λi}.
std::vector<Element> idempotents(const Element& a, int n, int level, std::int64_t lambda) {
  std::vector<Element> out;
  for (int i = 0; i < n; ++i) {
    Element e(a.parent(), 1);
    for (int j = 0; j < n; ++j) e = e + a.pow(j) * (CycScalar::root(level, -lambda * i * j) * Rational(1, n));
    out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("every listed instance parses and passes all axioms") {
    for (const auto& spec : list_instances()) {
      INFO(spec);
      const auto q = parse_instance(spec);
      CHECK(q.name == spec);
      const auto rep = verify_axioms(q);
      CHECK(rep.all_pass());
    }
  }

  TEST_CASE("dimensions") {
    CHECK(build_Aq(2, 1).dim() == 8);
    CHECK(build_Aq(3, 2).dim() == 27);
    CHECK(build_H32().dim() == 32);
    CHECK(build_taft(5, 2).dim() == 25);
    CHECK(build_book(3, 1, 2).dim() == 27);
    CHECK(build_book64().dim() == 64);
    CHECK(build_cyclic_cocycle(3, carry_cocycle(3, 1)).dim() == 3);
  }

  TEST_CASE("A(q) relations, coproduct and associator") {
    for (auto [n, r] : {std::pair{2, 1}, {2, 3}, {3, 1}, {3, 4}}) {
      const auto q = build_Aq(n, r);
      const int level = n * n;
      const Element& a = q.generators[0];
      const Element& x = q.generators[1];
      const auto qq = [&](std::int64_t k) { return CycScalar::root(level, r * k); };
      const Element one = Element::unit(q.algebra, 1);
      CHECK(a * x == x * a * qq(n));
      CHECK(a.pow(n) == one);
      CHECK(x.pow(n * n).is_zero());
      CHECK_FALSE(x.pow(n * n - 1).is_zero());
      const auto id = idempotents(a, n, level, static_cast<std::int64_t>(r) * n);
      Element weight(q.algebra, 1), sweight(q.algebra, 1);
      for (int y = 0; y < n; ++y) {
        weight = weight + id[y] * qq(y);
        sweight = sweight + id[y] * qq(n - y);
      }
      const Element expected = tensor_elem(x, weight) + tensor_elem(one, (one - id[0]) * x) +
                               tensor_elem(a.pow(n - 1), id[0] * x);
      CHECK(q.coproduct(x) == expected);
      CHECK(q.coproduct(a) == tensor_elem(a, a));
      CHECK(q.antipode.apply(x) == -(x * sweight));
      CHECK(q.alpha == a);
      CHECK(q.beta == one);
      Element phi(q.algebra, 3);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            phi = phi + tensor_elem(tensor_elem(id[i], id[j]), id[k]) * qq(-n * i * (j + k >= n ? 1 : 0));
      CHECK(q.phi == phi);
    }
  }

  TEST_CASE("H(32) relations and associator") {
    const auto q = build_H32();
    const Element& a = q.generators[0];
    const Element& x = q.generators[1];
    const Element& y = q.generators[2];
    const Element one = Element::unit(q.algebra, 1);
    const CycScalar i = CycScalar::root(4, 1);
    CHECK(a * x == -(x * a));
    CHECK(a * y == -(y * a));
    CHECK(a.pow(2) == one);
    CHECK(x.pow(4).is_zero());
    CHECK(y.pow(4).is_zero());
    CHECK((x * y + y * x * i).is_zero());
    const Element pp = (one + a) * CycScalar(4, Rational(1, 2)), pm = (one - a) * CycScalar(4, Rational(1, 2));
    CHECK(q.coproduct(x) == tensor_elem(x, pp + pm * i) + tensor_elem(one, pp * x) + tensor_elem(a, pm * x));
    CHECK(q.coproduct(y) == tensor_elem(y, pp - pm * i) + tensor_elem(one, pp * y) + tensor_elem(a, pm * y));
    CHECK(q.phi == Element::unit(q.algebra, 3) - tensor_elem(tensor_elem(pm, pm), pm) * CycScalar(4, Rational(2)));
    CHECK(q.antipode.apply(x) == -(x * (pp + pm * i)));
    CHECK(q.antipode.apply(y) == -(y * (pp - pm * i)));
  }

  TEST_CASE("Taft and book Hopf algebras") {
    for (int n : {2, 3, 4, 5}) {
      const auto q = build_taft(n, 1);
      const Element& a = q.generators[0];
      const Element& x = q.generators[1];
      CHECK(q.is_hopf());
      CHECK(a * x == x * a * CycScalar::root(n, 1));
      CHECK(q.coproduct(x) == tensor_elem(x, a) + tensor_elem(Element::unit(q.algebra, 1), x));
      CHECK(x.pow(n).is_zero());
    }
    const auto b = build_book(3, 1, 2);
    const Element& a = b.generators[0];
    const Element& x = b.generators[1];
    const Element& y = b.generators[2];
    CHECK(x * y == y * x);
    CHECK(a * y == y * a * CycScalar::root(3, 2));
    CHECK(b.coproduct(y) == tensor_elem(y, Element::unit(b.algebra, 1)) + tensor_elem(a.pow(2), y));
    CHECK(b.is_hopf());
  }

  TEST_CASE("malformed specs and parameters") {
    CHECK_THROWS_AS(parse_instance("nonsense"), Error);
    CHECK_THROWS_AS(parse_instance("Aq:n=2"), Error);
    CHECK_THROWS_AS(parse_instance("Aq:n=two,r=1"), Error);
    CHECK_THROWS_AS(build_Aq(1, 1), Error);
    CHECK_THROWS_AS(build_Aq(2, 2), Error);
    CHECK_THROWS_AS(build_book(3, 1, 3), Error);
    CHECK_THROWS_AS(build_cyclic_cocycle(2, ExpCochain(2, 3, 4, {0, 0, 0, 0, 0, 0, 0, 1})), Error);
    try {
      parse_instance("bogus:n=1");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }

  TEST_CASE("cyclic cocycle instances are genuinely quasi") {
    const auto q = build_cyclic_cocycle(2, carry_cocycle(2, 1));
    CHECK_FALSE(q.is_hopf());
    CHECK(verify_axioms(q).all_pass());
    CHECK(build_cyclic_cocycle(2, carry_cocycle(2, 0)).is_hopf());
  }
}
