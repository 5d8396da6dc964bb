#include <doctest.h>

#include "qhopf/catalog.hpp"
#include "qhopf/error.hpp"
#include "qhopf/linalg.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

std::size_t span_dim(const std::vector<SparseVec>& vs, int level) {
  EchelonBasis e(level);
  for (const auto& v : vs) e.insert(v);
  return e.rank();
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("small algebras satisfy the structural checks") {
    for (const auto& a : {cyclic_group_algebra(3, 3), upper_triangular(), matrix_algebra(2), matrix_algebra(3)}) {
      CHECK(a->check_associativity());
      CHECK(a->check_unit());
    }
  }

  TEST_CASE("non-associative table is caught with a witness") {
    const auto one = rat(1, 1);
    std::vector<SparseVec> mult(9);
    for (Index i = 0; i < 3; ++i) {
      mult[i] = {{i, one}};
      mult[i * 3] = {{i, one}};
    }
    mult[1 * 3 + 1] = {{2, one}};  // e1 e1 = e2
    mult[2 * 3 + 1] = {{1, one}};  // e2 e1 = e1, e1 e2 = 0
    StructureAlgebra a(3, 1, mult, {{0, one}});
    std::array<Index, 3> w{};
    REQUIRE_FALSE(a.check_associativity(&w));
    const auto e = [&](Index i) { return a.basis_vector(i); };
    CHECK_FALSE(a.multiply(a.multiply(e(w[0]), e(w[1])), e(w[2])) == a.multiply(e(w[0]), a.multiply(e(w[1]), e(w[2]))));
    CHECK(a.check_unit());

    mult[1 * 3 + 0] = {{0, one}};  // e1 e0 = e0
    StructureAlgebra b(3, 1, mult, {{0, one}});
    CHECK_FALSE(b.check_unit());
  }

  TEST_CASE("Jacobson radical and its powers") {
    CHECK(jacobson_radical(*matrix_algebra(2)).empty());
    CHECK(jacobson_radical(*cyclic_group_algebra(4, 4)).empty());
    const auto t = upper_triangular();
    const auto rad = jacobson_radical(*t);
    REQUIRE(rad.size() == 1);
    CHECK(span_dim({rad[0], t->basis_vector(1)}, 1) == 1);
    const auto filt = radical_filtration(*t);
    REQUIRE(filt.size() == 3);
    CHECK(filt[0].size() == 3);
    CHECK(filt[1].size() == 1);
    CHECK(filt[2].empty());
    CHECK(is_two_sided_ideal(*t, rad));
    const auto q = quotient_algebra(*t, rad);
    CHECK(q->dim() == 2);
    CHECK(jacobson_radical(*q).empty());
  }

  TEST_CASE("A(q) is graded by x-degree and radical filtration matches it") {
    // a has order n and x has nilpotency order n², so J^k is spanned by a^i x^j with j ≥ k
    for (int n : {2, 3}) {
      const auto q = build_Aq(n, 1);
      const auto& a = *q.algebra;
      CHECK(a.respects_grading());
      const auto filt = radical_filtration(a);
      REQUIRE(filt.size() == static_cast<std::size_t>(n * n + 1));
      for (int k = 0; k <= n * n; ++k) {
        std::size_t deg_at_least = 0;
        for (int i = 0; i < a.dim(); ++i) deg_at_least += (*a.grading())[i] >= k;
        CHECK(filt[k].size() == deg_at_least);
      }
      const auto gr = associated_graded(a);
      CHECK(gr.algebra->check_associativity());
      const auto images = graded_comparison(a, gr);
      REQUIRE(images.has_value());
      CHECK(is_algebra_isomorphism(a, *gr.algebra, *images));
    }
  }

  TEST_CASE("associated graded of upper triangular matrices is the path algebra of A2") {
    const auto gr = associated_graded(*upper_triangular());
    CHECK(gr.algebra->dim() == 3);
    CHECK(gr.algebra->check_associativity());
    CHECK(jacobson_radical(*gr.algebra).size() == 1);
  }

  TEST_CASE("element arithmetic on a skew monomial algebra") {
    const auto q = build_Aq(2, 1);
    const auto& a = q.algebra;
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const auto u = random_element(rng, a), v = random_element(rng, a), w = random_element(rng, a);
      CHECK((u * v) * w == u * (v * w));
      CHECK(u * (v + w) == u * v + u * w);
      CHECK((u - u).is_zero());
    }
    const Element& x = q.generators[1];
    const Element one = Element::unit(a, 1);
    CHECK_FALSE(x.pow(3).is_zero());
    CHECK(x.pow(4).is_zero());
    const Element h = one + x;
    CHECK(h * invert(h) == one);
    CHECK(invert(q.generators[0]) == q.generators[0]);
    CHECK_THROWS_AS(invert(x), Error);
  }

  TEST_CASE("tensor elements multiply factorwise") {
    const auto q = build_taft(3, 1);
    const auto& a = q.algebra;
    std::mt19937_64 rng(9);
    const auto t2 = tensor_power(a, 2);
    for (int trial = 0; trial < 5; ++trial) {
      const auto u1 = random_element(rng, a), u2 = random_element(rng, a);
      const auto v1 = random_element(rng, a), v2 = random_element(rng, a);
      const auto lhs = tensor_elem(u1, u2) * tensor_elem(v1, v2);
      CHECK(lhs == tensor_elem(u1 * v1, u2 * v2));
      CHECK(lhs.coords() == t2->multiply(tensor_elem(u1, u2).coords(), tensor_elem(v1, v2).coords()));
    }
  }

  TEST_CASE("linear maps compose and invert") {
    const auto q = build_taft(3, 1);
    const auto s = q.antipode;
    const auto sinv = inverse_map(s);
    CHECK(compose(s, sinv) == LinearMap::identity(q.algebra));
    CHECK(compose(sinv, s) == LinearMap::identity(q.algebra));
    const Element& g = q.generators[0];
    const Element& x = q.generators[1];
    const auto u = tensor_elem(g, x);
    CHECK(apply_factorwise(u, {&s, nullptr}) == tensor_elem(s.apply(g), x));
    CHECK(apply_factorwise(u, {nullptr, &s}) == tensor_elem(g, s.apply(x)));
  }

  TEST_CASE("generated subalgebra") {
    const auto q = build_taft(4, 1);
    const auto& a = *q.algebra;
    CHECK(generated_subalgebra(a, {q.generators[0].coords()}).size() == 4);
    CHECK(generated_subalgebra(a, {q.generators[0].coords(), q.generators[1].coords()}).size() == 16);
    CHECK(generated_subalgebra(a, {q.generators[1].coords()}).size() == 4);  // 1, x, x², x³
  }

  TEST_CASE("isomorphism check rejects a non-multiplicative bijection") {
    const auto a = cyclic_group_algebra(3, 3);
    std::vector<SparseVec> swap01 = {a->basis_vector(1), a->basis_vector(0), a->basis_vector(2)};
    CHECK_FALSE(is_algebra_isomorphism(*a, *a, swap01));
    std::vector<SparseVec> inv = {a->basis_vector(0), a->basis_vector(2), a->basis_vector(1)};
    CHECK(is_algebra_isomorphism(*a, *a, inv));
  }
}
