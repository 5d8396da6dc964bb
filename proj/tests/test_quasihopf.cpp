#include <doctest.h>

#include "qhopf/catalog.hpp"
#include "qhopf/error.hpp"
#include "qhopf/linalg.hpp"
#include "qhopf/quasihopf.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

std::vector<std::string> failing(const AxiomReport& r) {
  std::vector<std::string> out;
  for (const auto& x : r.results)
    if (!x.pass) out.push_back(x.axiom);
  return out;
}

bool fails(const AxiomReport& r, const std::string& axiom) {
  const auto* x = r.find(axiom);
  return x && !x->pass && x->witness.has_value();
}

}  // namespace

TEST_SUITE("quasihopf") {
  TEST_CASE("report lists every axiom in order") {
    const auto rep = verify_axioms(build_taft(2, 1));
    REQUIRE(rep.results.size() == std::size(kAxiomNames));
    for (std::size_t i = 0; i < rep.results.size(); ++i) CHECK(rep.results[i].axiom == kAxiomNames[i]);
    CHECK(rep.all_pass());
  }

  TEST_CASE("broken antipode is reported with a witness") {
    auto q = build_taft(3, 1);
    auto cols = q.antipode.columns();
    const Index xi = q.generators[1].coords().front().first;
    for (auto& [i, c] : cols[xi]) c = c * Rational(2);
    q.antipode = LinearMap(q.algebra, 1, 1, cols);
    const auto rep = verify_axioms(q);
    CHECK(fails(rep, "f_antipode_alpha_beta"));
    CHECK(rep.find("c_quasi_coassociative")->pass);
  }

  TEST_CASE("dropping the associator of A(q) breaks quasi-coassociativity only") {
    auto q = build_Aq(2, 1);
    q.phi = Element::unit(q.algebra, 3);
    q.phi_inv = q.phi;
    const auto rep = verify_axioms(q);
    CHECK(fails(rep, "c_quasi_coassociative"));
    CHECK(rep.find("a_delta_algebra_map")->pass);
    CHECK(rep.find("d_pentagon")->pass);
  }

  TEST_CASE("coproduct that is not multiplicative is rejected") {
    auto q = build_taft(2, 1);
    auto cols = q.delta.columns();
    const Index gi = q.generators[0].coords().front().first;
    cols[gi] = (tensor_elem(q.generators[0], q.generators[0]) + tensor_elem(q.generators[1], q.generators[1])).coords();
    q.delta = LinearMap(q.algebra, 1, 2, cols);
    CHECK(fails(verify_axioms(q), "a_delta_algebra_map"));
  }

  TEST_CASE("twisting preserves the axioms and twisting back restores the datum") {
    std::mt19937_64 rng(17);
    for (const auto& spec : {"taft:N=2,r=1", "taft:N=3,r=1", "Aq:n=2,r=1"}) {
      const auto q = parse_instance(spec);
      const Element& g = q.generators[0];
      const Element& x = q.generators[1];
      const Element one2 = Element::unit(q.algebra, 2);
      for (int trial = 0; trial < 3; ++trial) {
        const auto t = random_scalar(rng, q.level(), 2);
        // counital because ε(x) = 0, invertible because x⊗gx is nilpotent
        const Element j = one2 + tensor_elem(x, g * x) * t;
        const auto qj = twist(q, j);
        INFO(spec);
        CHECK(failing(verify_axioms(qj)).empty());
        const auto back = twist(qj, invert(j));
        CHECK(back.delta == q.delta);
        CHECK(back.phi == q.phi);
        CHECK(back.alpha == q.alpha);
        CHECK(back.beta == q.beta);
      }
    }
  }

  TEST_CASE("twist rejects a non-counital element") {
    const auto q = build_taft(2, 1);
    const Element j = Element::unit(q.algebra, 2) * CycScalar(q.level(), Rational(2));
    CHECK_THROWS_AS(twist(q, j), Error);
  }

  TEST_CASE("square of the Sweedler antipode is conjugation by the grouplike") {
    const auto q = build_taft(2, 1);
    CHECK(is_inner(antipode_power(q, 2), q.generators[0]));
    CHECK_FALSE(antipode_power(q, 2) == LinearMap::identity(q.algebra));
    CHECK(antipode_power(q, 4) == LinearMap::identity(q.algebra));
    CHECK(adjoint_map(q.generators[0]) == antipode_power(q, 2));
  }

  TEST_CASE("dual algebras") {
    const auto sw = build_taft(2, 1);
    const auto d = dual_algebra(sw);
    CHECK(d->dim() == 4);
    CHECK(d->check_associativity());
    CHECK(d->check_unit());
    CHECK(jacobson_radical(*d).size() == 2);
    const auto aug = dual_augmentation(sw);
    for (int i = 0; i < d->dim(); ++i)
      for (int j = 0; j < d->dim(); ++j) {
        CycScalar lhs(d->level());
        for (const auto& [k, c] : d->product(i, j)) lhs += c * sparse_get(aug, k, d->level());
        CHECK(lhs == sparse_get(aug, i, d->level()) * sparse_get(aug, j, d->level()));
      }
    CHECK_THROWS_AS(dual_algebra(build_Aq(2, 1)), Error);
  }

  TEST_CASE("sub-Hopf algebras of the Taft algebra") {
    const auto q = build_taft(4, 1);
    const Element& g = q.generators[0];
    std::vector<Element> group;
    for (int i = 0; i < 4; ++i) group.push_back(g.pow(i));
    CHECK(verify_sub_quasihopf(q, group).ok);
    const auto sub = induced_datum(q, group);
    CHECK(sub.dim() == 4);
    CHECK(verify_axioms(sub).all_pass());
    const std::vector<Element> bad = {Element::unit(q.algebra, 1), q.generators[1]};
    const auto chk = verify_sub_quasihopf(q, bad);
    CHECK_FALSE(chk.ok);
    CHECK_FALSE(chk.failure.empty());
    CHECK_THROWS_AS(induced_datum(q, bad), Error);
  }

  TEST_CASE("isomorphism checks") {
    const auto a = build_taft(4, 1);
    const auto b = build_taft(4, 1);
    const auto same = verify_iso(a, b, {{a.generators[0], b.generators[0]}, {a.generators[1], b.generators[1]}});
    CHECK(same.ok);
    CHECK_FALSE(same.antipode_gauged);
    const auto c = build_taft(4, 3);
    CHECK_FALSE(verify_iso(a, c, {{a.generators[0], c.generators[0]}, {a.generators[1], c.generators[1]}}).ok);
  }
}
