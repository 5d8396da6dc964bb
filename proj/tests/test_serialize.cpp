#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "qhopf/catalog.hpp"
#include "qhopf/error.hpp"
#include "qhopf/serialize.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

TEST_SUITE("serialize") {
  TEST_CASE("scalars round trip, including big rationals") {
    std::mt19937_64 rng(5);
    for (int level : {1, 4, 9, 12})
      for (int t = 0; t < 10; ++t) {
        const auto c = random_scalar(rng, level);
        CHECK(scalar_from_json(to_json(c), level) == c);
      }
    const CycScalar big = CycScalar(4, Rational::parse("123456789012345678901234567890/7"));
    const json j = to_json(big);
    CHECK(j["coeffs"][0][0].is_string());
    CHECK(scalar_from_json(j, 4) == big);
    // a rational scalar lifts to any level
    CHECK(scalar_from_json(json{{"level", 1}, {"coeffs", {{3, 2}}}}, 8) == rat(8, 3, 2));
    CHECK_THROWS_AS(scalar_from_json(json{{"level", "x"}}, 4), std::exception);
  }

  TEST_CASE("data round trip through JSON text") {
    for (const auto& spec : {"Aq:n=2,r=1", "H32", "taft:N=3,r=1", "cyclic:N=2,s=1"}) {
      INFO(spec);
      const auto q = parse_instance(spec);
      const auto back = datum_from_json(json::parse(to_json(q).dump()));
      CHECK(back.name == q.name);
      CHECK(back.dim() == q.dim());
      CHECK(back.delta == q.delta);
      CHECK(back.antipode == q.antipode);
      CHECK(tensor_to_json(back.phi) == tensor_to_json(q.phi));
      CHECK(tensor_to_json(back.alpha) == tensor_to_json(q.alpha));
      CHECK(to_json(*back.algebra) == to_json(*q.algebra));
      CHECK(verify_axioms(back).all_pass());
    }
  }

  TEST_CASE("algebra with a non-basis unit") {
    const auto a = upper_triangular();
    const json j = to_json(*a);
    CHECK(j["unit"].is_array());
    const auto back = algebra_from_json(j);
    CHECK(back->unit() == a->unit());
    CHECK(to_json(*back) == j);
  }

  TEST_CASE("reports carry the schema fields") {
    const auto rep = verify_axioms(build_taft(2, 1));
    const json j = to_json(rep);
    CHECK(j["all_pass"] == true);
    CHECK(j["axioms"].size() == rep.results.size());
    CHECK(j["axioms"][0].contains("witness"));
  }

  TEST_CASE("files and malformed input") {
    CHECK_THROWS_AS(read_json_file("/nonexistent/qhopf.json"), Error);
    const std::string path = "qhopf_serialize_test.json";
    {
      std::ofstream f(path);
      f << "{ not json";
    }
    try {
      read_json_file(path);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
    std::remove(path.c_str());
    CHECK_THROWS(datum_from_json(json{{"dim", 2}}));
  }
}
