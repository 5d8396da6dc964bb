#include <doctest.h>

#include <set>

#include "qhopf/catalog.hpp"
#include "qhopf/error.hpp"
#include "qhopf/hochschild.hpp"
#include "qhopf/linalg.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

SparseVec apply_columns(const std::vector<SparseVec>& cols, const SparseVec& v, int level) {
  Accumulator acc(level);
  for (const auto& [i, c] : v) acc.add_scaled(cols[i], c);
  return acc.finish();
}

// dimension of {z : z e_j = e_j z for all j}
std::size_t center_dim(const StructureAlgebra& a) {
  const int d = a.dim();
  DenseMatrix m(static_cast<std::size_t>(d) * d, d, a.level());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      for (const auto& [k, c] : a.product(i, j)) m.at(j * d + k, i) += c;
      for (const auto& [k, c] : a.product(j, i)) m.at(j * d + k, i) -= c;
    }
  return m.nullspace().size();
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// e11 ↦ 1, e12, e22 ↦ 0
SparseVec upper_triangular_augmentation() { return {{0, rat(1, 1)}}; }

}  // namespace

TEST_SUITE("hochschild") {
  TEST_CASE("bimodule checks") {
    const auto sw = build_taft(2, 1);
    CHECK(check_bimodule(*sw.algebra, self_bimodule(*sw.algebra)));
    CHECK(check_bimodule(*sw.algebra, trivial_bimodule(sw)));
    auto bad = self_bimodule(*sw.algebra);
    for (auto& v : bad.left)
      for (auto& [i, c] : v) c = c * Rational(2);
    std::string why;
    CHECK_FALSE(check_bimodule(*sw.algebra, bad, &why));
    CHECK_FALSE(why.empty());
    // ε(x) ≠ 0 is not multiplicative
    const auto tri = upper_triangular();
    CHECK_FALSE(check_bimodule(*tri, trivial_bimodule(*tri, {{0, rat(1, 1)}, {1, rat(1, 1)}})));
  }

  TEST_CASE("bar differentials square to zero") {
    const auto sw = build_taft(2, 1);
    const auto& a = *sw.algebra;
    const auto triv = trivial_bimodule(sw);
    const auto self = self_bimodule(a);
    for (const auto* m : {&triv, &self})
      for (const auto& aug : {std::optional<SparseVec>{}, std::optional<SparseVec>{counit_functional(sw)}}) {
        BarComplex bar(a, *m, aug);
        for (int k = 0; k <= 2; ++k) {
          const auto d0 = bar.differential(k);
          const auto d1 = bar.differential(k + 1);
          CHECK(d0.size() == bar.cochain_dim(k));
          CHECK(d1.size() == bar.cochain_dim(k + 1));
          for (const auto& col : d0) CHECK(apply_columns(d1, col, a.level()).empty());
        }
      }
  }

  TEST_CASE("Sweedler algebra with trivial coefficients") {
    const auto sw = build_taft(2, 1);
    const auto rep = cohomology_dims(*sw.algebra, trivial_bimodule(sw), 3, {}, counit_functional(sw));
    CHECK(rep.dims() == std::vector<std::int64_t>{1, 0, 1, 0});
    CHECK(rep.normalized);
    const auto unnorm = cohomology_dims(*sw.algebra, trivial_bimodule(sw), 3, {});
    CHECK_FALSE(unnorm.normalized);
    CHECK(unnorm.dims() == rep.dims());
  }

  TEST_CASE("semisimple and hereditary algebras") {
    const auto m2 = matrix_algebra(2);
    CHECK(cohomology_dims(*m2, self_bimodule(*m2), 2, {}).dims() == std::vector<std::int64_t>{1, 0, 0});
    const auto z3 = cyclic_group_algebra(3, 3);
    CHECK(cohomology_dims(*z3, self_bimodule(*z3), 2, {}).dims() == std::vector<std::int64_t>{3, 0, 0});
    const auto tri = upper_triangular();
    const auto aug = upper_triangular_augmentation();
    CHECK(cohomology_dims(*tri, trivial_bimodule(*tri, aug), 3, {}, aug).dims() ==
          std::vector<std::int64_t>{1, 0, 0, 0});
    CHECK(cohomology_dims(*tri, self_bimodule(*tri), 2, {}).dims() == std::vector<std::int64_t>{1, 0, 0});
  }

  TEST_CASE("degree zero with self coefficients is the center") {
    for (const auto& a : {build_taft(2, 1).algebra, build_taft(3, 1).algebra, build_Aq(2, 1).algebra,
                          matrix_algebra(2), upper_triangular(), cyclic_group_algebra(4, 4)}) {
      const auto rep = cohomology_dims(*a, self_bimodule(*a), 0, {});
      CHECK(rep.dims().at(0) == static_cast<std::int64_t>(center_dim(*a)));
    }
  }

  TEST_CASE("exact and modular ranks agree") {
    const auto sw = build_taft(2, 1);
    const auto t3 = build_taft(3, 1);
    const auto aq = build_Aq(2, 1);
    struct Job {
      AlgebraPtr a;
      Bimodule m;
      std::optional<SparseVec> aug;
      int kmax;
    };
    const std::vector<Job> jobs = {{sw.algebra, trivial_bimodule(sw), counit_functional(sw), 3},
                                   {sw.algebra, self_bimodule(*sw.algebra), std::nullopt, 2},
                                   {t3.algebra, trivial_bimodule(t3), counit_functional(t3), 3},
                                   {aq.algebra, trivial_bimodule(aq), counit_functional(aq), 2}};
    for (const auto& job : jobs) {
      const auto exact = cohomology_dims(*job.a, job.m, job.kmax, {}, job.aug);
      RankOptions opts;
      opts.mode = RankMode::Modular;
      opts.trials = 3;
      opts.seed = 11;
      const auto mod = cohomology_dims(*job.a, job.m, job.kmax, opts, job.aug);
      CHECK(mod.dims() == exact.dims());
      CHECK(mod.consensus);
      CHECK(mod.primes.size() == 3);
      CHECK(exact.rank_mode == "exact");
    }
  }

  TEST_CASE("prime selection") {
    const auto ps = select_primes(16, 5, 7);
    REQUIRE(ps.size() == 5);
    CHECK(std::set<std::uint64_t>(ps.begin(), ps.end()).size() == 5);
    for (auto p : ps) {
      CHECK(p > (1ull << 30));
      CHECK(p % 16 == 1);
      CHECK(is_prime(p));
      const auto z = root_of_unity_mod(p, 16);
      std::uint64_t w = 1;
      for (int k = 1; k <= 16; ++k) {
        w = static_cast<std::uint64_t>(static_cast<unsigned __int128>(w) * z % p);
        CHECK((w == 1) == (k == 16));
      }
    }
    CHECK(select_primes(16, 5, 7) == ps);
    CHECK(select_primes(9, 2, 0).size() == 2);
  }

  TEST_CASE("exact rank of cyclotomic columns") {
    // columns (1, ζ) and (ζ, ζ²) are dependent over Q(ζ₃)
    const int level = 3;
    const std::vector<SparseVec> cols = {{{0, rat(level, 1)}, {1, CycScalar::root(level, 1)}},
                                         {{0, CycScalar::root(level, 1)}, {1, CycScalar::root(level, 2)}},
                                         {{2, rat(level, 5)}}};
    CHECK(exact_rank(cols, level) == 2);
    const auto p = select_primes(3, 1, 0).front();
    CHECK(modular_rank(cols, p, root_of_unity_mod(p, 3)) == std::optional<std::uint64_t>(2));
  }
}
