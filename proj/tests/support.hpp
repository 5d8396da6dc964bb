#pragma once

#include <random>
#include <vector>

#include "qhopf/algebra.hpp"

namespace qhopf::testing {

inline CycScalar rat(int level, std::int64_t n, std::int64_t d = 1) { return CycScalar(level, Rational(n, d)); }

/// Random element of Q(ζ_N) with small integer coefficients on 1, ζ, …, ζ^{N-1}.
inline CycScalar random_scalar(std::mt19937_64& rng, int level, int bound = 3) {
  CycScalar out(level);
  std::uniform_int_distribution<int> coef(-bound, bound);
  for (int k = 0; k < level; ++k) out += CycScalar::root(level, k) * Rational(coef(rng));
  return out;
}

inline Element random_element(std::mt19937_64& rng, const AlgebraPtr& a, int arity = 1) {
  SparseVec v;
  Index size = 1;
  for (int t = 0; t < arity; ++t) size *= a->dim();
  std::uniform_int_distribution<int> keep(0, 2);
  for (Index i = 0; i < size; ++i) {
    if (keep(rng) != 0) continue;
    CycScalar c = random_scalar(rng, a->level(), 2);
    if (!c.is_zero()) v.emplace_back(i, c);
  }
  return Element(a, arity, v);
}

/// Group algebra of Z_n over Q(ζ_level), basis g^i.
inline AlgebraPtr cyclic_group_algebra(int n, int level) {
  std::vector<SparseVec> mult(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult[i * n + j] = {{static_cast<Index>((i + j) % n), rat(level, 1)}};
  return std::make_shared<const StructureAlgebra>(n, level, std::move(mult), SparseVec{{0, rat(level, 1)}});
}

/// 2×2 upper triangular matrices: e11, e12, e22.
inline AlgebraPtr upper_triangular() {
  std::vector<SparseVec> mult(9);
  auto one = rat(1, 1);
  mult[0 * 3 + 0] = {{0, one}};
  mult[0 * 3 + 1] = {{1, one}};
  mult[1 * 3 + 2] = {{1, one}};
  mult[2 * 3 + 2] = {{2, one}};
  return std::make_shared<const StructureAlgebra>(3, 1, std::move(mult), SparseVec{{0, one}, {2, one}});
}

/// Full matrix algebra M_n, basis E_ij at index i·n + j.
inline AlgebraPtr matrix_algebra(int n) {
  const int dim = n * n;
  std::vector<SparseVec> mult(dim * dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) mult[(i * n + j) * dim + (j * n + l)] = {{static_cast<Index>(i * n + l), rat(1, 1)}};
  SparseVec unit;
  for (int i = 0; i < n; ++i) unit.emplace_back(i * n + i, rat(1, 1));
  return std::make_shared<const StructureAlgebra>(dim, 1, std::move(mult), unit);
}

}  // namespace qhopf::testing
