#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/quasihopf.hpp"

namespace qhopf {

/// left[i·dim + m] = e_i·m_m, right[m·A.dim + i] = m_m·e_i.
struct Bimodule {
  int dim = 0;
  int level = 1;
  std::vector<SparseVec> left;
  std::vector<SparseVec> right;
};

bool check_bimodule(const StructureAlgebra& a, const Bimodule& m, std::string* failure = nullptr);

/// One-dimensional module with both actions given by the augmentation ε (values on the basis).
Bimodule trivial_bimodule(const StructureAlgebra& a, const SparseVec& augmentation);
Bimodule trivial_bimodule(const QuasiHopfDatum& q);
Bimodule self_bimodule(const StructureAlgebra& a);

/// Counit of a datum as a functional on the basis.
SparseVec counit_functional(const QuasiHopfDatum& q);

enum class RankMode { Exact, Modular };

struct RankOptions {
  RankMode mode = RankMode::Exact;
  int trials = 5;
  std::uint64_t seed = 0;
};

/// Seed from QHOPF_PRIME_SEED, 0 when unset.
std::uint64_t prime_seed_from_env();
/// `count` primes p > 2³⁰ with p ≡ 1 (mod modulus), chosen deterministically from the seed.
std::vector<std::uint64_t> select_primes(std::uint64_t modulus, int count, std::uint64_t seed);

/// Differential C^k → C^{k+1} as columns; C^k = Hom(Ā^{⊗k}, M) (or A^{⊗k} when unaugmented),
/// index t·dim M + m for a tuple t flattened with the first factor most significant.
struct BarComplex {
  BarComplex(const StructureAlgebra& a, const Bimodule& m, std::optional<SparseVec> augmentation);

  std::uint64_t cochain_dim(int k) const;
  std::vector<SparseVec> differential(int k) const;
  int base_dim() const { return static_cast<int>(bar_.size()); }

  // internals shared with the modular path
  struct Pre {
    Index a, b;
    CycScalar coef;
  };
  const StructureAlgebra& algebra;
  const Bimodule& module;
  std::vector<SparseVec> bar_;              // basis of Ā in A-coordinates
  std::vector<std::vector<Pre>> pre_;       // pre_[c]: coordinate of ā_c in ā_a ā_b
  std::vector<std::vector<SparseVec>> left_, right_;  // ā_s·m, m·ā_s
};

struct DegreeInfo {
  int k = 0;
  std::uint64_t cochain_dim = 0;
  std::uint64_t rank_in = 0;   // rank d^{k-1}
  std::uint64_t rank_out = 0;  // rank d^k
  std::int64_t dim = 0;
};

struct CohomologyReport {
  std::vector<DegreeInfo> degrees;
  std::string rank_mode;
  bool normalized = false;
  std::vector<std::uint64_t> primes;
  bool consensus = true;  // all primes agreed (modular mode)
  std::vector<std::int64_t> dims() const;
};

CohomologyReport cohomology_dims(const StructureAlgebra& a, const Bimodule& m, int kmax, const RankOptions& opts,
                                 std::optional<SparseVec> augmentation = std::nullopt);

/// Rank of columns over Q(ζ) exactly, or over F_p under ζ ↦ root.
std::uint64_t exact_rank(const std::vector<SparseVec>& columns, int level);
std::optional<std::uint64_t> modular_rank(const std::vector<SparseVec>& columns, std::uint64_t p,
                                          std::uint64_t root);
/// A primitive N-th root of unity mod p (p ≡ 1 mod N).
std::uint64_t root_of_unity_mod(std::uint64_t p, std::uint64_t n);

}  // namespace qhopf
