#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qhopf/scalars.hpp"

namespace qhopf {

using Index = std::uint64_t;

/// Sparse vector: strictly increasing indices, no zero entries.
using SparseVec = std::vector<std::pair<Index, CycScalar>>;

/// Hash accumulator for building sparse vectors.
class Accumulator {
 public:
  explicit Accumulator(int level) : level_(level) {}

  void add(Index i, const CycScalar& c);
  void add_scaled(const SparseVec& v, const CycScalar& c);
  std::size_t size() const { return map_.size(); }
  SparseVec finish();

 private:
  int level_;
  std::unordered_map<Index, CycScalar> map_;
};

SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const SparseVec& a, const CycScalar& c);
/// a + c*b
SparseVec sparse_axpy(const SparseVec& a, const CycScalar& c, const SparseVec& b);
CycScalar sparse_get(const SparseVec& a, Index i, int level);

/// Incrementally built row-echelon basis of a subspace. Rows are kept fully
/// reduced against each other and normalized to leading coefficient 1. Each
/// row optionally records which inserted generators combine to it.
class EchelonBasis {
 public:
  explicit EchelonBasis(int level) : level_(level) {}

  /// Reduces v against the basis. Returns the residual; if `combo` is given it
  /// receives the coefficients c with v = residual + Σ c_j row_j.
  SparseVec reduce(SparseVec v, SparseVec* coords = nullptr) const;

  /// Inserts v; returns false if v already lies in the span.
  bool insert(const SparseVec& v);

  /// Inserts v tagged with generator id; dependent inputs yield their relation
  /// (coefficients over generator ids, with v itself included) in `relation`.
  bool insert_tagged(const SparseVec& v, Index tag, SparseVec* relation = nullptr);

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  int level() const { return level_; }

  /// Rows in order of increasing pivot.
  std::vector<SparseVec> rows() const;
  std::vector<Index> pivots() const;

  /// Expresses v (assumed in span) over the tagged generators.
  std::optional<SparseVec> express(const SparseVec& v) const;

 private:
  struct Row {
    SparseVec vec;
    SparseVec tags;  // combination of generator tags equal to vec
  };
  int level_;
  std::map<Index, Row> rows_;  // keyed by pivot
};

/// Dense matrix over a cyclotomic field.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, int level);

  CycScalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycScalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int level() const { return level_; }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of {x : M x = 0}.
  std::vector<std::vector<CycScalar>> nullspace() const;

 private:
  std::size_t rows_, cols_;
  int level_;
  std::vector<CycScalar> data_;
};

}  // namespace qhopf
