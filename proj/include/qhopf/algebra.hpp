#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhopf/linalg.hpp"
#include "qhopf/scalars.hpp"

namespace qhopf {

/// Finite-dimensional associative unital algebra over Q(ζ_N), given by
/// structure constants on a fixed basis e_0, ..., e_{dim-1}.
class StructureAlgebra {
 public:
  StructureAlgebra(int dim, int level, std::vector<SparseVec> mult, SparseVec unit,
                   std::optional<std::vector<int>> grading = std::nullopt,
                   std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  int level() const { return level_; }
  /// e_i e_j as a sparse vector.
  const SparseVec& product(Index i, Index j) const { return mult_[i * dim_ + j]; }
  const SparseVec& unit() const { return unit_; }
  const std::optional<std::vector<int>>& grading() const { return grading_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Index i) const;
  /// True when every basis product has at most one term.
  bool is_monomial() const { return monomial_; }

  SparseVec multiply(const SparseVec& u, const SparseVec& v) const;
  SparseVec basis_vector(Index i) const;

  /// (e_i e_j) e_k = e_i (e_j e_k) on all basis triples.
  bool check_associativity(std::array<Index, 3>* witness = nullptr) const;
  bool check_unit() const;
  /// Products of degree i and j land in degree i + j.
  bool respects_grading() const;

 private:
  int dim_;
  int level_;
  std::vector<SparseVec> mult_;
  SparseVec unit_;
  std::optional<std::vector<int>> grading_;
  std::vector<std::string> labels_;
  bool monomial_ = true;
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

/// Element of A^{⊗k}; coordinates are indexed lexicographically by
/// i_1 dim^{k-1} + ... + i_k. Arity 0 denotes scalars.
class Element {
 public:
  Element(AlgebraPtr parent, int arity);
  Element(AlgebraPtr parent, int arity, SparseVec coords);

  static Element unit(const AlgebraPtr& parent, int arity);
  static Element basis(const AlgebraPtr& parent, Index i);
  static Element scalar(const AlgebraPtr& parent, int arity, const CycScalar& c);

  const AlgebraPtr& parent() const { return parent_; }
  const StructureAlgebra& algebra() const { return *parent_; }
  int arity() const { return arity_; }
  int level() const { return parent_->level(); }
  const SparseVec& coords() const { return coords_; }
  std::size_t terms() const { return coords_.size(); }
  bool is_zero() const { return coords_.empty(); }
  CycScalar coefficient(Index flat) const;

  Element operator+(const Element& b) const;
  Element operator-(const Element& b) const;
  Element operator-() const;
  Element operator*(const CycScalar& c) const;
  Element operator*(const Element& b) const;
  bool operator==(const Element& b) const;
  bool operator!=(const Element& b) const { return !(*this == b); }

  Element pow(int k) const;
  std::string to_string() const;

 private:
  AlgebraPtr parent_;
  int arity_;
  SparseVec coords_;
};

Element multiply(const Element& u, const Element& v);
Element tensor_elem(const Element& u, const Element& v);
/// Two-sided inverse via the minimal polynomial of u; throws NotInvertible.
Element invert(const Element& u);

/// Linear map A^{⊗s} → A^{⊗t} stored by columns (images of basis tensors).
class LinearMap {
 public:
  LinearMap(AlgebraPtr parent, int source_arity, int target_arity, std::vector<SparseVec> columns);

  static LinearMap identity(const AlgebraPtr& parent);
  /// Map A → A determined by images of basis vectors.
  static LinearMap from_images(const AlgebraPtr& parent, const std::vector<Element>& images);

  const AlgebraPtr& parent() const { return parent_; }
  int source_arity() const { return source_arity_; }
  int target_arity() const { return target_arity_; }
  const SparseVec& column(Index i) const { return columns_[i]; }
  const std::vector<SparseVec>& columns() const { return columns_; }

  Element apply(const Element& u) const;
  Element image(Index i) const;
  bool operator==(const LinearMap& b) const;

 private:
  AlgebraPtr parent_;
  int source_arity_;
  int target_arity_;
  std::vector<SparseVec> columns_;
};

/// f ∘ g.
LinearMap compose(const LinearMap& f, const LinearMap& g);
/// Inverse of a bijective map A → A; throws NotInvertible.
LinearMap inverse_map(const LinearMap& f);
Element apply(const LinearMap& f, const Element& u);

/// Applies maps[p] (nullptr = identity) to tensor factor p of u. Each map has
/// source arity 1; the result arity is the sum of the target arities.
Element apply_factorwise(const Element& u, std::span<const LinearMap* const> maps);
Element apply_factorwise(const Element& u, std::initializer_list<const LinearMap*> maps);

/// A^{⊗k} as a structure-constant algebra (small dims only).
AlgebraPtr tensor_power(const AlgebraPtr& a, int k);

/// Basis of the Jacobson radical via the trace form (u, v) ↦ tr L_{uv}.
std::vector<SparseVec> jacobson_radical(const StructureAlgebra& a);

/// J^0 = A ⊇ J ⊇ J^2 ⊇ ... ending with the zero subspace. Bases are reduced
/// echelon rows.
std::vector<std::vector<SparseVec>> radical_filtration(const StructureAlgebra& a);

/// Associated graded algebra for the radical filtration. Basis vector b of gr A
/// corresponds to representatives[b] in A; grading records the filtration step.
struct GradedAlgebra {
  AlgebraPtr algebra;
  std::vector<SparseVec> representatives;
};
GradedAlgebra associated_graded(const StructureAlgebra& a);
/// For an algebra with its own grading: e_i ↦ class of e_i in gr_{deg i}.
/// Empty when some e_i does not lie in the filtration step of its degree.
std::optional<std::vector<SparseVec>> graded_comparison(const StructureAlgebra& a, const GradedAlgebra& gr);

bool is_two_sided_ideal(const StructureAlgebra& a, const std::vector<SparseVec>& basis);
/// A / I on the complement of the ideal's pivot positions.
AlgebraPtr quotient_algebra(const StructureAlgebra& a, const std::vector<SparseVec>& ideal);

/// Span of all products of basis vectors from x and y.
std::vector<SparseVec> product_space(const StructureAlgebra& a, const std::vector<SparseVec>& x,
                                     const std::vector<SparseVec>& y);

/// Checks that e_b ↦ images[b] (b a basis index of `source`) is a unital
/// algebra isomorphism source → target.
bool is_algebra_isomorphism(const StructureAlgebra& source, const StructureAlgebra& target,
                            const std::vector<SparseVec>& images);

/// Smallest subalgebra containing the given elements (as subspace basis).
std::vector<SparseVec> generated_subalgebra(const StructureAlgebra& a,
                                            const std::vector<SparseVec>& gens);

}  // namespace qhopf
