#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/algebra.hpp"

namespace qhopf {

/// Algebra with coproduct, counit, associator and antipode data (S, α, β).
struct QuasiHopfDatum {
  std::string name;
  AlgebraPtr algebra;
  LinearMap delta;    // A → A⊗A
  LinearMap counit;   // A → scalars (target arity 0)
  Element phi;        // arity 3
  Element phi_inv;    // arity 3
  LinearMap antipode; // A → A
  Element alpha;
  Element beta;
  /// Algebra generators, used for isomorphism checks and reporting.
  std::vector<Element> generators;

  int dim() const { return algebra->dim(); }
  int level() const { return algebra->level(); }
  Element coproduct(const Element& h) const { return delta.apply(h); }
  CycScalar epsilon(const Element& h) const;
  bool is_hopf() const;  // Φ = 1⊗1⊗1
};

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  std::optional<std::vector<Index>> witness;  // basis tuple of the first failure
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool all_pass() const;
  const AxiomResult* find(const std::string& axiom) const;
};

/// Axiom names in report order.
inline constexpr const char* kAxiomNames[] = {
    "phi_invertible",        "a_delta_algebra_map", "a_counit_algebra_map", "b_counit",
    "c_quasi_coassociative", "d_pentagon",          "e_phi_counit",         "f_antipode_alpha_beta",
    "g_antipode_phi",        "h_antipode_antimultiplicative"};

AxiomReport verify_axioms(const QuasiHopfDatum& q);

/// Drinfeld twist by an invertible counital J ∈ A⊗A.
QuasiHopfDatum twist(const QuasiHopfDatum& q, const Element& j);

/// S^k.
LinearMap antipode_power(const QuasiHopfDatum& q, int k);
/// f(z) = b z b^{-1} for every basis z.
bool is_inner(const LinearMap& f, const Element& b);
/// Conjugation z ↦ b z b^{-1} as a linear map.
LinearMap adjoint_map(const Element& b);

/// Algebra structure on A* dual to (Δ, ε); requires Φ = 1 and coassociativity.
AlgebraPtr dual_algebra(const QuasiHopfDatum& q);
/// Augmentation of A*: evaluation at 1_A.
SparseVec dual_augmentation(const QuasiHopfDatum& q);

struct SubCheck {
  bool ok = true;
  std::string failure;  // empty when ok
};

/// span(basis) contains 1, α, β and the components of Φ, Φ^{-1}, and is
/// closed under multiplication, Δ and S.
SubCheck verify_sub_quasihopf(const QuasiHopfDatum& q, const std::vector<Element>& basis);
/// Sub-quasi-bialgebra part only (unit, product, Δ, Φ).
SubCheck verify_sub_quasibialgebra(const QuasiHopfDatum& q, const std::vector<Element>& basis);
/// The quasi-Hopf datum carried by a closed span; throws NotClosed otherwise.
QuasiHopfDatum induced_datum(const QuasiHopfDatum& q, const std::vector<Element>& basis,
                             const std::string& name = "sub");

struct IsoCheck {
  bool ok = false;
  /// true when (S, α, β) matched only after the standard gauge
  /// (S, α, β) ↦ (Ad(u)∘S, uα, βu^{-1}).
  bool antipode_gauged = false;
  std::string failure;
  /// Image of every basis vector of the source.
  std::vector<SparseVec> basis_images;
};

/// Extends generator images (source element ↦ target element) multiplicatively
/// and checks the result is a quasi-Hopf isomorphism.
IsoCheck verify_iso(const QuasiHopfDatum& source, const QuasiHopfDatum& target,
                    const std::vector<std::pair<Element, Element>>& gen_map);

}  // namespace qhopf
