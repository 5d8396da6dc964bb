#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qhopf/groupcoh.hpp"
#include "qhopf/quasihopf.hpp"

namespace qhopf {

/// Basis a^e x₁^{k₁}…x_r^{k_r} with a^{a_order} = 1, x_i^{nil_orders[i]} = 0,
/// a x_i a⁻¹ = ζ^{conj[i]} x_i and x_j x_i = ζ^{swap[i][j]} x_i x_j for i < j.
struct SkewMonomialPresentation {
  int level = 1;
  int a_order = 1;
  std::vector<int> nil_orders;
  std::vector<std::int64_t> conj;
  std::vector<std::vector<std::int64_t>> swap;
  std::vector<std::string> names;  // a, x₁, …

  std::size_t dim() const;
  Index index(int e, const std::vector<int>& k) const;
  void decompose(Index i, int& e, std::vector<int>& k) const;
};

AlgebraPtr skew_monomial_algebra(const SkewMonomialPresentation& p);

/// ζ_level^k as a scalar element of the given arity.
Element root_element(const AlgebraPtr& a, int arity, std::int64_t k);

/// e_i = (1/N) Σ_j ζ^{-λ·i·j} g^j, so that g e_i = ζ^{λ i} e_i (ζ = ζ_level).
std::vector<Element> cyclic_idempotents(const Element& g, int order, std::int64_t lambda);

/// Σ ζ^{exponent(i₁…i_k)} e_{i₁}⊗…⊗e_{i_k}.
Element idempotent_tensor(const std::vector<Element>& idems, int arity,
                          const std::function<std::int64_t(const std::vector<int>&)>& exponent);

/// Extends images of a, x₁, … to an (anti-)multiplicative map on the monomial basis.
LinearMap extend_on_monomials(const SkewMonomialPresentation& p, const AlgebraPtr& a,
                              const std::vector<Element>& gen_images, int target_arity, bool anti);

QuasiHopfDatum build_Aq(int n, int r);
QuasiHopfDatum build_H32();
QuasiHopfDatum build_taft(int n, int r);
QuasiHopfDatum build_book(int p, int r, int m);
QuasiHopfDatum build_book64();
QuasiHopfDatum build_cyclic_cocycle(int n, const ExpCochain& omega);

/// "Aq:n=2,r=1", "H32", "taft:N=4,r=1", "book:p=3,r=1,m=1", "book64", "cyclic:N=2,s=1".
QuasiHopfDatum parse_instance(const std::string& spec);
std::vector<std::string> list_instances();

}  // namespace qhopf
