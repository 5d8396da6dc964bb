#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qhopf/groupcoh.hpp"
#include "qhopf/quasihopf.hpp"

namespace qhopf {

/// H with an automorphism g, a twist K and an element a with gⁿ = Ad(a).
struct SemidirectInput {
  QuasiHopfDatum h;
  LinearMap g;
  Element k;  // arity 2
  int n;
  Element a;
};

/// S² as g, K = 1⊗1, a the grouplike generator, n from the instance.
SemidirectInput standard_input(const QuasiHopfDatum& h, int n);

struct CompatReport {
  bool g_algebra_map = false;
  bool delta_twisted = false;  // (g⊗g)∘Δ∘g⁻¹ = KΔK⁻¹
  bool phi_twisted = false;    // g^{⊗3}(Φ) = Φ^K
  bool k_counital = false;
  std::string failure;
  bool pass() const { return g_algebra_map && delta_twisted && phi_twisted && k_counital; }
};

CompatReport check_compat(const SemidirectInput& inp);
/// Throws PowerNotInner unless gⁿ = Ad(a).
bool check_power_condition(const SemidirectInput& inp);

/// Sums of X·(g^{e₁}⊗…⊗g^{e_k}) in the unquotiented product C[g,g⁻¹]⋉H.
class LaurentTensor {
 public:
  LaurentTensor(const SemidirectInput& inp, int arity);
  LaurentTensor(const SemidirectInput& inp, const Element& x, std::vector<int> exps = {});

  static LaurentTensor g_power(const SemidirectInput& inp, int e);

  int arity() const { return arity_; }
  LaurentTensor operator+(const LaurentTensor& b) const;
  LaurentTensor operator-(const LaurentTensor& b) const;
  LaurentTensor operator*(const LaurentTensor& b) const;
  bool operator==(const LaurentTensor& b) const;

  /// Coproduct applied at tensor position p (Δ(g) = K⁻¹(g⊗g)).
  LaurentTensor coproduct_at(int p) const;
  LaurentTensor tensor(const LaurentTensor& b) const;

 private:
  const SemidirectInput* inp_;
  int arity_;
  std::map<std::vector<int>, Element> terms_;
  void add_term(const std::vector<int>& e, const Element& x);
};

/// (Δ⊗id)Δ(g) = Φ⁻¹(id⊗Δ)Δ(g)Φ in the unquotiented product.
bool check_quasi_coassociative_g(const SemidirectInput& inp);
/// Δ(gⁿ − a) = Δ(a)(a⁻¹(gⁿ−a)⊗a⁻¹gⁿ + 1⊗a⁻¹(gⁿ−a)), exhibiting Δ(gⁿ−a) in the ideal.
bool check_power_ideal(const SemidirectInput& inp);

/// (C[g,g⁻¹]⋉H)/⟨gⁿ−a⟩ with basis g^i·e_k (i < n), index i·dim(H) + k.
/// Generators: g followed by the generators of H.
QuasiHopfDatum build_semidirect(const SemidirectInput& inp);

struct UntwistResult {
  ExpCochain omega;  // associator cocycle read off on C[g]
  ExpCochain c;      // dc = ω
  Element j;         // H̃ = H₀^J
  QuasiHopfDatum h0; // H̃^{J⁻¹}, Φ = 1
};

/// g a grouplike of H̃ with Φ supported on C[g]^{⊗3}.
UntwistResult untwist_to_hopf(const QuasiHopfDatum& ht, const Element& g);

/// Skew-primitive normal form: Δ(x) = x⊗g^u + g^v⊗x.
struct SkewPrimitive {
  int u = 0, v = 0;
};
std::optional<SkewPrimitive> skew_primitive_type(const QuasiHopfDatum& q, const Element& x, const Element& g, int order);

/// A skew-primitive x·c(g) with c(g) ∈ C[g] invertible, normalized so that
/// Δ(x') = x'⊗g^u + 1⊗x' (v = 0).
struct SkewPrimitiveLift {
  Element x;
  SkewPrimitive type;
};
std::optional<SkewPrimitiveLift> find_skew_primitive(const QuasiHopfDatum& q, const Element& x, const Element& g,
                                                    int order);

struct Identification {
  QuasiHopfDatum model;
  std::vector<std::pair<Element, Element>> gen_map;  // model generator ↦ element of H₀
  IsoCheck iso;
};
/// H₀ ≅ Taft(N, r′): G = g^u, X = the normalized skew-primitive lift of x.
Identification identify_taft(const QuasiHopfDatum& h0, const Element& g, const Element& x);
/// H₀ ≅ book64 with g₊, x₊, x₋ found from lifts of x and y.
Identification identify_book64(const QuasiHopfDatum& h0, const Element& g, const Element& x, const Element& y);

struct Recovery {
  SubCheck sub;  // span{g^{ni} x^j} inside H₀^J
  IsoCheck iso;  // induced datum ≅ A(q)
};
/// H₀^J restricted to span{g^{ni} x^j} against build_Aq(n, r).
Recovery recover_Aq(const UntwistResult& u, const Element& g, const Element& x, int n, int r);

/// η: A₀ → ambient given by basis images, with twist J on the ambient.
struct GaugePair {
  std::vector<SparseVec> eta;
  Element j;
};

struct GaugeMove {
  int kind;  // 1: η∘ξ, 2: (Ad(h)∘η, (h⊗h)JΔ(h)⁻¹), 3: (η, TJ)
  std::variant<LinearMap, Element> payload;
};

/// η injective and η(A₀) a sub-quasi-bialgebra of ambient^J.
SubCheck in_E(const GaugePair& pair, const QuasiHopfDatum& ambient);
GaugePair gauge_apply(const GaugePair& pair, const GaugeMove& move, const QuasiHopfDatum& ambient);

}  // namespace qhopf
