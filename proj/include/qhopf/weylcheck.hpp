#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhopf/rational.hpp"

namespace qhopf {

enum class RootType { A1, A1xA1, A2, B2, G2, A2xA1, A2xA2 };

RootType parse_root_type(const std::string& s);
std::string to_string(RootType t);

/// Roots in simple-root coordinates; the second simple root of B₂/G₂ is the short one.
struct RootSystemDatum {
  RootType type;
  int rank;
  std::vector<std::vector<Rational>> gram;  // (α_i, α_j)
  std::vector<std::vector<int>> cartan;     // ⟨α_i^∨, α_j⟩
  std::vector<std::vector<int>> positive_roots;
  std::vector<int> two_rho;
  std::vector<std::string> simple_names;
};

RootSystemDatum root_system(RootType t);

struct WeylElement {
  std::vector<int> word;  // reduced word in simple reflections, 1-based
  std::vector<int> matrix;  // row-major, acts on simple-root coordinates
  int length = 0;
};

std::vector<WeylElement> weyl_group(const RootSystemDatum& rs);
std::vector<int> apply(const WeylElement& w, const std::vector<int>& v, int rank);
WeylElement inverse(const WeylElement& w, int rank);
int inversion_count(const RootSystemDatum& rs, const WeylElement& w);

/// ρ − w(ρ).
std::vector<int> gamma(const RootSystemDatum& rs, const WeylElement& w);
/// Σ α over α > 0 with w⁻¹(α) < 0 (equals ρ − w(ρ)).
std::vector<int> gamma_by_roots(const RootSystemDatum& rs, const WeylElement& w);
/// Σ α over α > 0 with w(α) < 0 (equals ρ − w⁻¹(ρ)).
std::vector<int> gamma_inversions_of(const RootSystemDatum& rs, const WeylElement& w);

/// (m + n·d) mod p for γ_w = mα₁ + nα₂ (rank 1: m mod p).
std::int64_t lambda_exponent(const std::vector<int>& gamma_w, std::int64_t p, std::int64_t d);

std::vector<std::int64_t> valid_params(RootType t, std::int64_t p);
/// d+1 ≠ 0 (A₂), d+1, 2d+1 ≠ 0 (B₂), d+1, 3d+1 ≠ 0 (G₂) mod p.
bool side_facts_hold(RootType t, std::int64_t p, std::int64_t d);

struct VanishingRow {
  std::vector<int> word;
  int length;
  std::vector<int> gamma;
  std::int64_t exponent;
};

struct VanishingReport {
  RootType type;
  std::int64_t p, d;
  bool simple_reflections_ok = false;
  bool length3_ok = false;
  int length3_count = 0;
  std::vector<VanishingRow> rows;  // simple reflections and length-3 elements
  bool pass() const { return simple_reflections_ok && length3_ok; }
};

VanishingReport verify_vanishing(RootType t, std::int64_t p, std::int64_t d);

struct InvariantReport {
  int dimension = 0;
  std::vector<std::string> basis;  // invariant square-free cubic monomials
  std::vector<std::string> generators;
  std::vector<int> weights;  // Z₃-weight of each ε generator
};

/// Degree-3 Z₃-invariants of the quantum exterior algebra for the p = 3 cases
/// A2, A2xA1, A2xA2 (d = 1). ε_α has weight −Σ c_i m_i where α = Σ m_i α_i and
/// c_i is the exponent of a in the coproduct of the i-th generator (1, d, −f, …).
InvariantReport p3_invariants(RootType t, int f);

/// −(α₁+α₂) differs mod 3 from every w(ρ) − ρ.
bool spectral_kill_check(RootType t);

}  // namespace qhopf
