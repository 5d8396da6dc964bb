#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qhopf/quasihopf.hpp"

namespace qhopf {

/// Z_M-valued k-cochain on Z_N; values are exponents of ζ_M.
/// Arguments are flattened with the first one most significant.
class ExpCochain {
 public:
  ExpCochain(int n, int k, std::int64_t m);
  ExpCochain(int n, int k, std::int64_t m, std::vector<std::int64_t> values);

  int group_order() const { return n_; }
  int degree() const { return k_; }
  std::int64_t modulus() const { return m_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  std::int64_t operator()(const std::vector<int>& args) const;
  std::int64_t at(std::size_t flat) const { return values_[flat]; }
  void set(const std::vector<int>& args, std::int64_t v);
  std::vector<int> unflatten(std::size_t flat) const;
  std::size_t flatten(const std::vector<int>& args) const;

  bool is_zero() const;
  bool is_normalized() const;
  bool operator==(const ExpCochain& b) const = default;

 private:
  int n_, k_;
  std::int64_t m_;
  std::vector<std::int64_t> values_;
};

ExpCochain differential(const ExpCochain& c);

/// ω(i,j,k) = s·N·i·[j+k ≥ N] mod N², the standard generator family of H³(Z_N).
ExpCochain carry_cocycle(int n, std::int64_t s);
/// Exponent cocycle (M = n²) of the associator of A(q), q = ζ_{n²}^r.
ExpCochain assoc_cocycle_Aq(int n, int r);

ExpCochain inflate(const ExpCochain& c, int n_big);

/// c with dc = ω (normalized whenever ω is), or nullopt when the class of ω is nontrivial.
std::optional<ExpCochain> solve_coboundary(const ExpCochain& omega);

/// Σ ζ_M^{c(i₁,…,i_k)} e_{i₁}⊗…⊗e_{i_k} over the eigen-idempotents of a grouplike
/// of order N, with g·e_i = ζ_N^{root·i} e_i.
Element cochain_to_tensor(const ExpCochain& c, const QuasiHopfDatum& q, const Element& grouplike, int root = 1);

}  // namespace qhopf
