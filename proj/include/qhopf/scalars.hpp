#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhopf/rational.hpp"

namespace qhopf {

/// Integer coefficients (low degree first) of the N-th cyclotomic polynomial.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

/// Euler phi, which is the degree of the N-th cyclotomic polynomial.
int euler_phi(int n);

/// Element of Q(ζ_N), stored as its canonical residue modulo Φ_N: a vector of
/// deg(Φ_N) rationals, coefficient i multiplying ζ_N^i.
class CycScalar {
 public:
  using Coeffs = boost::container::small_vector<Rational, 6>;

  CycScalar() : CycScalar(1) {}
  explicit CycScalar(int level);
  CycScalar(int level, const Rational& value);
  CycScalar(int level, Coeffs coeffs);

  /// ζ_N^k.
  static CycScalar root(int level, std::int64_t k);

  int level() const { return level_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const Coeffs& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CycScalar operator+(const CycScalar& b) const;
  CycScalar operator-(const CycScalar& b) const;
  CycScalar operator*(const CycScalar& b) const;
  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& b);
  CycScalar& operator-=(const CycScalar& b);
  CycScalar& operator*=(const CycScalar& b) { return *this = *this * b; }
  CycScalar operator*(const Rational& r) const;

  CycScalar inverse() const;
  CycScalar operator/(const CycScalar& b) const { return *this * b.inverse(); }
  CycScalar pow(std::int64_t k) const;

  /// Image under ζ_N ↦ ζ_M^{M/N}; requires N | M.
  CycScalar lift(int target_level) const;

  /// Image in F_p under ζ_N ↦ root_image (a primitive N-th root mod p).
  std::optional<std::uint64_t> mod(std::uint64_t p, std::uint64_t root_image) const;

  bool operator==(const CycScalar& b) const;
  bool operator!=(const CycScalar& b) const { return !(*this == b); }

  std::string to_string() const;

 private:
  void require_same_level(const CycScalar& b) const;

  int level_;
  Coeffs coeffs_;
};

/// Free-function spellings of the scalar operations.
CycScalar make_root(int level, std::int64_t k);
CycScalar lift_level(const CycScalar& a, int target_level);

/// Multiplicative order of a root of unity; 0 if a is not one of order <= bound.
int root_order(const CycScalar& a, int bound);

}  // namespace qhopf
