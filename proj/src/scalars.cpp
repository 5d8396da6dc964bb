#include "qhopf/scalars.hpp"

#include <memory>
#include <numeric>
#include <unordered_map>

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

using IntPoly = std::vector<std::int64_t>;
using RatPoly = std::vector<Rational>;

// Exact division of integer polynomials; divisor must be monic.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const int dn = static_cast<int>(den.size()) - 1;
  const int nn = static_cast<int>(num.size()) - 1;
  IntPoly quot(nn - dn + 1, 0);
  for (int i = nn; i >= dn; --i) {
    std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

struct CycloData {
  int level = 1;
  int deg = 1;
  IntPoly phi;
  // xpow[e] = x^e mod Φ_N, for 0 <= e < max(2 deg, N + 1).
  std::vector<IntPoly> xpow;
};

std::shared_ptr<const CycloData> build_cyclo(int n) {
  auto data = std::make_shared<CycloData>();
  data->level = n;
  data->phi = cyclotomic_polynomial(n);
  data->deg = static_cast<int>(data->phi.size()) - 1;
  const int deg = data->deg;
  const int count = std::max(2 * deg, n + 1);
  IntPoly cur(deg, 0);
  cur[0] = 1;
  if (deg == 0) cur.assign(1, 0);
  for (int e = 0; e < count; ++e) {
    data->xpow.push_back(cur);
    // multiply by x
    IntPoly next(deg, 0);
    std::int64_t top = cur[deg - 1];
    for (int i = deg - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (int i = 0; i < deg; ++i) next[i] -= top * data->phi[i];
    cur = std::move(next);
  }
  return data;
}

const CycloData& cyclo(int n) {
  thread_local std::unordered_map<int, std::shared_ptr<const CycloData>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_cyclo(n)).first;
  return *it->second;
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder and quotient of rational polynomials.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational());
  const Rational lead = b.back();
  while (r.size() >= b.size() && !r.empty()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 acc = 1, base = b % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "cyclotomic level must be positive");
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = divide_monic(num, cyclotomic_polynomial(d));
  }
  return num;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CycScalar::CycScalar(int level) : level_(level) {
  if (level < 1) throw Error(ErrorCode::BadParameter, "cyclotomic level must be positive");
  coeffs_.assign(static_cast<std::size_t>(cyclo(level).deg), Rational());
}

CycScalar::CycScalar(int level, const Rational& value) : CycScalar(level) { coeffs_[0] = value; }

CycScalar::CycScalar(int level, Coeffs coeffs) : level_(level), coeffs_(std::move(coeffs)) {
  const auto& data = cyclo(level);
  if (static_cast<int>(coeffs_.size()) != data.deg) {
    // Accept any polynomial in ζ and reduce it.
    Coeffs reduced(static_cast<std::size_t>(data.deg));
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
      if (coeffs_[e].is_zero()) continue;
      const auto& row = data.xpow[e % static_cast<std::size_t>(level)];
      for (int i = 0; i < data.deg; ++i)
        if (row[i] != 0) reduced[i] += coeffs_[e] * Rational(row[i]);
    }
    coeffs_ = std::move(reduced);
  }
}

CycScalar CycScalar::root(int level, std::int64_t k) {
  const auto& data = cyclo(level);
  std::int64_t e = ((k % level) + level) % level;
  CycScalar out(level);
  const auto& row = data.xpow[static_cast<std::size_t>(e)];
  for (int i = 0; i < data.deg; ++i) out.coeffs_[i] = Rational(row[i]);
  return out;
}

CycScalar make_root(int level, std::int64_t k) { return CycScalar::root(level, k); }

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycScalar::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

void CycScalar::require_same_level(const CycScalar& b) const {
  if (level_ != b.level_)
    throw Error(ErrorCode::LevelMismatch,
                "levels " + std::to_string(level_) + " and " + std::to_string(b.level_));
}

CycScalar CycScalar::operator+(const CycScalar& b) const {
  CycScalar out = *this;
  out += b;
  return out;
}

CycScalar& CycScalar::operator+=(const CycScalar& b) {
  require_same_level(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!b.coeffs_[i].is_zero()) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& b) {
  require_same_level(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!b.coeffs_[i].is_zero()) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CycScalar CycScalar::operator-(const CycScalar& b) const {
  CycScalar out = *this;
  out -= b;
  return out;
}

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (auto& c : out.coeffs_)
    if (!c.is_zero()) c = -c;
  return out;
}

CycScalar CycScalar::operator*(const Rational& r) const {
  CycScalar out = *this;
  if (r.is_one()) return out;
  for (auto& c : out.coeffs_)
    if (!c.is_zero()) c = c * r;
  return out;
}

CycScalar CycScalar::operator*(const CycScalar& b) const {
  require_same_level(b);
  if (b.is_rational()) return *this * b.coeffs_[0];
  if (is_rational()) return b * coeffs_[0];
  const auto& data = cyclo(level_);
  const int deg = data.deg;
  boost::container::small_vector<Rational, 12> prod(static_cast<std::size_t>(2 * deg - 1));
  for (int i = 0; i < deg; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; j < deg; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      prod[i + j] += coeffs_[i] * b.coeffs_[j];
    }
  }
  CycScalar out(level_);
  for (int i = 0; i < deg; ++i) out.coeffs_[i] = prod[i];
  for (int e = deg; e < 2 * deg - 1; ++e) {
    if (prod[e].is_zero()) continue;
    const auto& row = data.xpow[e];
    for (int i = 0; i < deg; ++i)
      if (row[i] != 0) out.coeffs_[i] += prod[e] * Rational(row[i]);
  }
  return out;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero cyclotomic scalar");
  if (is_rational()) return CycScalar(level_, Rational(1) / coeffs_[0]);
  const auto& data = cyclo(level_);
  // Extended Euclid: find s with s*a + t*phi = 1.
  RatPoly r0(data.phi.begin(), data.phi.end());
  RatPoly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  RatPoly s0{}, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw Error(ErrorCode::DivisionByZero, "non-invertible residue");
  }
  Rational c = Rational(1) / r1[0];
  Coeffs out(s1.begin(), s1.end());
  for (auto& x : out) x = x * c;
  if (out.empty()) out.push_back(Rational());
  return CycScalar(level_, std::move(out));
}

CycScalar CycScalar::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  CycScalar acc(level_, Rational(1));
  CycScalar base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

CycScalar CycScalar::lift(int target_level) const {
  if (target_level < 1 || target_level % level_ != 0)
    throw Error(ErrorCode::NotDivisible, std::to_string(level_) + " does not divide " +
                                             std::to_string(target_level));
  if (target_level == level_) return *this;
  const int step = target_level / level_;
  CycScalar out(target_level);
  for (int i = 0; i < degree(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    out += CycScalar::root(target_level, static_cast<std::int64_t>(i) * step) * coeffs_[i];
  }
  return out;
}

CycScalar lift_level(const CycScalar& a, int target_level) { return a.lift(target_level); }

std::optional<std::uint64_t> CycScalar::mod(std::uint64_t p, std::uint64_t root_image) const {
  unsigned __int128 acc = 0;
  for (int i = 0; i < degree(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    auto c = coeffs_[i].mod(p);
    if (!c) return std::nullopt;
    acc = (acc + static_cast<unsigned __int128>(*c) * powmod(root_image, i, p)) % p;
  }
  return static_cast<std::uint64_t>(acc);
}

bool CycScalar::operator==(const CycScalar& b) const {
  if (level_ != b.level_) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!(coeffs_[i] == b.coeffs_[i])) return false;
  return true;
}

std::string CycScalar::to_string() const {
  std::string out;
  for (int i = 0; i < degree(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[i].to_string();
    if (i == 1) out += "*z" + std::to_string(level_);
    if (i > 1) out += "*z" + std::to_string(level_) + "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

int root_order(const CycScalar& a, int bound) {
  CycScalar acc = a;
  for (int k = 1; k <= bound; ++k) {
    if (acc.is_one()) return k;
    acc = acc * a;
  }
  return 0;
}

}  // namespace qhopf
