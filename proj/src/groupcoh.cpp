#include "qhopf/groupcoh.hpp"

#include <numeric>

#include "qhopf/catalog.hpp"
#include "qhopf/error.hpp"

namespace qhopf {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

ExpCochain::ExpCochain(int n, int k, std::int64_t m) : ExpCochain(n, k, m, std::vector<std::int64_t>(ipow(n, k), 0)) {}

ExpCochain::ExpCochain(int n, int k, std::int64_t m, std::vector<std::int64_t> values)
    : n_(n), k_(k), m_(m), values_(std::move(values)) {
  if (n < 1 || k < 0 || m < 1) throw Error(ErrorCode::BadParameter, "bad cochain shape");
  if (values_.size() != ipow(n, k)) throw Error(ErrorCode::DimensionMismatch, "cochain table has wrong size");
  for (auto& v : values_) v = reduce(v, m_);
}

std::size_t ExpCochain::flatten(const std::vector<int>& args) const {
  std::size_t f = 0;
  for (int a : args) f = f * n_ + static_cast<std::size_t>(reduce(a, n_));
  return f;
}

std::vector<int> ExpCochain::unflatten(std::size_t flat) const {
  std::vector<int> args(static_cast<std::size_t>(k_));
  for (int p = k_ - 1; p >= 0; --p) {
    args[p] = static_cast<int>(flat % n_);
    flat /= n_;
  }
  return args;
}

std::int64_t ExpCochain::operator()(const std::vector<int>& args) const { return values_[flatten(args)]; }

void ExpCochain::set(const std::vector<int>& args, std::int64_t v) { values_[flatten(args)] = reduce(v, m_); }

bool ExpCochain::is_zero() const {
  for (auto v : values_)
    if (v != 0) return false;
  return true;
}

bool ExpCochain::is_normalized() const {
  for (std::size_t f = 0; f < values_.size(); ++f) {
    auto args = unflatten(f);
    for (int a : args)
      if (a == 0 && values_[f] != 0) return false;
  }
  return true;
}

ExpCochain differential(const ExpCochain& c) {
  const int k = c.degree();
  ExpCochain out(c.group_order(), k + 1, c.modulus());
  std::vector<std::int64_t> vals(out.size());
  for (std::size_t f = 0; f < out.size(); ++f) {
    auto g = out.unflatten(f);
    std::int64_t v = c(std::vector<int>(g.begin() + 1, g.end()));
    for (int i = 1; i <= k; ++i) {
      std::vector<int> h;
      for (int j = 0; j < k + 1; ++j) {
        if (j == i) continue;
        h.push_back(j == i - 1 ? g[j] + g[j + 1] : g[j]);
      }
      v += (i % 2 ? -1 : 1) * c(h);
    }
    v += ((k + 1) % 2 ? -1 : 1) * c(std::vector<int>(g.begin(), g.end() - 1));
    vals[f] = v;
  }
  return ExpCochain(c.group_order(), k + 1, c.modulus(), std::move(vals));
}

ExpCochain carry_cocycle(int n, std::int64_t s) {
  ExpCochain out(n, 3, std::int64_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out.set({i, j, k}, s * n * i * (j + k >= n ? 1 : 0));
  return out;
}

ExpCochain assoc_cocycle_Aq(int n, int r) {
  if (std::gcd(r, n * n) != 1) throw Error(ErrorCode::NotPrimitive, "r must be coprime to n²");
  return carry_cocycle(n, -r);
}

ExpCochain inflate(const ExpCochain& c, int n_big) {
  if (n_big % c.group_order() != 0) throw Error(ErrorCode::NotDivisible, "target order not a multiple");
  ExpCochain out(n_big, c.degree(), c.modulus());
  std::vector<std::int64_t> vals(out.size());
  for (std::size_t f = 0; f < out.size(); ++f) vals[f] = c(out.unflatten(f));
  return ExpCochain(n_big, c.degree(), c.modulus(), std::move(vals));
}

namespace {

// Solves A x ≡ b (mod p^e) by elimination over the chain ring Z/p^e,
// always pivoting on an entry of least p-valuation.
std::optional<std::vector<std::int64_t>> solve_prime_power(std::vector<std::vector<std::int64_t>> a,
                                                           std::vector<std::int64_t> b, std::int64_t p,
                                                           std::int64_t pe) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  auto val = [&](std::int64_t v) {
    if (v == 0) return std::int64_t(-1);
    std::int64_t k = 0;
    while (v % p == 0) v /= p, ++k;
    return k;
  };
  auto inv = [&](std::int64_t u) {
    // unit inverse mod pe via extended Euclid
    std::int64_t t = 0, nt = 1, r = pe, nr = reduce(u, pe);
    while (nr) {
      std::int64_t qt = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - qt * nt);
      std::tie(r, nr) = std::make_pair(nr, r - qt * nr);
    }
    return reduce(t, pe);
  };
  auto mulmod = [&](std::int64_t x, std::int64_t y) {
    return static_cast<std::int64_t>((static_cast<__int128>(x) * y) % pe);
  };
  for (auto& row : a)
    for (auto& v : row) v = reduce(v, pe);
  for (auto& v : b) v = reduce(v, pe);

  std::vector<std::size_t> col_order(cols);
  std::iota(col_order.begin(), col_order.end(), 0);
  std::vector<std::int64_t> pivot_val;
  std::size_t rank = 0;
  for (; rank < std::min(rows, cols); ++rank) {
    std::int64_t best = -1;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = rank; r < rows; ++r)
      for (std::size_t c = rank; c < cols; ++c) {
        std::int64_t v = val(a[r][col_order[c]]);
        if (v >= 0 && (best < 0 || v < best)) best = v, br = r, bc = c;
      }
    if (best < 0) break;
    std::swap(a[rank], a[br]);
    std::swap(b[rank], b[br]);
    std::swap(col_order[rank], col_order[bc]);
    const std::size_t pc = col_order[rank];
    std::int64_t pk = 1;
    for (std::int64_t i = 0; i < best; ++i) pk *= p;
    const std::int64_t unit_inv = inv(a[rank][pc] / pk);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][pc] == 0) continue;
      std::int64_t factor = mulmod(a[r][pc] / pk, unit_inv);
      for (std::size_t c = 0; c < cols; ++c) a[r][c] = reduce(a[r][c] - mulmod(factor, a[rank][c]), pe);
      b[r] = reduce(b[r] - mulmod(factor, b[rank]), pe);
    }
    pivot_val.push_back(pk);
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  std::vector<std::int64_t> x(cols, 0);
  for (std::size_t i = rank; i-- > 0;) {
    const std::size_t pc = col_order[i];
    std::int64_t rhs = b[i];
    for (std::size_t j = i + 1; j < cols; ++j) rhs = reduce(rhs - mulmod(a[i][col_order[j]], x[col_order[j]]), pe);
    const std::int64_t pk = pivot_val[i];
    if (rhs % pk != 0) return std::nullopt;
    x[pc] = mulmod(rhs / pk, inv(a[i][pc] / pk)) % (pe / pk);
  }
  return x;
}

}  // namespace

std::optional<ExpCochain> solve_coboundary(const ExpCochain& omega) {
  if (omega.degree() != 3) throw Error(ErrorCode::BadParameter, "solve_coboundary expects a 3-cochain");
  if (!differential(omega).is_zero()) throw Error(ErrorCode::NotACocycle, "ω is not a 3-cocycle");
  const int n = omega.group_order();
  const std::int64_t m = omega.modulus();
  // unknowns c(i,j) with 1 ≤ i,j < n for normalized ω, all (i,j) otherwise
  const int lo = omega.is_normalized() ? 1 : 0;
  const int side = n - lo;
  const std::size_t unknowns = static_cast<std::size_t>(side) * side;
  const auto pair_of = [&](std::size_t u) {
    return std::vector<int>{static_cast<int>(u / side) + lo, static_cast<int>(u % side) + lo};
  };
  const std::size_t eqs = omega.size();
  std::vector<std::vector<std::int64_t>> a(eqs, std::vector<std::int64_t>(unknowns, 0));
  for (std::size_t u = 0; u < unknowns; ++u) {
    ExpCochain basis(n, 2, m);
    basis.set(pair_of(u), 1);
    ExpCochain d = differential(basis);
    for (std::size_t e = 0; e < eqs; ++e) a[e][u] = d.at(e);
  }
  // CRT over the prime-power factors of m
  std::vector<std::int64_t> x(unknowns, 0);
  std::int64_t done = 1, rest = m;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    std::int64_t pe = 1;
    while (rest % p == 0) rest /= p, pe *= p;
    auto part = solve_prime_power(a, omega.values(), p, pe);
    if (!part) return std::nullopt;
    for (std::size_t u = 0; u < unknowns; ++u) {
      // x ≡ x_old mod done, x ≡ part mod pe
      std::int64_t t = 0;
      while ((x[u] + done * t - (*part)[u]) % pe != 0) ++t;
      x[u] += done * t;
    }
    done *= pe;
  }
  ExpCochain c(n, 2, m);
  for (std::size_t u = 0; u < unknowns; ++u)
    c.set(pair_of(u), x[u]);
  if (differential(c) != omega) throw Error(ErrorCode::SolverFailed, "solver produced a wrong primitive");
  return c;
}

Element cochain_to_tensor(const ExpCochain& c, const QuasiHopfDatum& q, const Element& grouplike, int root) {
  const int n = c.group_order();
  const int level = q.level();
  if (level % n != 0 || level % c.modulus() != 0)
    throw Error(ErrorCode::OrderMismatch, "level not divisible by group order and modulus");
  const Element one = Element::unit(q.algebra, 1);
  Element p = grouplike;
  for (int k = 1; k < n; ++k, p = p * grouplike)
    if (p == one) throw Error(ErrorCode::OrderMismatch, "grouplike has smaller order");
  if (p != one) throw Error(ErrorCode::OrderMismatch, "grouplike order does not match");
  if (c.degree() == 0) return Element::scalar(q.algebra, 0, CycScalar::root(level, c.at(0) * (level / c.modulus())));
  auto idem = cyclic_idempotents(grouplike, n, std::int64_t(root) * (level / n));
  const std::int64_t scale = level / c.modulus();
  return idempotent_tensor(idem, c.degree(), [&](const std::vector<int>& v) { return scale * c(v); });
}

}  // namespace qhopf
