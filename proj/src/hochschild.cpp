#include "qhopf/hochschild.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <unordered_map>

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

using ModVec = std::vector<std::pair<Index, std::uint64_t>>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) d /= 2, ++s;
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

CycScalar one(int level) { return CycScalar(level, Rational(1)); }

}  // namespace

bool check_bimodule(const StructureAlgebra& a, const Bimodule& m, std::string* failure) {
  const Index da = static_cast<Index>(a.dim()), dm = static_cast<Index>(m.dim);
  auto fail = [&](const std::string& s) {
    if (failure) *failure = s;
    return false;
  };
  auto act_left = [&](const SparseVec& av, const SparseVec& mv) {
    Accumulator acc(m.level);
    for (const auto& [i, c] : av)
      for (const auto& [j, d] : mv) acc.add_scaled(m.left[i * dm + j], c * d);
    return acc.finish();
  };
  auto act_right = [&](const SparseVec& mv, const SparseVec& av) {
    Accumulator acc(m.level);
    for (const auto& [j, d] : mv)
      for (const auto& [i, c] : av) acc.add_scaled(m.right[j * da + i], c * d);
    return acc.finish();
  };
  for (Index j = 0; j < dm; ++j) {
    SparseVec mj{{j, one(m.level)}};
    if (act_left(a.unit(), mj) != mj || act_right(mj, a.unit()) != mj) return fail("unit does not act as identity");
    for (Index x = 0; x < da; ++x)
      for (Index y = 0; y < da; ++y) {
        const SparseVec ex = a.basis_vector(x), ey = a.basis_vector(y);
        if (act_left(a.product(x, y), mj) != act_left(ex, act_left(ey, mj))) return fail("left action not associative");
        if (act_right(mj, a.product(x, y)) != act_right(act_right(mj, ex), ey))
          return fail("right action not associative");
        if (act_right(act_left(ex, mj), ey) != act_left(ex, act_right(mj, ey))) return fail("actions do not commute");
      }
  }
  return true;
}

Bimodule trivial_bimodule(const StructureAlgebra& a, const SparseVec& augmentation) {
  Bimodule m{1, a.level(), std::vector<SparseVec>(a.dim()), std::vector<SparseVec>(a.dim())};
  for (const auto& [i, c] : augmentation) {
    m.left[i] = {{0, c}};
    m.right[i] = {{0, c}};
  }
  return m;
}

SparseVec counit_functional(const QuasiHopfDatum& q) {
  SparseVec out;
  for (Index i = 0; i < static_cast<Index>(q.dim()); ++i) {
    const auto& col = q.counit.column(i);
    if (!col.empty()) out.emplace_back(i, col.front().second);
  }
  return out;
}

Bimodule trivial_bimodule(const QuasiHopfDatum& q) { return trivial_bimodule(*q.algebra, counit_functional(q)); }

Bimodule self_bimodule(const StructureAlgebra& a) {
  const Index d = static_cast<Index>(a.dim());
  Bimodule m{a.dim(), a.level(), std::vector<SparseVec>(d * d), std::vector<SparseVec>(d * d)};
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      m.left[i * d + j] = a.product(i, j);
      m.right[j * d + i] = a.product(j, i);
    }
  return m;
}

std::uint64_t prime_seed_from_env() {
  const char* s = std::getenv("QHOPF_PRIME_SEED");
  if (!s || !*s) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw Error(ErrorCode::ParseError, "QHOPF_PRIME_SEED must be a non-negative integer");
  return v;
}

std::vector<std::uint64_t> select_primes(std::uint64_t modulus, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t lo = 1ULL << 30, span = 1ULL << 30;
  std::uint64_t start = lo + rng() % span;
  start = start - start % modulus + 1;
  if (start <= lo) start += modulus;
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = start; static_cast<int>(out.size()) < count; p += modulus) {
    if (p >= (1ULL << 62)) throw Error(ErrorCode::NoSuitablePrime, "prime search overflow");
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::uint64_t root_of_unity_mod(std::uint64_t p, std::uint64_t n) {
  if ((p - 1) % n != 0) throw Error(ErrorCode::NoSuitablePrime, "p is not 1 mod N");
  std::vector<std::uint64_t> factors;
  std::uint64_t m = n;
  for (std::uint64_t f = 2; f * f <= m; ++f)
    if (m % f == 0) {
      factors.push_back(f);
      while (m % f == 0) m /= f;
    }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t x = 2; x < p; ++x) {
    std::uint64_t r = powmod(x, (p - 1) / n, p);
    bool primitive = r != 0;
    for (std::uint64_t f : factors) primitive = primitive && powmod(r, n / f, p) != 1;
    if (primitive) return r;
  }
  throw Error(ErrorCode::NoSuitablePrime, "no primitive root found");
}

BarComplex::BarComplex(const StructureAlgebra& a, const Bimodule& m, std::optional<SparseVec> augmentation)
    : algebra(a), module(m) {
  const Index da = static_cast<Index>(a.dim());
  const int level = a.level();
  std::optional<Index> pivot;
  CycScalar pivot_val(level);
  if (augmentation) {
    for (const auto& [i, c] : *augmentation)
      if (!c.is_zero()) {
        pivot = i;
        pivot_val = c;
        break;
      }
    if (!pivot) throw Error(ErrorCode::BadParameter, "augmentation is zero");
  }
  // ā_i = e_i − (ε_i/ε_p) e_p; coordinates on Ā are A-coordinates with index p dropped
  std::vector<Index> to_bar(da, ~Index{0});
  for (Index i = 0; i < da; ++i) {
    if (pivot && i == *pivot) continue;
    to_bar[i] = bar_.size();
    SparseVec v{{i, one(level)}};
    if (pivot) {
      CycScalar e = sparse_get(*augmentation, i, level);
      if (!e.is_zero()) v = sparse_axpy(v, -(e * pivot_val.inverse()), a.basis_vector(*pivot));
    }
    bar_.push_back(std::move(v));
  }
  const Index nb = bar_.size();
  auto coords = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v)
      if (to_bar[i] != ~Index{0}) out.emplace_back(to_bar[i], c);
    return out;
  };
  pre_.assign(nb, {});
  for (Index x = 0; x < nb; ++x)
    for (Index y = 0; y < nb; ++y)
      for (const auto& [c, v] : coords(a.multiply(bar_[x], bar_[y]))) pre_[c].push_back(Pre{x, y, v});
  const Index dm = static_cast<Index>(m.dim);
  left_.assign(nb, std::vector<SparseVec>(dm));
  right_.assign(nb, std::vector<SparseVec>(dm));
  for (Index s = 0; s < nb; ++s)
    for (Index j = 0; j < dm; ++j) {
      Accumulator l(level), r(level);
      for (const auto& [i, c] : bar_[s]) {
        l.add_scaled(m.left[i * dm + j], c);
        r.add_scaled(m.right[j * da + i], c);
      }
      left_[s][j] = l.finish();
      right_[s][j] = r.finish();
    }
}

std::uint64_t BarComplex::cochain_dim(int k) const { return ipow(bar_.size(), k) * module.dim; }

namespace {

// Column of d^k for the cochain supported at (tuple t, module index m), with scalars
// converted by `conv` (exact or mod p) and accumulated in `acc`.
template <class Acc, class Conv>
void column(const BarComplex& b, int k, Index t, Index m, Acc& acc, const Conv& conv) {
  const Index nb = b.bar_.size(), dm = b.module.dim;
  const Index block = ipow(nb, k);
  for (Index s = 0; s < nb; ++s) {
    for (const auto& [j, c] : b.left_[s][m]) acc.add((s * block + t) * dm + j, conv(c, 1));
    for (const auto& [j, c] : b.right_[s][m]) acc.add((t * nb + s) * dm + j, conv(c, (k + 1) % 2 ? -1 : 1));
  }
  if (k == 0) {
    return;
  }
  std::vector<Index> digits(k);
  Index f = t;
  for (int p = k - 1; p >= 0; --p) digits[p] = f % nb, f /= nb;
  for (int i = 1; i <= k; ++i) {
    // s = (t₁…t_{i−1}, a, b, t_{i+1}…t_k)
    Index prefix = 0, suffix = 0, suffix_w = 1;
    for (int p = 0; p < i - 1; ++p) prefix = prefix * nb + digits[p];
    for (int p = k - 1; p >= i; --p) suffix += digits[p] * suffix_w, suffix_w *= nb;
    for (const auto& pr : b.pre_[digits[i - 1]]) {
      Index s = ((prefix * nb + pr.a) * nb + pr.b) * suffix_w + suffix;
      acc.add(s * dm + m, conv(pr.coef, i % 2 ? -1 : 1));
    }
  }
}

struct ModAccumulator {
  std::uint64_t p;
  std::unordered_map<Index, std::uint64_t> map;
  void add(Index i, std::uint64_t v) {
    if (v == 0) return;
    auto& x = map[i];
    x = (x + v) % p;
  }
  ModVec finish() {
    ModVec out;
    for (const auto& [i, v] : map)
      if (v) out.emplace_back(i, v);
    std::sort(out.begin(), out.end());
    map.clear();
    return out;
  }
};

class ModEchelon {
 public:
  explicit ModEchelon(std::uint64_t p) : p_(p) {}
  bool insert(ModVec v) {
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) {
        const std::uint64_t inv = powmod(v.front().second, p_ - 2, p_);
        for (auto& [i, x] : v) x = mulmod(x, inv, p_);
        rows_.emplace(v.front().first, std::move(v));
        return true;
      }
      const std::uint64_t f = p_ - v.front().second;
      ModVec out;
      out.reserve(v.size() + it->second.size());
      std::size_t a = 1, b = 1;
      const ModVec& r = it->second;
      while (a < v.size() || b < r.size()) {
        if (b == r.size() || (a < v.size() && v[a].first < r[b].first)) out.push_back(v[a++]);
        else if (a == v.size() || r[b].first < v[a].first) {
          out.emplace_back(r[b].first, mulmod(f, r[b].second, p_));
          ++b;
        } else {
          std::uint64_t x = (v[a].second + mulmod(f, r[b].second, p_)) % p_;
          if (x) out.emplace_back(v[a].first, x);
          ++a, ++b;
        }
      }
      v = std::move(out);
    }
    return false;
  }
  std::uint64_t rank() const { return rows_.size(); }

 private:
  std::uint64_t p_;
  std::unordered_map<Index, ModVec> rows_;
};

struct Converter {
  std::uint64_t p, root;
  std::uint64_t operator()(const CycScalar& c, int sign) const {
    auto v = c.mod(p, root);
    if (!v) throw Error(ErrorCode::NoSuitablePrime, "denominator vanishes mod p");
    return sign < 0 ? (*v ? p - *v : 0) : *v;
  }
};

std::uint64_t modular_rank_of(const BarComplex& b, int k, std::uint64_t p, std::uint64_t root) {
  Converter conv{p, root};
  ModAccumulator acc{p, {}};
  ModEchelon e(p);
  const Index nb = b.bar_.size(), dm = b.module.dim;
  const Index tuples = ipow(nb, k);
  for (Index t = 0; t < tuples; ++t)
    for (Index m = 0; m < dm; ++m) {
      column(b, k, t, m, acc, conv);
      e.insert(acc.finish());
    }
  return e.rank();
}

}  // namespace

std::vector<SparseVec> BarComplex::differential(int k) const {
  const Index nb = bar_.size(), dm = module.dim;
  const Index tuples = ipow(nb, k);
  const int level = algebra.level();
  Accumulator acc(level);
  auto conv = [&](const CycScalar& c, int sign) { return sign < 0 ? -c : c; };
  std::vector<SparseVec> cols;
  cols.reserve(tuples * dm);
  for (Index t = 0; t < tuples; ++t)
    for (Index m = 0; m < dm; ++m) {
      column(*this, k, t, m, acc, conv);
      cols.push_back(acc.finish());
    }
  return cols;
}

std::uint64_t exact_rank(const std::vector<SparseVec>& columns, int level) {
  EchelonBasis e(level);
  for (const auto& c : columns) e.insert(c);
  return e.rank();
}

std::optional<std::uint64_t> modular_rank(const std::vector<SparseVec>& columns, std::uint64_t p, std::uint64_t root) {
  Converter conv{p, root};
  ModEchelon e(p);
  try {
    for (const auto& c : columns) {
      ModVec v;
      for (const auto& [i, x] : c) {
        std::uint64_t y = conv(x, 1);
        if (y) v.emplace_back(i, y);
      }
      e.insert(std::move(v));
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return e.rank();
}

std::vector<std::int64_t> CohomologyReport::dims() const {
  std::vector<std::int64_t> out;
  for (const auto& d : degrees) out.push_back(d.dim);
  return out;
}

CohomologyReport cohomology_dims(const StructureAlgebra& a, const Bimodule& m, int kmax, const RankOptions& opts,
                                 std::optional<SparseVec> augmentation) {
  if (kmax < 0) throw Error(ErrorCode::BadParameter, "kmax must be non-negative");
  CohomologyReport rep;
  rep.normalized = augmentation.has_value();
  BarComplex bar(a, m, std::move(augmentation));
  std::vector<std::uint64_t> ranks(kmax + 1);
  if (opts.mode == RankMode::Exact) {
    rep.rank_mode = "exact";
    for (int k = 0; k <= kmax; ++k) ranks[k] = exact_rank(bar.differential(k), a.level());
  } else {
    rep.rank_mode = "modular";
    rep.primes = select_primes(static_cast<std::uint64_t>(a.level()), opts.trials, opts.seed);
    for (int k = 0; k <= kmax; ++k) {
      std::vector<std::uint64_t> per;
      for (std::uint64_t p : rep.primes)
        per.push_back(modular_rank_of(bar, k, p, root_of_unity_mod(p, static_cast<std::uint64_t>(a.level()))));
      // modular ranks never exceed the exact rank; the maximum is the best bound
      ranks[k] = *std::max_element(per.begin(), per.end());
      if (std::any_of(per.begin(), per.end(), [&](std::uint64_t r) { return r != per.front(); })) {
        rep.consensus = false;
        ranks[k] = exact_rank(bar.differential(k), a.level());
      }
    }
  }
  for (int k = 0; k <= kmax; ++k) {
    DegreeInfo d;
    d.k = k;
    d.cochain_dim = bar.cochain_dim(k);
    d.rank_out = ranks[k];
    d.rank_in = k == 0 ? 0 : ranks[k - 1];
    d.dim = static_cast<std::int64_t>(d.cochain_dim) - static_cast<std::int64_t>(d.rank_out) -
            static_cast<std::int64_t>(d.rank_in);
    rep.degrees.push_back(d);
  }
  return rep;
}

}  // namespace qhopf
