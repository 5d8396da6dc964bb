#include "qhopf/weylcheck.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

struct Block {
  std::vector<std::vector<Rational>> gram;
  std::vector<std::string> names;
};

Block block(const std::string& kind, const std::string& prefix) {
  if (kind == "A1") return {{{Rational(2)}}, {prefix + "1"}};
  if (kind == "A2") return {{{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}}, {prefix + "1", prefix + "2"}};
  if (kind == "B2") return {{{Rational(2), Rational(-1)}, {Rational(-1), Rational(1)}}, {prefix + "1", prefix + "2"}};
  // G₂: long α₁ with (α₁,α₁) = 2, short α₂ with (α₂,α₂) = 2/3
  return {{{Rational(2), Rational(-1)}, {Rational(-1), Rational(2, 3)}}, {prefix + "1", prefix + "2"}};
}

std::vector<std::string> blocks_of(RootType t) {
  switch (t) {
    case RootType::A1: return {"A1"};
    case RootType::A1xA1: return {"A1", "A1"};
    case RootType::A2: return {"A2"};
    case RootType::B2: return {"B2"};
    case RootType::G2: return {"G2"};
    case RootType::A2xA1: return {"A2", "A1"};
    case RootType::A2xA2: return {"A2", "A2"};
  }
  return {};
}

bool is_positive(const std::vector<int>& v) {
  bool nonzero = false;
  for (int x : v) {
    if (x < 0) return false;
    nonzero = nonzero || x != 0;
  }
  return nonzero;
}

bool is_negative(const std::vector<int>& v) {
  std::vector<int> m(v);
  for (auto& x : m) x = -x;
  return is_positive(m);
}

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

std::vector<int> reflect(const RootSystemDatum& rs, int i, std::vector<int> v) {
  int c = 0;
  for (int j = 0; j < rs.rank; ++j) c += rs.cartan[i][j] * v[j];
  v[i] -= c;
  return v;
}

}  // namespace

RootType parse_root_type(const std::string& s) {
  static const std::map<std::string, RootType> names{{"A1", RootType::A1},       {"A1xA1", RootType::A1xA1},
                                                     {"A2", RootType::A2},       {"B2", RootType::B2},
                                                     {"G2", RootType::G2},       {"A2xA1", RootType::A2xA1},
                                                     {"A2xA2", RootType::A2xA2}};
  auto it = names.find(s);
  if (it == names.end()) throw Error(ErrorCode::BadCase, "unknown root system type '" + s + "'");
  return it->second;
}

std::string to_string(RootType t) {
  switch (t) {
    case RootType::A1: return "A1";
    case RootType::A1xA1: return "A1xA1";
    case RootType::A2: return "A2";
    case RootType::B2: return "B2";
    case RootType::G2: return "G2";
    case RootType::A2xA1: return "A2xA1";
    case RootType::A2xA2: return "A2xA2";
  }
  return "?";
}

RootSystemDatum root_system(RootType t) {
  RootSystemDatum rs{t, 0, {}, {}, {}, {}, {}};
  const auto kinds = blocks_of(t);
  std::vector<Block> blocks;
  for (std::size_t b = 0; b < kinds.size(); ++b) {
    std::string prefix = b == 0 ? "α" : "β";
    blocks.push_back(block(kinds[b], prefix));
    rs.rank += static_cast<int>(blocks.back().names.size());
  }
  if (blocks.size() == 2 && kinds[0] == "A1") blocks[1].names = {"α2"};  // A1×A1: α₁, α₂
  if (t == RootType::A2xA1) blocks[1].names = {"β"};
  rs.gram.assign(rs.rank, std::vector<Rational>(rs.rank, Rational(0)));
  int off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.names.size(); ++i) {
      for (std::size_t j = 0; j < b.names.size(); ++j) rs.gram[off + i][off + j] = b.gram[i][j];
      rs.simple_names.push_back(b.names[i]);
    }
    off += static_cast<int>(b.names.size());
  }
  rs.cartan.assign(rs.rank, std::vector<int>(rs.rank, 0));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      Rational c = Rational(2) * rs.gram[i][j] / rs.gram[i][i];
      if (!c.is_integer()) throw Error(ErrorCode::PreconditionFailed, "non-integral Cartan entry");
      rs.cartan[i][j] = std::stoi(c.to_string());
    }
  // orbit of the simple roots
  std::vector<std::vector<int>> roots;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<int> e(rs.rank, 0);
    e[i] = 1;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    if (std::find(roots.begin(), roots.end(), v) != roots.end()) continue;
    roots.push_back(v);
    for (int i = 0; i < rs.rank; ++i) queue.push_back(reflect(rs, i, v));
  }
  for (const auto& r : roots)
    if (is_positive(r)) rs.positive_roots.push_back(r);
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const auto& a, const auto& b) {
    int sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    return sa != sb ? sa < sb : a > b;
  });
  rs.two_rho.assign(rs.rank, 0);
  for (const auto& r : rs.positive_roots)
    for (int i = 0; i < rs.rank; ++i) rs.two_rho[i] += r[i];
  return rs;
}

std::vector<int> apply(const WeylElement& w, const std::vector<int>& v, int rank) {
  std::vector<int> out(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) out[i] += w.matrix[i * rank + j] * v[j];
  return out;
}

std::vector<WeylElement> weyl_group(const RootSystemDatum& rs) {
  const int r = rs.rank;
  std::vector<int> id(r * r, 0);
  for (int i = 0; i < r; ++i) id[i * r + i] = 1;
  std::vector<WeylElement> out{{{}, id, 0}};
  std::map<std::vector<int>, bool> seen{{id, true}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < r; ++i) {
      // w·s_i: columns of w applied to s_i(e_j)
      WeylElement next{out[k].word, std::vector<int>(r * r, 0), out[k].length + 1};
      next.word.push_back(i + 1);
      for (int j = 0; j < r; ++j) {
        std::vector<int> e(r, 0);
        e[j] = 1;
        auto col = apply(out[k], reflect(rs, i, e), r);
        for (int row = 0; row < r; ++row) next.matrix[row * r + j] = col[row];
      }
      if (seen.emplace(next.matrix, true).second) out.push_back(std::move(next));
    }
  }
  return out;
}

WeylElement inverse(const WeylElement& w, int rank) {
  WeylElement out{std::vector<int>(w.word.rbegin(), w.word.rend()), {}, w.length};
  // the inverse of an integer matrix of determinant ±1 in a finite group is a power of it
  std::vector<int> m = w.matrix, prev = w.matrix;
  const int r = rank;
  std::vector<int> id(r * r, 0);
  for (int i = 0; i < r; ++i) id[i * r + i] = 1;
  while (m != id) {
    prev = m;
    std::vector<int> n(r * r, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) n[i * r + j] += m[i * r + k] * w.matrix[k * r + j];
    m = n;
  }
  out.matrix = prev;
  return out;
}

int inversion_count(const RootSystemDatum& rs, const WeylElement& w) {
  int c = 0;
  for (const auto& a : rs.positive_roots)
    if (is_negative(apply(w, a, rs.rank))) ++c;
  return c;
}

std::vector<int> gamma(const RootSystemDatum& rs, const WeylElement& w) {
  auto wr = apply(w, rs.two_rho, rs.rank);
  std::vector<int> out(rs.rank);
  for (int i = 0; i < rs.rank; ++i) out[i] = (rs.two_rho[i] - wr[i]) / 2;
  return out;
}

std::vector<int> gamma_inversions_of(const RootSystemDatum& rs, const WeylElement& w) {
  std::vector<int> out(rs.rank, 0);
  for (const auto& a : rs.positive_roots)
    if (is_negative(apply(w, a, rs.rank)))
      for (int i = 0; i < rs.rank; ++i) out[i] += a[i];
  return out;
}

std::vector<int> gamma_by_roots(const RootSystemDatum& rs, const WeylElement& w) {
  return gamma_inversions_of(rs, inverse(w, rs.rank));
}

std::int64_t lambda_exponent(const std::vector<int>& g, std::int64_t p, std::int64_t d) {
  if (g.size() == 1) return mod(g[0], p);
  return mod(g[0] + g[1] * d, p);
}

std::vector<std::int64_t> valid_params(RootType t, std::int64_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d < p; ++d) {
    bool ok = false;
    switch (t) {
      case RootType::A1:
      case RootType::A1xA1: ok = true; break;
      case RootType::A2: ok = (p == 3 || p % 3 == 1) && mod(d * d + d + 1, p) == 0; break;
      case RootType::B2: ok = p % 4 == 1 && mod(2 * d * d + 2 * d + 1, p) == 0; break;
      case RootType::G2: ok = p % 3 == 1 && mod(3 * d * d + 3 * d + 1, p) == 0; break;
      default: throw Error(ErrorCode::BadCase, "valid_params is defined for A1, A1xA1, A2, B2, G2");
    }
    if (ok) out.push_back(d);
  }
  return out;
}

bool side_facts_hold(RootType t, std::int64_t p, std::int64_t d) {
  switch (t) {
    case RootType::A2: return mod(d + 1, p) != 0;
    case RootType::B2: return mod(d + 1, p) != 0 && mod(2 * d + 1, p) != 0;
    case RootType::G2: return mod(d + 1, p) != 0 && mod(3 * d + 1, p) != 0;
    default: return true;
  }
}

VanishingReport verify_vanishing(RootType t, std::int64_t p, std::int64_t d) {
  auto valid = valid_params(t, p);
  if (std::find(valid.begin(), valid.end(), mod(d, p)) == valid.end())
    throw Error(ErrorCode::BadParameter, "d is not a valid parameter for this type and p");
  const auto rs = root_system(t);
  VanishingReport rep;
  rep.type = t;
  rep.p = p;
  rep.d = d;
  rep.simple_reflections_ok = true;
  rep.length3_ok = true;
  for (const auto& w : weyl_group(rs)) {
    if (w.length != 1 && w.length != 3) continue;
    auto g = gamma(rs, w);
    std::int64_t e = lambda_exponent(g, p, d);
    rep.rows.push_back({w.word, w.length, g, e});
    if (w.length == 1) rep.simple_reflections_ok = rep.simple_reflections_ok && e != 0;
    if (w.length == 3) {
      ++rep.length3_count;
      rep.length3_ok = rep.length3_ok && e != 0;
    }
  }
  return rep;
}

InvariantReport p3_invariants(RootType t, int f) {
  if (t != RootType::A2 && t != RootType::A2xA1 && t != RootType::A2xA2)
    throw Error(ErrorCode::BadCase, "p = 3 invariants are defined for A2, A2xA1, A2xA2");
  if (t != RootType::A2 && f != 1 && f != 2) throw Error(ErrorCode::BadCase, "f must be 1 or 2");
  const auto rs = root_system(t);
  // coproduct exponents of the generators: x ↦ 1, y ↦ d = 1, extra generators ↦ −f
  std::vector<int> c{1, 1};
  for (int i = 2; i < rs.rank; ++i) c.push_back(-f);
  InvariantReport rep;
  auto name = [&](const std::vector<int>& r) {
    std::string s;
    for (int i = 0; i < rs.rank; ++i) {
      if (r[i] == 0) continue;
      if (!s.empty()) s += "+";
      s += (r[i] > 1 ? std::to_string(r[i]) : "") + rs.simple_names[i];
    }
    return s;
  };
  for (const auto& r : rs.positive_roots) {
    int w = 0;
    for (int i = 0; i < rs.rank; ++i) w -= c[i] * r[i];
    rep.generators.push_back(name(r));
    rep.weights.push_back(static_cast<int>(mod(w, 3)));
  }
  const std::size_t n = rs.positive_roots.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if ((rep.weights[i] + rep.weights[j] + rep.weights[k]) % 3 == 0)
          rep.basis.push_back("ε_{" + rep.generators[i] + "}ε_{" + rep.generators[j] + "}ε_{" + rep.generators[k] + "}");
  rep.dimension = static_cast<int>(rep.basis.size());
  return rep;
}

bool spectral_kill_check(RootType t) {
  if (t != RootType::A2 && t != RootType::A2xA1 && t != RootType::A2xA2)
    throw Error(ErrorCode::BadCase, "spectral_kill_check is defined for A2, A2xA1, A2xA2");
  const auto rs = root_system(t);
  std::vector<int> target(rs.rank, 0);
  target[0] = target[1] = mod(-1, 3);
  for (const auto& w : weyl_group(rs)) {
    auto g = gamma(rs, w);  // w(ρ) − ρ = −γ_w
    bool equal = true;
    for (int i = 0; i < rs.rank; ++i) equal = equal && mod(-g[i], 3) == target[i];
    if (equal) return false;
  }
  return true;
}

}  // namespace qhopf
