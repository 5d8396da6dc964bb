#include "qhopf/catalog.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "qhopf/error.hpp"

namespace qhopf {

std::size_t SkewMonomialPresentation::dim() const {
  std::size_t d = static_cast<std::size_t>(a_order);
  for (int n : nil_orders) d *= static_cast<std::size_t>(n);
  return d;
}

Index SkewMonomialPresentation::index(int e, const std::vector<int>& k) const {
  Index idx = 0;
  for (std::size_t i = nil_orders.size(); i-- > 0;) idx = idx * nil_orders[i] + k[i];
  return idx * a_order + e;
}

void SkewMonomialPresentation::decompose(Index i, int& e, std::vector<int>& k) const {
  e = static_cast<int>(i % a_order);
  i /= a_order;
  k.resize(nil_orders.size());
  for (std::size_t j = 0; j < nil_orders.size(); ++j) {
    k[j] = static_cast<int>(i % nil_orders[j]);
    i /= nil_orders[j];
  }
}

AlgebraPtr skew_monomial_algebra(const SkewMonomialPresentation& p) {
  const std::size_t dim = p.dim();
  const std::size_t r = p.nil_orders.size();
  std::vector<SparseVec> mult(dim * dim);
  std::vector<int> grading(dim);
  std::vector<std::string> labels(dim);
  std::vector<int> k1, k2, k(r);
  int e1, e2;
  for (Index i = 0; i < dim; ++i) {
    p.decompose(i, e1, k1);
    grading[i] = std::accumulate(k1.begin(), k1.end(), 0);
    std::string lab;
    auto factor = [&](const std::string& name, int pw) {
      if (pw == 0) return;
      lab += name;
      if (pw > 1) lab += "^" + std::to_string(pw);
    };
    factor(p.names[0], e1);
    for (std::size_t j = 0; j < r; ++j) factor(p.names[j + 1], k1[j]);
    labels[i] = lab.empty() ? "1" : lab;
    for (Index jdx = 0; jdx < dim; ++jdx) {
      p.decompose(jdx, e2, k2);
      bool zero = false;
      std::int64_t exp = 0;
      for (std::size_t s = 0; s < r; ++s) {
        k[s] = k1[s] + k2[s];
        if (k[s] >= p.nil_orders[s]) zero = true;
        exp -= p.conj[s] * k1[s] * e2;  // x^K a^f = ζ^{-Σ conj·K·f} a^f x^K
        for (std::size_t t = s + 1; t < r; ++t) exp += p.swap[s][t] * k1[t] * k2[s];
      }
      if (zero) continue;
      mult[i * dim + jdx].emplace_back(p.index((e1 + e2) % p.a_order, k), CycScalar::root(p.level, exp));
    }
  }
  SparseVec unit{{0, CycScalar(p.level, Rational(1))}};
  return std::make_shared<StructureAlgebra>(static_cast<int>(dim), p.level, std::move(mult), std::move(unit),
                                            std::move(grading), std::move(labels));
}

Element root_element(const AlgebraPtr& a, int arity, std::int64_t k) {
  return Element::scalar(a, arity, CycScalar::root(a->level(), k));
}

std::vector<Element> cyclic_idempotents(const Element& g, int order, std::int64_t lambda) {
  const AlgebraPtr& a = g.parent();
  std::vector<Element> powers{Element::unit(a, 1)};
  for (int j = 1; j < order; ++j) powers.push_back(powers.back() * g);
  const CycScalar inv_n(a->level(), Rational(1) / Rational(order));
  std::vector<Element> out;
  for (int i = 0; i < order; ++i) {
    Element e(a, 1);
    for (int j = 0; j < order; ++j) e = e + powers[j] * CycScalar::root(a->level(), -lambda * i * j);
    out.push_back(e * inv_n);
  }
  return out;
}

Element idempotent_tensor(const std::vector<Element>& idems, int arity,
                          const std::function<std::int64_t(const std::vector<int>&)>& exponent) {
  const AlgebraPtr& a = idems.front().parent();
  const int n = static_cast<int>(idems.size());
  std::vector<int> args(static_cast<std::size_t>(arity), 0);
  Accumulator acc(a->level());
  for (;;) {
    Element t = idems[args[0]];
    for (int p = 1; p < arity; ++p) t = tensor_elem(t, idems[args[p]]);
    acc.add_scaled(t.coords(), CycScalar::root(a->level(), exponent(args)));
    int p = arity - 1;
    while (p >= 0 && ++args[p] == n) args[p--] = 0;
    if (p < 0) break;
  }
  return Element(a, arity, acc.finish());
}

LinearMap extend_on_monomials(const SkewMonomialPresentation& p, const AlgebraPtr& a,
                              const std::vector<Element>& gen_images, int target_arity, bool anti) {
  const std::size_t r = p.nil_orders.size();
  // powers[g][k] = image of generator g to the k-th power
  std::vector<std::vector<Element>> powers(r + 1);
  for (std::size_t g = 0; g <= r; ++g) {
    int top = g == 0 ? p.a_order : p.nil_orders[g - 1];
    powers[g].push_back(Element::unit(a, target_arity));
    for (int k = 1; k < top; ++k) powers[g].push_back(powers[g].back() * gen_images[g]);
  }
  std::vector<SparseVec> cols;
  std::vector<int> k;
  int e;
  for (Index i = 0; i < p.dim(); ++i) {
    p.decompose(i, e, k);
    Element v = powers[0][e];
    for (std::size_t g = 0; g < r; ++g) v = anti ? powers[g + 1][k[g]] * v : v * powers[g + 1][k[g]];
    cols.push_back(v.coords());
  }
  return LinearMap(a, 1, target_arity, std::move(cols));
}

namespace {

struct Built {
  SkewMonomialPresentation pres;
  AlgebraPtr alg;
  Element a;
  std::vector<Element> x;
};

Built make(SkewMonomialPresentation p) {
  AlgebraPtr alg = skew_monomial_algebra(p);
  Built b{p, alg, Element::basis(alg, p.index(p.a_order > 1 ? 1 : 0, std::vector<int>(p.nil_orders.size(), 0))), {}};
  for (std::size_t i = 0; i < p.nil_orders.size(); ++i) {
    std::vector<int> k(p.nil_orders.size(), 0);
    k[i] = 1;
    b.x.push_back(Element::basis(alg, p.index(0, k)));
  }
  return b;
}

QuasiHopfDatum assemble(const std::string& name, const Built& b, const std::vector<Element>& delta_gens,
                        const std::vector<Element>& s_gens, Element phi, Element phi_inv, Element alpha,
                        Element beta) {
  std::vector<SparseVec> eps(b.pres.dim());
  for (Index i = 0; i < b.pres.dim(); ++i)
    if (b.alg->grading()->at(i) == 0) eps[i] = {{0, CycScalar(b.pres.level, Rational(1))}};
  std::vector<Element> gens{b.a};
  gens.insert(gens.end(), b.x.begin(), b.x.end());
  return QuasiHopfDatum{name,
                        b.alg,
                        extend_on_monomials(b.pres, b.alg, delta_gens, 2, false),
                        LinearMap(b.alg, 1, 0, std::move(eps)),
                        std::move(phi),
                        std::move(phi_inv),
                        extend_on_monomials(b.pres, b.alg, s_gens, 1, true),
                        std::move(alpha),
                        std::move(beta),
                        std::move(gens)};
}

void require_primitive(std::int64_t r, std::int64_t order) {
  if (std::gcd(r, order) != 1) throw Error(ErrorCode::NotPrimitive, "root exponent not coprime to its order");
}

QuasiHopfDatum hopf(const std::string& name, const Built& b, const std::vector<Element>& delta_gens,
                    const std::vector<Element>& s_gens) {
  return assemble(name, b, delta_gens, s_gens, Element::unit(b.alg, 3), Element::unit(b.alg, 3),
                  Element::unit(b.alg, 1), Element::unit(b.alg, 1));
}

}  // namespace

QuasiHopfDatum build_Aq(int n, int r) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "n must be at least 2");
  const int level = n * n;
  require_primitive(r, level);
  SkewMonomialPresentation p{level, n, {level}, {std::int64_t(r) * n}, {{0}}, {"a", "x"}};
  Built b = make(p);
  const AlgebraPtr& A = b.alg;
  auto q = [&](std::int64_t k) { return CycScalar::root(level, std::int64_t(r) * k); };
  auto idem = cyclic_idempotents(b.a, n, std::int64_t(r) * n);
  const Element one = Element::unit(A, 1);
  const Element& a = b.a;
  const Element& x = b.x[0];
  const Element ainv = a.pow(n - 1);
  Element weight(A, 1), sweight(A, 1);
  for (int y = 0; y < n; ++y) {
    weight = weight + idem[y] * q(y);
    sweight = sweight + idem[y] * q(n - y);
  }
  Element dx = tensor_elem(x, weight) + tensor_elem(one, (one - idem[0]) * x) + tensor_elem(ainv, idem[0] * x);
  ExpCochain omega = assoc_cocycle_Aq(n, r);
  auto exp = [&](const std::vector<int>& v) { return omega(v); };
  auto exp_inv = [&](const std::vector<int>& v) { return -omega(v); };
  return assemble("Aq:n=" + std::to_string(n) + ",r=" + std::to_string(r), b, {tensor_elem(a, a), dx},
                  {ainv, -(x * sweight)}, idempotent_tensor(idem, 3, exp), idempotent_tensor(idem, 3, exp_inv), a,
                  one);
}

QuasiHopfDatum build_H32() {
  SkewMonomialPresentation p{4, 2, {4, 4}, {2, 2}, {{0, 1}, {0, 0}}, {"a", "x", "y"}};
  Built b = make(p);
  const AlgebraPtr& A = b.alg;
  const Element one = Element::unit(A, 1);
  const Element& a = b.a;
  const CycScalar half(4, Rational(1, 2)), i(CycScalar::root(4, 1));
  const Element pp = (one + a) * half, pm = (one - a) * half;
  Element dx = tensor_elem(b.x[0], pp + pm * i) + tensor_elem(one, pp * b.x[0]) + tensor_elem(a, pm * b.x[0]);
  Element dy = tensor_elem(b.x[1], pp - pm * i) + tensor_elem(one, pp * b.x[1]) + tensor_elem(a, pm * b.x[1]);
  Element phi = Element::unit(A, 3) - tensor_elem(tensor_elem(pm, pm), pm) * CycScalar(4, Rational(2));
  return assemble("H32", b, {tensor_elem(a, a), dx, dy}, {a, -(b.x[0] * (pp + pm * i)), -(b.x[1] * (pp - pm * i))},
                  phi, phi, a, one);
}

QuasiHopfDatum build_taft(int n, int r) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "N must be at least 2");
  require_primitive(r, n);
  Built b = make(SkewMonomialPresentation{n, n, {n}, {r}, {{0}}, {"g", "x"}});
  const Element one = Element::unit(b.alg, 1);
  const Element ginv = b.a.pow(n - 1);
  const Element& x = b.x[0];
  return hopf("taft:N=" + std::to_string(n) + ",r=" + std::to_string(r), b,
              {tensor_elem(b.a, b.a), tensor_elem(x, b.a) + tensor_elem(one, x)}, {ginv, -(x * ginv)});
}

QuasiHopfDatum build_book(int p, int r, int m) {
  if (p < 2) throw Error(ErrorCode::BadParameter, "p must be at least 2");
  if (((m % p) + p) % p == 0) throw Error(ErrorCode::BadParameter, "m must be nonzero mod p");
  if (std::gcd(r, p) != 1) throw Error(ErrorCode::BadParameter, "q must be primitive");
  Built b = make(SkewMonomialPresentation{p, p, {p, p}, {r, std::int64_t(r) * m}, {{0, 0}, {0, 0}}, {"a", "x", "y"}});
  const Element one = Element::unit(b.alg, 1);
  const Element& a = b.a;
  const Element ainv = a.pow(p - 1);
  const int mm = ((m % p) + p) % p;
  const Element am = a.pow(mm), aminv = a.pow((p - mm) % p);
  const Element& x = b.x[0];
  const Element& y = b.x[1];
  return hopf("book:p=" + std::to_string(p) + ",r=" + std::to_string(r) + ",m=" + std::to_string(m), b,
              {tensor_elem(a, a), tensor_elem(x, a) + tensor_elem(one, x), tensor_elem(y, one) + tensor_elem(am, y)},
              {ainv, -(x * ainv), -(aminv * y)});
}

QuasiHopfDatum build_book64() {
  Built b = make(SkewMonomialPresentation{4, 4, {4, 4}, {1, 3}, {{0, 0}, {0, 0}}, {"g", "x+", "x-"}});
  const Element one = Element::unit(b.alg, 1);
  const Element& g = b.a;
  const Element ginv = g.pow(3);
  const Element& xp = b.x[0];
  const Element& xm = b.x[1];
  return hopf("book64", b,
              {tensor_elem(g, g), tensor_elem(xp, g) + tensor_elem(one, xp), tensor_elem(xm, one) + tensor_elem(ginv, xm)},
              {ginv, -(xp * ginv), -(g * xm)});
}

QuasiHopfDatum build_cyclic_cocycle(int n, const ExpCochain& omega) {
  if (omega.group_order() != n || omega.degree() != 3)
    throw Error(ErrorCode::BadParameter, "ω must be a 3-cochain on Z_N");
  if (!differential(omega).is_zero()) throw Error(ErrorCode::NotACocycle, "ω is not a 3-cocycle");
  const std::int64_t m = omega.modulus();
  const int level = static_cast<int>(std::lcm<std::int64_t>(n, m));
  const std::int64_t scale = level / m;
  Built b = make(SkewMonomialPresentation{level, n, {}, {}, {}, {"a"}});
  const AlgebraPtr& A = b.alg;
  auto idem = cyclic_idempotents(b.a, n, level / n);
  Element phi = idempotent_tensor(idem, 3, [&](const std::vector<int>& v) { return scale * omega(v); });
  Element phi_inv = idempotent_tensor(idem, 3, [&](const std::vector<int>& v) { return -scale * omega(v); });
  // β = Σ_i φ(i,−i,i)^{-1} e_i solves Σ X¹βS(X²)X³ = 1 with α = 1
  Element beta(A, 1);
  for (int i = 0; i < n; ++i) beta = beta + idem[i] * CycScalar::root(level, -scale * omega({i, (n - i) % n, i}));
  return assemble("cyclic:N=" + std::to_string(n), b, {tensor_elem(b.a, b.a)}, {b.a.pow(n - 1)}, std::move(phi),
                  std::move(phi_inv), Element::unit(A, 1), std::move(beta));
}

namespace {

std::map<std::string, int> parse_params(const std::string& s, const std::string& spec) {
  std::map<std::string, int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "malformed parameter in '" + spec + "'");
    try {
      std::size_t used = 0;
      std::string val = item.substr(eq + 1);
      int v = std::stoi(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
      out[item.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "non-integer parameter in '" + spec + "'");
    }
  }
  return out;
}

int need(const std::map<std::string, int>& p, const std::string& key, const std::string& spec) {
  auto it = p.find(key);
  if (it == p.end()) throw Error(ErrorCode::ParseError, "missing parameter '" + key + "' in '" + spec + "'");
  return it->second;
}

}  // namespace

QuasiHopfDatum parse_instance(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  auto params = colon == std::string::npos ? std::map<std::string, int>{} : parse_params(spec.substr(colon + 1), spec);
  if (head == "Aq") return build_Aq(need(params, "n", spec), need(params, "r", spec));
  if (head == "H32") return build_H32();
  if (head == "taft") return build_taft(need(params, "N", spec), need(params, "r", spec));
  if (head == "book") return build_book(need(params, "p", spec), need(params, "r", spec), need(params, "m", spec));
  if (head == "book64") return build_book64();
  if (head == "cyclic") {
    const int n = need(params, "N", spec);
    const int sv = need(params, "s", spec);
    auto q = build_cyclic_cocycle(n, carry_cocycle(n, sv));
    q.name = "cyclic:N=" + std::to_string(n) + ",s=" + std::to_string(sv);
    return q;
  }
  throw Error(ErrorCode::ParseError, "unknown instance '" + spec + "'");
}

std::vector<std::string> list_instances() {
  return {"Aq:n=2,r=1", "Aq:n=2,r=3", "Aq:n=3,r=1", "H32",          "taft:N=2,r=1",
          "taft:N=3,r=1", "taft:N=4,r=1", "book:p=3,r=1,m=1", "book64", "cyclic:N=2,s=0",
          "cyclic:N=2,s=1", "cyclic:N=3,s=1"};
}

}  // namespace qhopf
