#include "qhopf/semidirect.hpp"

#include <algorithm>

#include "qhopf/catalog.hpp"
#include "qhopf/error.hpp"

namespace qhopf {

namespace {

LinearMap map_power(const LinearMap& g, int e) {
  LinearMap base = e < 0 ? inverse_map(g) : g;
  LinearMap out = LinearMap::identity(g.parent());
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out = compose(base, out);
  return out;
}

Element apply_all(const LinearMap& f, const Element& x) {
  std::vector<const LinearMap*> maps(static_cast<std::size_t>(x.arity()), &f);
  return apply_factorwise(x, maps);
}

}  // namespace

SemidirectInput standard_input(const QuasiHopfDatum& h, int n) {
  return SemidirectInput{h, antipode_power(h, 2), Element::unit(h.algebra, 2), n, h.generators.at(0)};
}

CompatReport check_compat(const SemidirectInput& inp) {
  CompatReport rep;
  const auto& q = inp.h;
  const auto& A = *q.algebra;
  const Index dim = static_cast<Index>(A.dim());
  const LinearMap& g = inp.g;
  rep.g_algebra_map = g.apply(Element::unit(q.algebra, 1)) == Element::unit(q.algebra, 1);
  for (Index i = 0; i < dim && rep.g_algebra_map; ++i)
    for (Index j = 0; j < dim && rep.g_algebra_map; ++j)
      if (g.apply(Element(q.algebra, 1, A.product(i, j))) != g.image(i) * g.image(j)) {
        rep.g_algebra_map = false;
        rep.failure = "g is not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
  if (!rep.g_algebra_map) {
    if (rep.failure.empty()) rep.failure = "g(1) ≠ 1";
    return rep;
  }
  const LinearMap* id = nullptr;
  const Element one1 = Element::unit(q.algebra, 1);
  rep.k_counital = apply_factorwise(inp.k, {&q.counit, id}) == one1 && apply_factorwise(inp.k, {id, &q.counit}) == one1;
  if (!rep.k_counital) {
    rep.failure = "K is not counital";
    return rep;
  }
  const Element kinv = invert(inp.k);
  const LinearMap ginv = inverse_map(g);
  rep.delta_twisted = true;
  for (Index i = 0; i < dim && rep.delta_twisted; ++i) {
    Element lhs = apply_all(g, q.coproduct(ginv.image(i)));
    if (lhs != inp.k * q.delta.image(i) * kinv) {
      rep.delta_twisted = false;
      rep.failure = "(g⊗g)Δg⁻¹ ≠ KΔK⁻¹ at e" + std::to_string(i);
    }
  }
  if (!rep.delta_twisted) return rep;
  rep.phi_twisted = apply_all(g, q.phi) == twist(q, inp.k).phi;
  if (!rep.phi_twisted) rep.failure = "g^{⊗3}(Φ) ≠ Φ^K";
  return rep;
}

bool check_power_condition(const SemidirectInput& inp) {
  const auto& q = inp.h;
  if (map_power(inp.g, inp.n) != adjoint_map(inp.a))
    throw Error(ErrorCode::PowerNotInner, "gⁿ is not Ad(a)");
  Element prod = inp.k;
  for (int i = 1; i < inp.n; ++i) prod = apply_all(map_power(inp.g, i), inp.k) * prod;
  return prod == tensor_elem(inp.a, inp.a) * invert(q.coproduct(inp.a));
}

LaurentTensor::LaurentTensor(const SemidirectInput& inp, int arity) : inp_(&inp), arity_(arity) {}

LaurentTensor::LaurentTensor(const SemidirectInput& inp, const Element& x, std::vector<int> exps)
    : inp_(&inp), arity_(x.arity()) {
  if (exps.empty()) exps.assign(static_cast<std::size_t>(arity_), 0);
  add_term(exps, x);
}

LaurentTensor LaurentTensor::g_power(const SemidirectInput& inp, int e) {
  return LaurentTensor(inp, Element::unit(inp.h.algebra, 1), {e});
}

void LaurentTensor::add_term(const std::vector<int>& e, const Element& x) {
  if (x.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, x);
    return;
  }
  it->second = it->second + x;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentTensor LaurentTensor::operator+(const LaurentTensor& b) const {
  LaurentTensor out = *this;
  for (const auto& [e, x] : b.terms_) out.add_term(e, x);
  return out;
}

LaurentTensor LaurentTensor::operator-(const LaurentTensor& b) const {
  LaurentTensor out = *this;
  for (const auto& [e, x] : b.terms_) out.add_term(e, -x);
  return out;
}

LaurentTensor LaurentTensor::operator*(const LaurentTensor& b) const {
  if (arity_ != b.arity_) throw Error(ErrorCode::ArityMismatch, "Laurent tensor arity mismatch");
  LaurentTensor out(*inp_, arity_);
  for (const auto& [e, x] : terms_) {
    std::vector<LinearMap> maps;
    for (int p = 0; p < arity_; ++p) maps.push_back(map_power(inp_->g, e[p]));
    std::vector<const LinearMap*> ptrs;
    for (const auto& m : maps) ptrs.push_back(&m);
    for (const auto& [f, y] : b.terms_) {
      std::vector<int> s(e);
      for (int p = 0; p < arity_; ++p) s[p] += f[p];
      out.add_term(s, x * apply_factorwise(y, ptrs));
    }
  }
  return out;
}

bool LaurentTensor::operator==(const LaurentTensor& b) const {
  if (arity_ != b.arity_ || terms_.size() != b.terms_.size()) return false;
  for (const auto& [e, x] : terms_) {
    auto it = b.terms_.find(e);
    if (it == b.terms_.end() || it->second != x) return false;
  }
  return true;
}

LaurentTensor LaurentTensor::tensor(const LaurentTensor& b) const {
  LaurentTensor out(*inp_, arity_ + b.arity_);
  for (const auto& [e, x] : terms_)
    for (const auto& [f, y] : b.terms_) {
      std::vector<int> s(e);
      s.insert(s.end(), f.begin(), f.end());
      out.add_term(s, tensor_elem(x, y));
    }
  return out;
}

LaurentTensor LaurentTensor::coproduct_at(int p) const {
  const auto& q = inp_->h;
  const AlgebraPtr& ap = q.algebra;
  const Element one = Element::unit(ap, 1);
  const LaurentTensor g2(*inp_, Element::unit(ap, 2), {1, 1});
  const LaurentTensor ginv2(*inp_, Element::unit(ap, 2), {-1, -1});
  const LaurentTensor dg = LaurentTensor(*inp_, invert(inp_->k)) * g2;
  const LaurentTensor dginv = ginv2 * LaurentTensor(*inp_, inp_->k);
  std::vector<const LinearMap*> maps(static_cast<std::size_t>(arity_), nullptr);
  maps[p] = &q.delta;
  LaurentTensor out(*inp_, arity_ + 1);
  for (const auto& [e, x] : terms_) {
    LaurentTensor d(*inp_, Element::unit(ap, 2));
    for (int i = 0; i < (e[p] < 0 ? -e[p] : e[p]); ++i) d = d * (e[p] < 0 ? dginv : dg);
    Element dx = apply_factorwise(x, maps);
    for (const auto& [f, y] : d.terms_) {
      std::vector<int> s(e.begin(), e.begin() + p);
      s.insert(s.end(), f.begin(), f.end());
      s.insert(s.end(), e.begin() + p + 1, e.end());
      Element pad = Element::unit(ap, 0);
      for (int t = 0; t < p; ++t) pad = tensor_elem(pad, one);
      pad = tensor_elem(pad, y);
      for (int t = p + 1; t < arity_; ++t) pad = tensor_elem(pad, one);
      out.add_term(s, dx * pad);
    }
  }
  return out;
}

bool check_quasi_coassociative_g(const SemidirectInput& inp) {
  const LaurentTensor g = LaurentTensor::g_power(inp, 1);
  const LaurentTensor dg = g.coproduct_at(0);
  const LaurentTensor phi(inp, inp.h.phi), phi_inv(inp, inp.h.phi_inv);
  return dg.coproduct_at(0) == phi_inv * dg.coproduct_at(1) * phi;
}

bool check_power_ideal(const SemidirectInput& inp) {
  const AlgebraPtr& ap = inp.h.algebra;
  const LaurentTensor one(inp, Element::unit(ap, 1));
  const LaurentTensor gn = LaurentTensor::g_power(inp, inp.n);
  const LaurentTensor a(inp, inp.a), ainv(inp, invert(inp.a));
  const LaurentTensor rel = gn - a;
  const LaurentTensor lhs = rel.coproduct_at(0);
  const LaurentTensor rhs = LaurentTensor(inp, inp.h.coproduct(inp.a)) *
                            ((ainv * rel).tensor(ainv * gn) + one.tensor(ainv * rel));
  return lhs == rhs;
}

QuasiHopfDatum build_semidirect(const SemidirectInput& inp) {
  auto compat = check_compat(inp);
  if (!compat.pass()) throw Error(ErrorCode::PreconditionFailed, compat.failure);
  if (!check_power_condition(inp)) throw Error(ErrorCode::PreconditionFailed, "power condition fails");
  const auto& q = inp.h;
  const auto& H = *q.algebra;
  const int n = inp.n;
  const Index d = static_cast<Index>(H.dim());
  const Index big = d * n;
  const int level = H.level();

  std::vector<LinearMap> ginv_pow;
  for (int j = 0; j < n; ++j) ginv_pow.push_back(map_power(inp.g, -j));
  const SparseVec& a = inp.a.coords();
  std::vector<SparseVec> mult(big * big);
  for (Index i = 0; i < static_cast<Index>(n); ++i)
    for (Index k = 0; k < d; ++k)
      for (Index j = 0; j < static_cast<Index>(n); ++j) {
        const SparseVec& moved = ginv_pow[j].column(k);
        for (Index l = 0; l < d; ++l) {
          SparseVec w = H.multiply(moved, H.basis_vector(l));
          Index s = i + j;
          if (s >= static_cast<Index>(n)) {
            w = H.multiply(a, w);
            s -= n;
          }
          SparseVec out;
          for (const auto& [t, c] : w) out.emplace_back(s * d + t, c);
          mult[(i * d + k) * big + (j * d + l)] = std::move(out);
        }
      }
  std::optional<std::vector<int>> grading;
  if (H.grading()) {
    grading.emplace();
    for (int i = 0; i < n; ++i) grading->insert(grading->end(), H.grading()->begin(), H.grading()->end());
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (Index k = 0; k < d; ++k) {
      std::string l = H.label(k);
      if (i == 0) labels.push_back(l);
      else labels.push_back((i == 1 ? std::string("g") : "g^" + std::to_string(i)) + (l == "1" ? "" : l));
    }
  auto alg = std::make_shared<StructureAlgebra>(static_cast<int>(big), level, std::move(mult), H.unit(),
                                                std::move(grading), std::move(labels));
  // H ⊂ H̃ as the i = 0 block: flat digits base d ↦ base n·d
  auto embed = [&](const Element& x) {
    SparseVec out;
    for (const auto& [flat, c] : x.coords()) {
      Index f = flat, idx = 0, w = 1;
      for (int p = 0; p < x.arity(); ++p) {
        idx += (f % d) * w;
        w *= big;
        f /= d;
      }
      out.emplace_back(idx, c);
    }
    std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
    return Element(alg, x.arity(), std::move(out));
  };
  SparseVec gvec;
  for (const auto& [t, c] : H.unit()) gvec.emplace_back(d + t, c);
  const Element g = n > 1 ? Element(alg, 1, gvec) : embed(inp.a);
  const Element alpha = embed(q.alpha);

  const Element kinv = invert(inp.k);
  const Element dg = embed(kinv) * tensor_elem(g, g);
  Accumulator kbar(level);
  for (const auto& [flat, c] : kinv.coords())
    kbar.add_scaled(H.multiply(H.multiply(q.antipode.column(flat / d), q.alpha.coords()), H.basis_vector(flat % d)), c);
  const Element sg = alpha * invert(g) * invert(embed(Element(q.algebra, 1, kbar.finish())));

  std::vector<SparseVec> dcols(big), ecols(big), scols(big);
  Element dgp = Element::unit(alg, 2), sgp = Element::unit(alg, 1);
  for (Index i = 0; i < static_cast<Index>(n); ++i) {
    for (Index k = 0; k < d; ++k) {
      dcols[i * d + k] = (dgp * embed(q.delta.image(k))).coords();
      ecols[i * d + k] = q.counit.column(k);
      scols[i * d + k] = (embed(q.antipode.image(k)) * sgp).coords();
    }
    dgp = dgp * dg;
    sgp = sgp * sg;
  }
  std::vector<Element> gens{g};
  for (const auto& x : q.generators) gens.push_back(embed(x));
  return QuasiHopfDatum{q.name + "⋊g",
                        alg,
                        LinearMap(alg, 1, 2, std::move(dcols)),
                        LinearMap(alg, 1, 0, std::move(ecols)),
                        embed(q.phi),
                        embed(q.phi_inv),
                        LinearMap(alg, 1, 1, std::move(scols)),
                        alpha,
                        embed(q.beta),
                        std::move(gens)};
}

namespace {

int grouplike_order(const Element& g) {
  const Element one = Element::unit(g.parent(), 1);
  Element p = g;
  for (int k = 1; k <= g.algebra().dim() + 1; ++k, p = p * g)
    if (p == one) return k;
  throw Error(ErrorCode::OrderMismatch, "element has no finite order up to dim");
}

}  // namespace

UntwistResult untwist_to_hopf(const QuasiHopfDatum& ht, const Element& g) {
  const int level = ht.level();
  const int order = grouplike_order(g);
  if (level % order != 0) throw Error(ErrorCode::OrderMismatch, "level not divisible by order of g");
  auto f = cyclic_idempotents(g, order, level / order);
  ExpCochain omega(order, 3, level);
  for (std::size_t flat = 0; flat < omega.size(); ++flat) {
    auto m = omega.unflatten(flat);
    Element p = tensor_elem(tensor_elem(f[m[0]], f[m[1]]), f[m[2]]);
    Element lhs = ht.phi * p;
    const auto& [t, pt] = p.coords().front();
    CycScalar c = lhs.coefficient(t) * pt.inverse();
    if (lhs != p * c) throw Error(ErrorCode::SolverFailed, "associator is not supported on C[g]");
    int k = 0;
    while (k < level && CycScalar::root(level, k) != c) ++k;
    if (k == level) throw Error(ErrorCode::SolverFailed, "associator coefficient is not a root of unity");
    omega.set(m, k);
  }
  auto c = solve_coboundary(omega);
  if (!c) throw Error(ErrorCode::SolverFailed, "associator class is nontrivial on C[g]");
  Element j = cochain_to_tensor(*c, ht, g);
  QuasiHopfDatum h0 = twist(ht, invert(j));
  if (!h0.is_hopf()) throw Error(ErrorCode::SolverFailed, "twisted associator is not trivial");
  h0.name = ht.name + "^{J⁻¹}";
  return UntwistResult{omega, *c, j, std::move(h0)};
}

std::optional<SkewPrimitive> skew_primitive_type(const QuasiHopfDatum& q, const Element& x, const Element& g,
                                                 int order) {
  std::vector<Element> pw{Element::unit(q.algebra, 1)};
  for (int i = 1; i < order; ++i) pw.push_back(pw.back() * g);
  const Element dx = q.coproduct(x);
  for (int u = 0; u < order; ++u)
    for (int v = 0; v < order; ++v)
      if (dx == tensor_elem(x, pw[u]) + tensor_elem(pw[v], x)) return SkewPrimitive{u, v};
  return std::nullopt;
}

SubCheck in_E(const GaugePair& pair, const QuasiHopfDatum& ambient) {
  EchelonBasis e(ambient.level());
  std::vector<Element> image;
  for (const auto& v : pair.eta) {
    if (!e.insert(v)) return SubCheck{false, "η is not injective"};
    image.emplace_back(ambient.algebra, 1, v);
  }
  const Element& j = pair.j;
  const Element one1 = Element::unit(ambient.algebra, 1);
  const LinearMap* id = nullptr;
  if (j.arity() != 2 || apply_factorwise(j, {&ambient.counit, id}) != one1 ||
      apply_factorwise(j, {id, &ambient.counit}) != one1)
    return SubCheck{false, "J is not a counital twist"};
  if (image.size() == static_cast<std::size_t>(ambient.dim())) return SubCheck{};
  // only Δ^J and Φ^J matter; Φ⁻¹ lies in a finite-dimensional subalgebra whenever Φ does
  const Element jinv = invert(j);
  QuasiHopfDatum tw = ambient;
  std::vector<SparseVec> cols;
  for (Index i = 0; i < static_cast<Index>(ambient.dim()); ++i)
    cols.push_back((j * ambient.delta.image(i) * jinv).coords());
  tw.delta = LinearMap(ambient.algebra, 1, 2, std::move(cols));
  tw.phi = tensor_elem(one1, j) * apply_factorwise(j, {id, &ambient.delta}) * ambient.phi *
           apply_factorwise(jinv, {&ambient.delta, id}) * tensor_elem(jinv, one1);
  tw.phi_inv = tw.phi;
  return verify_sub_quasibialgebra(tw, image);
}

GaugePair gauge_apply(const GaugePair& pair, const GaugeMove& move, const QuasiHopfDatum& ambient) {
  auto check = in_E(pair, ambient);
  if (!check.ok) throw Error(ErrorCode::NotInE, check.failure);
  GaugePair out = pair;
  const int level = ambient.level();
  switch (move.kind) {
    case 1: {
      const auto& xi = std::get<LinearMap>(move.payload);
      for (Index i = 0; i < pair.eta.size(); ++i) {
        Accumulator acc(level);
        for (const auto& [j, c] : xi.column(i)) acc.add_scaled(pair.eta[j], c);
        out.eta[i] = acc.finish();
      }
      break;
    }
    case 2: {
      const auto& h = std::get<Element>(move.payload);
      const Element hinv = invert(h);
      for (auto& v : out.eta) v = (h * Element(ambient.algebra, 1, v) * hinv).coords();
      out.j = tensor_elem(h, h) * pair.j * invert(ambient.coproduct(h));
      break;
    }
    case 3:
      out.j = std::get<Element>(move.payload) * pair.j;
      break;
    default:
      throw Error(ErrorCode::BadParameter, "gauge move kind must be 1, 2 or 3");
  }
  auto after = in_E(out, ambient);
  if (!after.ok) throw Error(ErrorCode::NotInE, "move leaves E: " + after.failure);
  return out;
}

}  // namespace qhopf

namespace qhopf {

namespace {

std::vector<Element> powers_of(const Element& g, int order) {
  std::vector<Element> pw{Element::unit(g.parent(), 1)};
  for (int i = 1; i < order; ++i) pw.push_back(pw.back() * g);
  return pw;
}

// r with g x g⁻¹ = ζ_level^r x, if any
std::optional<int> conjugation_exponent(const Element& g, const Element& x) {
  const Element c = g * x * invert(g);
  const int level = g.level();
  for (int r = 0; r < level; ++r)
    if (c == x * CycScalar::root(level, r)) return r;
  return std::nullopt;
}

}  // namespace

std::optional<SkewPrimitiveLift> find_skew_primitive(const QuasiHopfDatum& q, const Element& x, const Element& g,
                                                    int order) {
  const int level = q.level();
  const auto pw = powers_of(g, order);
  const auto f = cyclic_idempotents(g, order, level / order);
  std::vector<Element> xf;
  for (const auto& e : f) xf.push_back(x * e);
  for (int u = 0; u < order; ++u)
    for (int v = 0; v < order; ++v) {
      std::vector<Element> cols;
      std::map<Index, std::size_t> rows;
      for (const auto& y : xf) {
        cols.push_back(q.coproduct(y) - tensor_elem(y, pw[u]) - tensor_elem(pw[v], y));
        for (const auto& [t, c] : cols.back().coords()) rows.emplace(t, rows.size());
      }
      DenseMatrix m(rows.size(), cols.size(), level);
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [t, c] : cols[j].coords()) m.at(rows[t], j) = c;
      auto null = m.nullspace();
      if (null.size() != 1) continue;
      bool invertible = true;
      for (const auto& c : null[0]) invertible = invertible && !c.is_zero();
      if (!invertible) continue;
      Element y(q.algebra, 1);
      for (std::size_t j = 0; j < xf.size(); ++j) y = y + xf[j] * null[0][j];
      // g^{-v}y has type (u − v, 0)
      y = pw[(order - v) % order] * y;
      return SkewPrimitiveLift{y, SkewPrimitive{((u - v) % order + order) % order, 0}};
    }
  return std::nullopt;
}

Identification identify_taft(const QuasiHopfDatum& h0, const Element& g, const Element& x) {
  const int order = grouplike_order(g);
  auto lift = find_skew_primitive(h0, x, g, order);
  if (!lift) throw Error(ErrorCode::SolverFailed, "no skew-primitive lift of x");
  const Element big_g = g.pow(lift->type.u);
  if (grouplike_order(big_g) != order) throw Error(ErrorCode::SolverFailed, "skew-primitive type does not generate");
  auto r = conjugation_exponent(big_g, lift->x);
  if (!r || h0.level() % order != 0) throw Error(ErrorCode::SolverFailed, "x is not a g-eigenvector");
  const int rr = *r / (h0.level() / order);
  QuasiHopfDatum model = build_taft(order, rr);
  std::vector<std::pair<Element, Element>> gen_map{{model.generators[0], big_g}, {model.generators[1], lift->x}};
  IsoCheck iso = verify_iso(model, h0, gen_map);
  return Identification{std::move(model), std::move(gen_map), std::move(iso)};
}

Identification identify_book64(const QuasiHopfDatum& h0, const Element& g, const Element& x, const Element& y) {
  const int order = grouplike_order(g);
  auto lx = find_skew_primitive(h0, x, g, order);
  auto ly = find_skew_primitive(h0, y, g, order);
  if (!lx || !ly) throw Error(ErrorCode::SolverFailed, "no skew-primitive lifts");
  QuasiHopfDatum model = build_book64();
  for (int swap = 0; swap < 2; ++swap) {
    const SkewPrimitiveLift& plus = swap ? *ly : *lx;
    const SkewPrimitiveLift& minus = swap ? *lx : *ly;
    if (plus.type.u != minus.type.u) continue;
    const Element gb = g.pow(plus.type.u);
    if (grouplike_order(gb) != 4) continue;
    // x₋ = Y g^{-u}: Δ = x₋⊗1 + g_b⁻¹⊗x₋
    const Element xm = minus.x * invert(gb);
    auto rp = conjugation_exponent(gb, plus.x);
    auto rm = conjugation_exponent(gb, xm);
    if (!rp || !rm || *rp != 1 || *rm != 3) continue;
    std::vector<std::pair<Element, Element>> gen_map{
        {model.generators[0], gb}, {model.generators[1], plus.x}, {model.generators[2], xm}};
    IsoCheck iso = verify_iso(model, h0, gen_map);
    return Identification{std::move(model), std::move(gen_map), std::move(iso)};
  }
  throw Error(ErrorCode::SolverFailed, "lifts do not match the book presentation");
}

}  // namespace qhopf

namespace qhopf {

Recovery recover_Aq(const UntwistResult& u, const Element& g, const Element& x, int n, int r) {
  const QuasiHopfDatum back = twist(u.h0, u.j);
  const Element a = g.pow(n);
  std::vector<Element> basis;
  for (int j = 0; j < n * n; ++j)
    for (int i = 0; i < n; ++i) basis.push_back(a.pow(i) * x.pow(j));
  Recovery out;
  out.sub = verify_sub_quasihopf(back, basis);
  if (!out.sub.ok) return out;
  QuasiHopfDatum sub = induced_datum(back, basis, "span{g^{ni}x^j}");
  QuasiHopfDatum model = build_Aq(n, r);
  // basis order matches the monomial order a^i x^j of the model
  auto as_sub = [&](Index k) { return Element::basis(sub.algebra, k); };
  out.iso = verify_iso(model, sub, {{model.generators[0], as_sub(1)}, {model.generators[1], as_sub(n)}});
  return out;
}

}  // namespace qhopf
