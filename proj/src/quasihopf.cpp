#include "qhopf/quasihopf.hpp"

#include <algorithm>
#include <deque>

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

Element combine(const AlgebraPtr& a, int arity, const SparseVec& coeffs, const std::vector<Element>& images) {
  Accumulator acc(a->level());
  for (const auto& [i, c] : coeffs) acc.add_scaled(images[i].coords(), c);
  return Element(a, arity, acc.finish());
}

std::vector<Index> digits_of(Index flat, Index dim, int arity) {
  std::vector<Index> d(static_cast<std::size_t>(arity));
  for (int p = arity - 1; p >= 0; --p) {
    d[p] = flat % dim;
    flat /= dim;
  }
  return d;
}

}  // namespace

CycScalar QuasiHopfDatum::epsilon(const Element& h) const {
  Element e = counit.apply(h);
  return e.is_zero() ? CycScalar(level()) : e.coords().front().second;
}

bool QuasiHopfDatum::is_hopf() const { return phi == Element::unit(algebra, 3); }

bool AxiomReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

const AxiomResult* AxiomReport::find(const std::string& axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return &r;
  return nullptr;
}

AxiomReport verify_axioms(const QuasiHopfDatum& q) {
  const auto& A = *q.algebra;
  const AlgebraPtr& ap = q.algebra;
  const int level = A.level();
  const Index dim = static_cast<Index>(A.dim());
  AxiomReport report;
  auto record = [&](const char* name, std::optional<std::vector<Index>> witness) {
    report.results.push_back(AxiomResult{name, !witness.has_value(), std::move(witness)});
  };

  std::vector<Element> basis, D, S;
  std::vector<CycScalar> eps;
  for (Index i = 0; i < dim; ++i) {
    basis.push_back(Element::basis(ap, i));
    D.push_back(q.delta.image(i));
    S.push_back(q.antipode.image(i));
    Element e = q.counit.image(i);
    eps.push_back(e.is_zero() ? CycScalar(level) : e.coords().front().second);
  }
  const Element one1 = Element::unit(ap, 1), one2 = Element::unit(ap, 2), one3 = Element::unit(ap, 3);
  auto eps_of = [&](const SparseVec& v) {
    CycScalar s(level);
    for (const auto& [i, c] : v) s += c * eps[i];
    return s;
  };
  const LinearMap* id = nullptr;

  // Φ Φ^{-1} = Φ^{-1} Φ = 1
  {
    std::optional<std::vector<Index>> w;
    if (q.phi * q.phi_inv != one3 || q.phi_inv * q.phi != one3) w = std::vector<Index>{};
    record("phi_invertible", w);
  }
  // (a) Δ and ε are unital algebra maps
  {
    std::optional<std::vector<Index>> wd, we;
    if (combine(ap, 2, A.unit(), D) != one2) wd = std::vector<Index>{};
    if (!eps_of(A.unit()).is_one()) we = std::vector<Index>{};
    for (Index i = 0; i < dim && !(wd && we); ++i)
      for (Index j = 0; j < dim && !(wd && we); ++j) {
        const auto& p = A.product(i, j);
        if (!wd && combine(ap, 2, p, D) != D[i] * D[j]) wd = std::vector<Index>{i, j};
        if (!we && eps_of(p) != eps[i] * eps[j]) we = std::vector<Index>{i, j};
      }
    record("a_delta_algebra_map", wd);
    record("a_counit_algebra_map", we);
  }
  // (b) (ε⊗id)Δ = id = (id⊗ε)Δ
  {
    std::optional<std::vector<Index>> w;
    for (Index i = 0; i < dim && !w; ++i) {
      if (apply_factorwise(D[i], {&q.counit, id}) != basis[i] ||
          apply_factorwise(D[i], {id, &q.counit}) != basis[i])
        w = std::vector<Index>{i};
    }
    record("b_counit", w);
  }
  // (c) (Δ⊗id)Δ(h) = Φ^{-1} (id⊗Δ)Δ(h) Φ
  {
    std::optional<std::vector<Index>> w;
    for (Index i = 0; i < dim && !w; ++i) {
      Element lhs = apply_factorwise(D[i], {&q.delta, id});
      Element rhs = q.phi_inv * apply_factorwise(D[i], {id, &q.delta}) * q.phi;
      if (lhs != rhs) w = std::vector<Index>{i};
    }
    record("c_quasi_coassociative", w);
  }
  // (d) pentagon
  {
    Element lhs = apply_factorwise(q.phi, {id, id, &q.delta}) * apply_factorwise(q.phi, {&q.delta, id, id});
    Element rhs = tensor_elem(one1, q.phi) * apply_factorwise(q.phi, {id, &q.delta, id}) * tensor_elem(q.phi, one1);
    record("d_pentagon", lhs == rhs ? std::nullopt : std::optional<std::vector<Index>>(std::vector<Index>{}));
  }
  // (e) (id⊗ε⊗id)(Φ) = 1⊗1
  {
    Element e = apply_factorwise(q.phi, {id, &q.counit, id});
    record("e_phi_counit", e == one2 ? std::nullopt : std::optional<std::vector<Index>>(std::vector<Index>{}));
  }
  // (f) Σ S(h1) α h2 = ε(h) α,  Σ h1 β S(h2) = ε(h) β
  {
    std::vector<SparseVec> s_alpha, beta_s;
    for (Index i = 0; i < dim; ++i) {
      s_alpha.push_back(A.multiply(S[i].coords(), q.alpha.coords()));
      beta_s.push_back(A.multiply(q.beta.coords(), S[i].coords()));
    }
    std::optional<std::vector<Index>> w;
    for (Index h = 0; h < dim && !w; ++h) {
      Accumulator left(level), right(level);
      for (const auto& [flat, c] : D[h].coords()) {
        Index i = flat / dim, j = flat % dim;
        left.add_scaled(A.multiply(s_alpha[i], A.basis_vector(j)), c);
        right.add_scaled(A.multiply(A.basis_vector(i), beta_s[j]), c);
      }
      if (left.finish() != sparse_scale(q.alpha.coords(), eps[h]) ||
          right.finish() != sparse_scale(q.beta.coords(), eps[h]))
        w = std::vector<Index>{h};
    }
    record("f_antipode_alpha_beta", w);
  }
  // (g) Σ X1 β S(X2) α X3 = 1,  Σ S(x1) α x2 β S(x3) = 1
  {
    std::vector<SparseVec> bsa(dim);
    for (Index j = 0; j < dim; ++j) bsa[j] = A.multiply(A.multiply(q.beta.coords(), S[j].coords()), q.alpha.coords());
    Accumulator first(level), second(level);
    for (const auto& [flat, c] : q.phi.coords()) {
      auto d = digits_of(flat, dim, 3);
      first.add_scaled(A.multiply(A.multiply(A.basis_vector(d[0]), bsa[d[1]]), A.basis_vector(d[2])), c);
    }
    for (const auto& [flat, c] : q.phi_inv.coords()) {
      auto d = digits_of(flat, dim, 3);
      SparseVec t = A.multiply(S[d[0]].coords(), q.alpha.coords());
      t = A.multiply(t, A.basis_vector(d[1]));
      t = A.multiply(t, q.beta.coords());
      t = A.multiply(t, S[d[2]].coords());
      second.add_scaled(t, c);
    }
    bool ok = first.finish() == A.unit() && second.finish() == A.unit();
    record("g_antipode_phi", ok ? std::nullopt : std::optional<std::vector<Index>>(std::vector<Index>{}));
  }
  // (h) S(uv) = S(v) S(u), S(1) = 1
  {
    std::optional<std::vector<Index>> w;
    if (combine(ap, 1, A.unit(), S) != one1) w = std::vector<Index>{};
    for (Index i = 0; i < dim && !w; ++i)
      for (Index j = 0; j < dim && !w; ++j)
        if (combine(ap, 1, A.product(i, j), S) != S[j] * S[i]) w = std::vector<Index>{i, j};
    record("h_antipode_antimultiplicative", w);
  }
  return report;
}

QuasiHopfDatum twist(const QuasiHopfDatum& q, const Element& j) {
  if (j.arity() != 2) throw Error(ErrorCode::ArityMismatch, "twist must have arity 2");
  const AlgebraPtr& ap = q.algebra;
  const Element one1 = Element::unit(ap, 1);
  const LinearMap* id = nullptr;
  if (apply_factorwise(j, {&q.counit, id}) != one1 || apply_factorwise(j, {id, &q.counit}) != one1)
    throw Error(ErrorCode::CounitConditionFailed, "(ε⊗id)(J) = (id⊗ε)(J) = 1 fails");
  const Element jinv = invert(j);

  QuasiHopfDatum out = q;
  std::vector<SparseVec> cols;
  for (Index i = 0; i < static_cast<Index>(q.dim()); ++i) cols.push_back((j * q.delta.image(i) * jinv).coords());
  out.delta = LinearMap(ap, 1, 2, std::move(cols));

  const Element j1 = tensor_elem(one1, j), j1inv = tensor_elem(one1, jinv);
  const Element jr = tensor_elem(j, one1), jrinv = tensor_elem(jinv, one1);
  out.phi = j1 * apply_factorwise(j, {id, &q.delta}) * q.phi * apply_factorwise(jinv, {&q.delta, id}) * jrinv;
  out.phi_inv = jr * apply_factorwise(j, {&q.delta, id}) * q.phi_inv * apply_factorwise(jinv, {id, &q.delta}) * j1inv;

  const auto& A = *ap;
  const Index dim = static_cast<Index>(A.dim());
  Accumulator alpha(A.level()), beta(A.level());
  for (const auto& [flat, c] : jinv.coords()) {
    Index a = flat / dim, b = flat % dim;
    alpha.add_scaled(A.multiply(A.multiply(q.antipode.column(a), q.alpha.coords()), A.basis_vector(b)), c);
  }
  for (const auto& [flat, c] : j.coords()) {
    Index a = flat / dim, b = flat % dim;
    beta.add_scaled(A.multiply(A.multiply(A.basis_vector(a), q.beta.coords()), q.antipode.column(b)), c);
  }
  out.alpha = Element(ap, 1, alpha.finish());
  out.beta = Element(ap, 1, beta.finish());
  out.name = q.name + "^J";
  return out;
}

LinearMap antipode_power(const QuasiHopfDatum& q, int k) {
  if (k < 0) throw Error(ErrorCode::BadParameter, "antipode power must be non-negative");
  LinearMap out = LinearMap::identity(q.algebra);
  for (int i = 0; i < k; ++i) out = compose(q.antipode, out);
  return out;
}

LinearMap adjoint_map(const Element& b) {
  const Element binv = invert(b);
  std::vector<SparseVec> cols;
  for (Index i = 0; i < static_cast<Index>(b.algebra().dim()); ++i)
    cols.push_back((b * Element::basis(b.parent(), i) * binv).coords());
  return LinearMap(b.parent(), 1, 1, std::move(cols));
}

bool is_inner(const LinearMap& f, const Element& b) { return f == adjoint_map(b); }

AlgebraPtr dual_algebra(const QuasiHopfDatum& q) {
  const AlgebraPtr& ap = q.algebra;
  const Index dim = static_cast<Index>(q.dim());
  if (!q.is_hopf()) throw Error(ErrorCode::NotCoassociative, "dual_algebra requires Φ = 1");
  const LinearMap* id = nullptr;
  for (Index i = 0; i < dim; ++i) {
    Element d = q.delta.image(i);
    if (apply_factorwise(d, {&q.delta, id}) != apply_factorwise(d, {id, &q.delta}))
      throw Error(ErrorCode::NotCoassociative, "Δ is not coassociative at e" + std::to_string(i));
  }
  std::vector<Accumulator> accs(dim * dim, Accumulator(q.level()));
  for (Index k = 0; k < dim; ++k)
    for (const auto& [flat, c] : q.delta.column(k)) accs[flat].add(k, c);
  std::vector<SparseVec> mult;
  mult.reserve(dim * dim);
  for (auto& a : accs) mult.push_back(a.finish());
  SparseVec unit;
  for (Index k = 0; k < dim; ++k) {
    const auto& col = q.counit.column(k);
    if (!col.empty()) unit.emplace_back(k, col.front().second);
  }
  std::vector<std::string> labels;
  for (Index k = 0; k < dim; ++k) labels.push_back(ap->label(k) + "*");
  return std::make_shared<StructureAlgebra>(static_cast<int>(dim), q.level(), std::move(mult), std::move(unit),
                                            std::nullopt, std::move(labels));
}

SparseVec dual_augmentation(const QuasiHopfDatum& q) { return q.algebra->unit(); }

namespace {

// Coordinates relative to a basis of A that starts with the given span basis
// and is completed by standard vectors. digits < span size ⇔ inside the span.
struct SpanCoordinates {
  std::size_t span_dim = 0;
  std::optional<LinearMap> coords;
  std::string failure;
};

SpanCoordinates span_coordinates(const QuasiHopfDatum& q, const std::vector<Element>& basis) {
  const auto& A = *q.algebra;
  const Index dim = static_cast<Index>(A.dim());
  SpanCoordinates out;
  out.span_dim = basis.size();
  EchelonBasis e(A.level());
  for (std::size_t b = 0; b < basis.size(); ++b)
    if (!e.insert_tagged(basis[b].coords(), b)) {
      out.failure = "basis is linearly dependent";
      return out;
    }
  Index next = basis.size();
  for (Index i = 0; i < dim; ++i)
    if (e.insert_tagged(A.basis_vector(i), next)) ++next;
  std::vector<SparseVec> cols;
  for (Index i = 0; i < dim; ++i) cols.push_back(*e.express(A.basis_vector(i)));
  out.coords.emplace(q.algebra, 1, 1, std::move(cols));
  return out;
}

bool inside(const Element& coords, std::size_t span_dim) {
  const Index dim = static_cast<Index>(coords.algebra().dim());
  for (const auto& [flat, c] : coords.coords()) {
    Index f = flat;
    for (int p = 0; p < coords.arity(); ++p) {
      if (f % dim >= span_dim) return false;
      f /= dim;
    }
  }
  return true;
}

Element in_coords(const LinearMap& c, const Element& x) {
  std::vector<const LinearMap*> maps(static_cast<std::size_t>(x.arity()), &c);
  return apply_factorwise(x, maps);
}

SubCheck check_span(const QuasiHopfDatum& q, const std::vector<Element>& basis, bool with_antipode) {
  auto sc = span_coordinates(q, basis);
  if (!sc.coords) return SubCheck{false, sc.failure};
  const LinearMap& c = *sc.coords;
  const std::size_t s = sc.span_dim;
  auto in_span = [&](const Element& x) { return inside(in_coords(c, x), s); };
  if (!in_span(Element::unit(q.algebra, 1))) return SubCheck{false, "unit not in span"};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!in_span(basis[i] * basis[j]))
        return SubCheck{false, "not closed under multiplication: (" + std::to_string(i) + "," + std::to_string(j) + ")"};
    if (!in_span(q.coproduct(basis[i]))) return SubCheck{false, "not closed under coproduct: " + std::to_string(i)};
    if (with_antipode && !in_span(q.antipode.apply(basis[i])))
      return SubCheck{false, "not closed under antipode: " + std::to_string(i)};
  }
  if (!in_span(q.phi) || !in_span(q.phi_inv)) return SubCheck{false, "associator not in span^{⊗3}"};
  if (with_antipode && (!in_span(q.alpha) || !in_span(q.beta))) return SubCheck{false, "alpha/beta not in span"};
  return SubCheck{};
}

}  // namespace

SubCheck verify_sub_quasihopf(const QuasiHopfDatum& q, const std::vector<Element>& basis) {
  return check_span(q, basis, true);
}

SubCheck verify_sub_quasibialgebra(const QuasiHopfDatum& q, const std::vector<Element>& basis) {
  return check_span(q, basis, false);
}

QuasiHopfDatum induced_datum(const QuasiHopfDatum& q, const std::vector<Element>& basis, const std::string& name) {
  auto check = verify_sub_quasihopf(q, basis);
  if (!check.ok) throw Error(ErrorCode::NotClosed, check.failure);
  auto sc = span_coordinates(q, basis);
  const LinearMap& c = *sc.coords;
  const Index big = static_cast<Index>(q.dim());
  const Index s = basis.size();
  // re-index a tensor from A-coordinates (digits < s) into the sub-basis
  auto restrict = [&](const Element& x) {
    Element y = in_coords(c, x);
    SparseVec out;
    for (const auto& [flat, v] : y.coords()) {
      Index f = flat, idx = 0, w = 1;
      for (int p = 0; p < x.arity(); ++p) {
        idx += (f % big) * w;
        w *= s;
        f /= big;
      }
      out.emplace_back(idx, v);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };
  std::vector<SparseVec> mult;
  for (Index i = 0; i < s; ++i)
    for (Index j = 0; j < s; ++j) mult.push_back(restrict(basis[i] * basis[j]));
  auto sub = std::make_shared<StructureAlgebra>(static_cast<int>(s), q.level(), std::move(mult),
                                                restrict(Element::unit(q.algebra, 1)));
  std::vector<SparseVec> dcols, ecols, scols;
  for (Index i = 0; i < s; ++i) {
    dcols.push_back(restrict(q.coproduct(basis[i])));
    ecols.push_back(q.counit.apply(basis[i]).coords());
    scols.push_back(restrict(q.antipode.apply(basis[i])));
  }
  QuasiHopfDatum out{name,
                     sub,
                     LinearMap(sub, 1, 2, std::move(dcols)),
                     LinearMap(sub, 1, 0, std::move(ecols)),
                     Element(sub, 3, restrict(q.phi)),
                     Element(sub, 3, restrict(q.phi_inv)),
                     LinearMap(sub, 1, 1, std::move(scols)),
                     Element(sub, 1, restrict(q.alpha)),
                     Element(sub, 1, restrict(q.beta)),
                     {}};
  return out;
}

IsoCheck verify_iso(const QuasiHopfDatum& source, const QuasiHopfDatum& target,
                    const std::vector<std::pair<Element, Element>>& gen_map) {
  IsoCheck out;
  const auto& A = *source.algebra;
  const auto& B = *target.algebra;
  if (A.dim() != B.dim() || A.level() != B.level()) {
    out.failure = "dimension or level differs";
    return out;
  }
  const Index dim = static_cast<Index>(A.dim());
  // words in the generators, tagged, with their images
  EchelonBasis words(A.level());
  std::vector<SparseVec> word_images;
  std::deque<std::pair<SparseVec, SparseVec>> queue{{A.unit(), B.unit()}};
  while (!queue.empty() && words.rank() < dim) {
    auto [w, img] = std::move(queue.front());
    queue.pop_front();
    if (!words.insert_tagged(w, word_images.size())) continue;
    word_images.push_back(img);
    for (const auto& [g, gi] : gen_map) queue.emplace_back(A.multiply(g.coords(), w), B.multiply(gi.coords(), img));
  }
  if (words.rank() < dim) {
    out.failure = "generators do not generate the source";
    return out;
  }
  for (Index i = 0; i < dim; ++i) {
    Accumulator acc(A.level());
    const SparseVec coords = *words.express(A.basis_vector(i));
    for (const auto& [t, c] : coords) acc.add_scaled(word_images[t], c);
    out.basis_images.push_back(acc.finish());
  }
  const AlgebraPtr& bp = target.algebra;
  std::vector<Element> img;
  for (const auto& v : out.basis_images) img.push_back(Element(bp, 1, v));
  const LinearMap phi = LinearMap::from_images(bp, img);
  auto map_tensor = [&](const Element& x) {
    Element y(bp, x.arity(), x.coords());
    std::vector<const LinearMap*> maps(static_cast<std::size_t>(x.arity()), &phi);
    return apply_factorwise(y, maps);
  };
  if (!is_algebra_isomorphism(A, B, out.basis_images)) {
    out.failure = "not an algebra isomorphism";
    return out;
  }
  for (Index i = 0; i < dim; ++i) {
    if (map_tensor(source.delta.image(i)) != target.coproduct(img[i])) {
      out.failure = "coproduct mismatch at e" + std::to_string(i);
      return out;
    }
    if (source.counit.image(i).coords() != target.counit.apply(img[i]).coords()) {
      out.failure = "counit mismatch at e" + std::to_string(i);
      return out;
    }
  }
  if (map_tensor(source.phi) != target.phi) {
    out.failure = "associator mismatch";
    return out;
  }
  bool exact = map_tensor(source.alpha) == target.alpha && map_tensor(source.beta) == target.beta;
  for (Index i = 0; i < dim && exact; ++i)
    if (map_tensor(source.antipode.image(i)) != target.antipode.apply(img[i])) exact = false;
  if (exact) {
    out.ok = true;
    return out;
  }
  // gauge: u = φ(α_s) α_t^{-1}
  try {
    Element u = map_tensor(source.alpha) * invert(target.alpha);
    Element uinv = invert(u);
    bool ok = map_tensor(source.beta) == target.beta * uinv;
    for (Index i = 0; i < dim && ok; ++i)
      if (map_tensor(source.antipode.image(i)) != u * target.antipode.apply(img[i]) * uinv) ok = false;
    if (ok) {
      out.ok = true;
      out.antipode_gauged = true;
      return out;
    }
  } catch (const Error&) {
  }
  out.failure = "antipode data mismatch";
  return out;
}

}  // namespace qhopf
