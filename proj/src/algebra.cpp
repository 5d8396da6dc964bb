#include "qhopf/algebra.hpp"

#include <deque>

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

Index ipow(Index base, int e) {
  Index r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void decode(Index flat, Index dim, int arity, Index* digits) {
  for (int p = arity - 1; p >= 0; --p) {
    digits[p] = flat % dim;
    flat /= dim;
  }
}

CycScalar one(int level) { return CycScalar(level, Rational(1)); }

}  // namespace

StructureAlgebra::StructureAlgebra(int dim, int level, std::vector<SparseVec> mult, SparseVec unit,
                                   std::optional<std::vector<int>> grading,
                                   std::vector<std::string> labels)
    : dim_(dim),
      level_(level),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      grading_(std::move(grading)),
      labels_(std::move(labels)) {
  if (dim < 1) throw Error(ErrorCode::DimensionMismatch, "algebra dimension must be positive");
  if (mult_.size() != static_cast<std::size_t>(dim) * dim)
    throw Error(ErrorCode::DimensionMismatch, "multiplication table must have dim^2 entries");
  if (grading_ && grading_->size() != static_cast<std::size_t>(dim))
    throw Error(ErrorCode::DimensionMismatch, "grading must have dim entries");
  for (const auto& v : mult_) {
    if (v.size() > 1) monomial_ = false;
    for (const auto& [k, c] : v) {
      if (k >= static_cast<Index>(dim)) throw Error(ErrorCode::DimensionMismatch, "product index out of range");
      if (c.level() != level) throw Error(ErrorCode::LevelMismatch, "structure constant level");
    }
  }
}

std::string StructureAlgebra::label(Index i) const {
  if (i < labels_.size()) return labels_[i];
  return "e" + std::to_string(i);
}

SparseVec StructureAlgebra::basis_vector(Index i) const { return {{i, one(level_)}}; }

SparseVec StructureAlgebra::multiply(const SparseVec& u, const SparseVec& v) const {
  Accumulator acc(level_);
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) {
      const auto& p = product(i, j);
      if (p.empty()) continue;
      acc.add_scaled(p, a * b);
    }
  return acc.finish();
}

bool StructureAlgebra::check_associativity(std::array<Index, 3>* witness) const {
  for (Index i = 0; i < static_cast<Index>(dim_); ++i)
    for (Index j = 0; j < static_cast<Index>(dim_); ++j) {
      const auto& ij = product(i, j);
      for (Index k = 0; k < static_cast<Index>(dim_); ++k) {
        SparseVec lhs = multiply(ij, basis_vector(k));
        SparseVec rhs = multiply(basis_vector(i), product(j, k));
        if (lhs != rhs) {
          if (witness) *witness = {i, j, k};
          return false;
        }
      }
    }
  return true;
}

bool StructureAlgebra::check_unit() const {
  for (Index i = 0; i < static_cast<Index>(dim_); ++i) {
    SparseVec e = basis_vector(i);
    if (multiply(unit_, e) != e || multiply(e, unit_) != e) return false;
  }
  return true;
}

bool StructureAlgebra::respects_grading() const {
  if (!grading_) return true;
  const auto& g = *grading_;
  for (Index i = 0; i < static_cast<Index>(dim_); ++i)
    for (Index j = 0; j < static_cast<Index>(dim_); ++j)
      for (const auto& [k, c] : product(i, j))
        if (g[k] != g[i] + g[j]) return false;
  return true;
}

Element::Element(AlgebraPtr parent, int arity) : parent_(std::move(parent)), arity_(arity) {
  if (arity < 0) throw Error(ErrorCode::ArityMismatch, "negative arity");
}

Element::Element(AlgebraPtr parent, int arity, SparseVec coords)
    : parent_(std::move(parent)), arity_(arity), coords_(std::move(coords)) {}

Element Element::unit(const AlgebraPtr& parent, int arity) {
  Element u(parent, 0, {{0, one(parent->level())}});
  Element single(parent, 1, parent->unit());
  for (int i = 0; i < arity; ++i) u = tensor_elem(u, single);
  return u;
}

Element Element::basis(const AlgebraPtr& parent, Index i) {
  return Element(parent, 1, {{i, one(parent->level())}});
}

Element Element::scalar(const AlgebraPtr& parent, int arity, const CycScalar& c) {
  return unit(parent, arity) * c;
}

CycScalar Element::coefficient(Index flat) const { return sparse_get(coords_, flat, level()); }

Element Element::operator+(const Element& b) const {
  if (b.arity_ != arity_) throw Error(ErrorCode::ArityMismatch, "adding elements of different arity");
  return Element(parent_, arity_, sparse_add(coords_, b.coords_));
}

Element Element::operator-(const Element& b) const {
  if (b.arity_ != arity_) throw Error(ErrorCode::ArityMismatch, "subtracting elements of different arity");
  return Element(parent_, arity_, sparse_axpy(coords_, -one(level()), b.coords_));
}

Element Element::operator-() const { return *this * (-one(level())); }

Element Element::operator*(const CycScalar& c) const {
  return Element(parent_, arity_, sparse_scale(coords_, c));
}

Element Element::operator*(const Element& b) const { return multiply(*this, b); }

bool Element::operator==(const Element& b) const {
  return arity_ == b.arity_ && coords_ == b.coords_;
}

Element Element::pow(int k) const {
  if (k < 0) return invert(*this).pow(-k);
  Element acc = unit(parent_, arity_);
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

std::string Element::to_string() const {
  if (coords_.empty()) return "0";
  std::string out;
  const Index dim = static_cast<Index>(parent_->dim());
  std::vector<Index> digits(static_cast<std::size_t>(arity_));
  for (const auto& [flat, c] : coords_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    decode(flat, dim, arity_, digits.data());
    for (int p = 0; p < arity_; ++p) out += (p ? "⊗" : " ") + parent_->label(digits[p]);
  }
  return out;
}

Element multiply(const Element& u, const Element& v) {
  if (u.arity() != v.arity()) throw Error(ErrorCode::ArityMismatch, "multiplying elements of different arity");
  if (u.parent() != v.parent() && u.parent()->dim() != v.parent()->dim())
    throw Error(ErrorCode::DimensionMismatch, "elements of different algebras");
  const auto& A = u.algebra();
  const int k = u.arity();
  const Index dim = static_cast<Index>(A.dim());
  if (k == 0) {
    SparseVec out;
    if (!u.is_zero() && !v.is_zero()) out.emplace_back(0, u.coords()[0].second * v.coords()[0].second);
    return Element(u.parent(), 0, std::move(out));
  }
  std::vector<Index> weights(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) weights[p] = ipow(dim, k - 1 - p);

  std::vector<Index> vdig(v.terms() * static_cast<std::size_t>(k));
  for (std::size_t t = 0; t < v.terms(); ++t) decode(v.coords()[t].first, dim, k, &vdig[t * k]);
  std::vector<Index> udig(static_cast<std::size_t>(k));

  Accumulator acc(A.level());
  std::vector<const SparseVec*> prods(static_cast<std::size_t>(k));
  std::vector<std::pair<Index, CycScalar>> partial, next;
  for (const auto& [ui, uc] : u.coords()) {
    decode(ui, dim, k, udig.data());
    for (std::size_t t = 0; t < v.terms(); ++t) {
      const Index* vd = &vdig[t * k];
      bool zero = false, single = true;
      for (int p = 0; p < k; ++p) {
        prods[p] = &A.product(udig[p], vd[p]);
        if (prods[p]->empty()) {
          zero = true;
          break;
        }
        if (prods[p]->size() != 1) single = false;
      }
      if (zero) continue;
      CycScalar c = uc * v.coords()[t].second;
      if (single) {
        Index idx = 0;
        for (int p = 0; p < k; ++p) {
          const auto& [j, s] = prods[p]->front();
          idx += j * weights[p];
          if (!s.is_one()) c = c * s;
        }
        acc.add(idx, c);
        continue;
      }
      partial.assign(1, {0, c});
      for (int p = 0; p < k; ++p) {
        next.clear();
        for (const auto& [idx, pc] : partial)
          for (const auto& [j, s] : *prods[p]) next.emplace_back(idx + j * weights[p], pc * s);
        partial.swap(next);
      }
      for (const auto& [idx, pc] : partial) acc.add(idx, pc);
    }
  }
  return Element(u.parent(), k, acc.finish());
}

Element tensor_elem(const Element& u, const Element& v) {
  const Index dim = static_cast<Index>(u.algebra().dim());
  const Index shift = ipow(dim, v.arity());
  SparseVec out;
  out.reserve(u.terms() * v.terms());
  for (const auto& [i, a] : u.coords())
    for (const auto& [j, b] : v.coords()) out.emplace_back(i * shift + j, a * b);
  // lexicographic order is preserved by construction
  return Element(u.parent(), u.arity() + v.arity(), std::move(out));
}

Element invert(const Element& u) {
  const int level = u.level();
  EchelonBasis basis(level);
  std::vector<Element> powers;
  powers.push_back(Element::unit(u.parent(), u.arity()));
  SparseVec relation;
  for (Index n = 0;; ++n) {
    if (!basis.insert_tagged(powers.back().coords(), n, &relation)) break;
    powers.push_back(powers.back() * u);
  }
  // relation: Σ_i c_i u^i = 0, the minimal polynomial of u.
  CycScalar c0 = sparse_get(relation, 0, level);
  if (c0.is_zero()) throw Error(ErrorCode::NotInvertible, "element is a zero divisor");
  Element inv(u.parent(), u.arity());
  for (const auto& [i, c] : relation)
    if (i > 0) inv = inv + powers[i - 1] * c;
  inv = inv * (-c0.inverse());
  return inv;
}

LinearMap::LinearMap(AlgebraPtr parent, int source_arity, int target_arity, std::vector<SparseVec> columns)
    : parent_(std::move(parent)),
      source_arity_(source_arity),
      target_arity_(target_arity),
      columns_(std::move(columns)) {
  if (columns_.size() != ipow(static_cast<Index>(parent_->dim()), source_arity))
    throw Error(ErrorCode::DimensionMismatch, "linear map column count");
}

LinearMap LinearMap::identity(const AlgebraPtr& parent) {
  std::vector<SparseVec> cols;
  for (Index i = 0; i < static_cast<Index>(parent->dim()); ++i) cols.push_back(parent->basis_vector(i));
  return LinearMap(parent, 1, 1, std::move(cols));
}

LinearMap LinearMap::from_images(const AlgebraPtr& parent, const std::vector<Element>& images) {
  if (images.empty()) throw Error(ErrorCode::DimensionMismatch, "no images");
  std::vector<SparseVec> cols;
  for (const auto& e : images) cols.push_back(e.coords());
  return LinearMap(parent, 1, images.front().arity(), std::move(cols));
}

Element LinearMap::apply(const Element& u) const {
  if (u.arity() != source_arity_) throw Error(ErrorCode::ArityMismatch, "linear map source arity");
  Accumulator acc(parent_->level());
  for (const auto& [i, c] : u.coords()) acc.add_scaled(columns_[i], c);
  return Element(parent_, target_arity_, acc.finish());
}

Element LinearMap::image(Index i) const { return Element(parent_, target_arity_, columns_[i]); }

bool LinearMap::operator==(const LinearMap& b) const {
  return source_arity_ == b.source_arity_ && target_arity_ == b.target_arity_ && columns_ == b.columns_;
}

Element apply(const LinearMap& f, const Element& u) { return f.apply(u); }

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (g.target_arity() != f.source_arity()) throw Error(ErrorCode::ArityMismatch, "compose arity");
  std::vector<SparseVec> cols;
  cols.reserve(g.columns().size());
  for (Index i = 0; i < g.columns().size(); ++i) cols.push_back(f.apply(g.image(i)).coords());
  return LinearMap(g.parent(), g.source_arity(), f.target_arity(), std::move(cols));
}

LinearMap inverse_map(const LinearMap& f) {
  if (f.source_arity() != 1 || f.target_arity() != 1)
    throw Error(ErrorCode::ArityMismatch, "inverse_map needs an endomorphism of A");
  const auto& A = *f.parent();
  const int level = A.level();
  const Index dim = static_cast<Index>(A.dim());
  EchelonBasis basis(level);
  for (Index i = 0; i < dim; ++i)
    if (!basis.insert_tagged(f.column(i), i))
      throw Error(ErrorCode::NotInvertible, "linear map is singular");
  std::vector<SparseVec> cols;
  for (Index i = 0; i < dim; ++i) cols.push_back(*basis.express(A.basis_vector(i)));
  return LinearMap(f.parent(), 1, 1, std::move(cols));
}

Element apply_factorwise(const Element& u, std::initializer_list<const LinearMap*> maps) {
  return apply_factorwise(u, std::span<const LinearMap* const>(maps.begin(), maps.size()));
}

Element apply_factorwise(const Element& u, std::span<const LinearMap* const> maps) {
  const int k = u.arity();
  if (static_cast<int>(maps.size()) != k) throw Error(ErrorCode::ArityMismatch, "one map per tensor factor");
  const auto& A = u.algebra();
  const Index dim = static_cast<Index>(A.dim());
  std::vector<int> tarity(static_cast<std::size_t>(k));
  int out_arity = 0;
  for (int p = 0; p < k; ++p) {
    if (maps[p] && maps[p]->source_arity() != 1) throw Error(ErrorCode::ArityMismatch, "factor map source arity");
    tarity[p] = maps[p] ? maps[p]->target_arity() : 1;
    out_arity += tarity[p];
  }
  std::vector<Index> shifts(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) shifts[p] = ipow(dim, tarity[p]);

  Accumulator acc(A.level());
  std::vector<Index> dig(static_cast<std::size_t>(k));
  std::vector<std::pair<Index, CycScalar>> partial, next;
  for (const auto& [flat, c] : u.coords()) {
    decode(flat, dim, k, dig.data());
    partial.assign(1, {0, c});
    for (int p = 0; p < k && !partial.empty(); ++p) {
      next.clear();
      if (!maps[p]) {
        for (auto& [idx, pc] : partial) next.emplace_back(idx * dim + dig[p], std::move(pc));
      } else {
        const auto& col = maps[p]->column(dig[p]);
        for (const auto& [idx, pc] : partial)
          for (const auto& [j, s] : col) next.emplace_back(idx * shifts[p] + j, pc * s);
      }
      partial.swap(next);
    }
    for (const auto& [idx, pc] : partial) acc.add(idx, pc);
  }
  return Element(u.parent(), out_arity, acc.finish());
}

AlgebraPtr tensor_power(const AlgebraPtr& a, int k) {
  if (k < 1) throw Error(ErrorCode::BadParameter, "tensor power must be positive");
  const Index d = ipow(static_cast<Index>(a->dim()), k);
  std::vector<SparseVec> mult(d * d);
  for (Index i = 0; i < d; ++i) {
    Element ei(a, k, {{i, one(a->level())}});
    for (Index j = 0; j < d; ++j) {
      Element ej(a, k, {{j, one(a->level())}});
      mult[i * d + j] = (ei * ej).coords();
    }
  }
  return std::make_shared<StructureAlgebra>(static_cast<int>(d), a->level(), std::move(mult),
                                            Element::unit(a, k).coords());
}

std::vector<SparseVec> jacobson_radical(const StructureAlgebra& a) {
  const int level = a.level();
  const Index dim = static_cast<Index>(a.dim());
  // trace of left multiplication by e_k
  std::vector<CycScalar> tr(dim, CycScalar(level));
  for (Index k = 0; k < dim; ++k)
    for (Index i = 0; i < dim; ++i) tr[k] += sparse_get(a.product(k, i), i, level);
  DenseMatrix gram(dim, dim, level);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j)
      for (const auto& [k, c] : a.product(i, j))
        if (!tr[k].is_zero()) gram.at(i, j) += c * tr[k];
  EchelonBasis basis(level);
  for (const auto& v : gram.nullspace()) {
    SparseVec s;
    for (Index i = 0; i < dim; ++i)
      if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    basis.insert(s);
  }
  return basis.rows();
}

std::vector<SparseVec> product_space(const StructureAlgebra& a, const std::vector<SparseVec>& x,
                                     const std::vector<SparseVec>& y) {
  EchelonBasis basis(a.level());
  for (const auto& u : x)
    for (const auto& v : y) {
      SparseVec p = a.multiply(u, v);
      if (!p.empty()) basis.insert(p);
    }
  return basis.rows();
}

std::vector<std::vector<SparseVec>> radical_filtration(const StructureAlgebra& a) {
  std::vector<std::vector<SparseVec>> out;
  std::vector<SparseVec> whole;
  for (Index i = 0; i < static_cast<Index>(a.dim()); ++i) whole.push_back(a.basis_vector(i));
  out.push_back(whole);
  std::vector<SparseVec> rad = jacobson_radical(a);
  std::vector<SparseVec> cur = rad;
  while (!cur.empty()) {
    out.push_back(cur);
    if (out.size() > static_cast<std::size_t>(a.dim()) + 1)
      throw Error(ErrorCode::PreconditionFailed, "radical is not nilpotent");
    cur = product_space(a, rad, cur);
  }
  out.emplace_back();
  return out;
}

GradedAlgebra associated_graded(const StructureAlgebra& a) {
  const int level = a.level();
  auto filt = radical_filtration(a);
  const std::size_t steps = filt.size() - 1;  // filt[steps] is zero
  std::vector<std::vector<SparseVec>> comps(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    EchelonBasis e(level);
    for (const auto& v : filt[k + 1]) e.insert(v);
    for (const auto& v : filt[k]) {
      SparseVec r = e.reduce(v);
      if (r.empty()) continue;
      r = sparse_scale(r, r.front().second.inverse());
      e.insert(r);
      comps[k].push_back(std::move(r));
    }
  }
  std::vector<SparseVec> reps;
  std::vector<int> grading;
  std::vector<Index> offset(steps + 1, 0);
  for (std::size_t k = 0; k < steps; ++k) {
    offset[k + 1] = offset[k] + comps[k].size();
    for (const auto& v : comps[k]) {
      reps.push_back(v);
      grading.push_back(static_cast<int>(k));
    }
  }
  const Index grdim = reps.size();
  // coordinate systems modulo the next filtration step
  const Index sentinel = grdim;
  std::vector<EchelonBasis> coords;
  for (std::size_t k = 0; k < steps; ++k) {
    EchelonBasis e(level);
    Index t = 0;
    for (const auto& v : filt[k + 1]) e.insert_tagged(v, sentinel + t++);
    for (std::size_t b = 0; b < comps[k].size(); ++b) e.insert_tagged(comps[k][b], offset[k] + b);
    coords.push_back(std::move(e));
  }
  auto project = [&](const SparseVec& v, std::size_t k) {
    SparseVec out;
    if (k >= steps || v.empty()) return out;
    auto ex = coords[k].express(v);
    if (!ex) throw Error(ErrorCode::PreconditionFailed, "product escapes filtration step");
    for (auto& [t, c] : *ex)
      if (t < sentinel) out.emplace_back(t, c);
    return out;
  };
  std::vector<SparseVec> mult(grdim * grdim);
  for (Index i = 0; i < grdim; ++i)
    for (Index j = 0; j < grdim; ++j)
      mult[i * grdim + j] = project(a.multiply(reps[i], reps[j]), grading[i] + grading[j]);
  SparseVec unit = project(a.unit(), 0);
  auto alg = std::make_shared<StructureAlgebra>(static_cast<int>(grdim), level, std::move(mult), unit,
                                                grading);
  return GradedAlgebra{alg, std::move(reps)};
}

std::optional<std::vector<SparseVec>> graded_comparison(const StructureAlgebra& a, const GradedAlgebra& gr) {
  if (!a.grading()) throw Error(ErrorCode::PreconditionFailed, "algebra has no grading");
  const auto filt = radical_filtration(a);
  const auto& grd = *gr.algebra->grading();
  const Index sentinel = gr.representatives.size();
  std::vector<SparseVec> images;
  for (Index i = 0; i < static_cast<Index>(a.dim()); ++i) {
    const std::size_t d = static_cast<std::size_t>((*a.grading())[i]);
    if (d + 1 >= filt.size()) return std::nullopt;
    EchelonBasis e(a.level());
    Index t = 0;
    for (const auto& v : filt[d + 1]) e.insert_tagged(v, sentinel + t++);
    for (Index b = 0; b < sentinel; ++b)
      if (static_cast<std::size_t>(grd[b]) == d) e.insert_tagged(gr.representatives[b], b);
    const auto ex = e.express(a.basis_vector(i));
    if (!ex) return std::nullopt;
    SparseVec img;
    for (const auto& [b, c] : *ex)
      if (b < sentinel) img.emplace_back(b, c);
    images.push_back(std::move(img));
  }
  return images;
}

bool is_two_sided_ideal(const StructureAlgebra& a, const std::vector<SparseVec>& basis) {
  EchelonBasis e(a.level());
  for (const auto& v : basis) e.insert(v);
  for (const auto& v : basis)
    for (Index i = 0; i < static_cast<Index>(a.dim()); ++i) {
      SparseVec ei = a.basis_vector(i);
      if (!e.contains(a.multiply(ei, v)) || !e.contains(a.multiply(v, ei))) return false;
    }
  return true;
}

AlgebraPtr quotient_algebra(const StructureAlgebra& a, const std::vector<SparseVec>& ideal) {
  EchelonBasis e(a.level());
  for (const auto& v : ideal) e.insert(v);
  auto piv = e.pivots();
  std::vector<bool> is_piv(a.dim(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Index> keep, pos(a.dim(), 0);
  for (Index i = 0; i < static_cast<Index>(a.dim()); ++i)
    if (!is_piv[i]) {
      pos[i] = keep.size();
      keep.push_back(i);
    }
  const Index qd = keep.size();
  auto map_down = [&](const SparseVec& v) {
    SparseVec r = e.reduce(v), out;
    for (auto& [i, c] : r) out.emplace_back(pos[i], c);
    return out;
  };
  std::vector<SparseVec> mult(qd * qd);
  for (Index i = 0; i < qd; ++i)
    for (Index j = 0; j < qd; ++j) mult[i * qd + j] = map_down(a.product(keep[i], keep[j]));
  return std::make_shared<StructureAlgebra>(static_cast<int>(qd), a.level(), std::move(mult),
                                            map_down(a.unit()));
}

bool is_algebra_isomorphism(const StructureAlgebra& source, const StructureAlgebra& target,
                            const std::vector<SparseVec>& images) {
  if (source.dim() != target.dim() || images.size() != static_cast<std::size_t>(source.dim())) return false;
  EchelonBasis e(target.level());
  for (const auto& v : images)
    if (!e.insert(v)) return false;
  auto phi = [&](const SparseVec& v) {
    Accumulator acc(target.level());
    for (const auto& [i, c] : v) acc.add_scaled(images[i], c);
    return acc.finish();
  };
  if (phi(source.unit()) != target.unit()) return false;
  for (Index i = 0; i < static_cast<Index>(source.dim()); ++i)
    for (Index j = 0; j < static_cast<Index>(source.dim()); ++j)
      if (phi(source.product(i, j)) != target.multiply(images[i], images[j])) return false;
  return true;
}

std::vector<SparseVec> generated_subalgebra(const StructureAlgebra& a, const std::vector<SparseVec>& gens) {
  EchelonBasis e(a.level());
  std::deque<SparseVec> queue{a.unit()};
  while (!queue.empty()) {
    SparseVec v = std::move(queue.front());
    queue.pop_front();
    if (!e.insert(v)) continue;
    for (const auto& g : gens) queue.push_back(a.multiply(g, v));
  }
  return e.rows();
}

}  // namespace qhopf
