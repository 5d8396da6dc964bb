#include "qhopf/linalg.hpp"

#include <algorithm>

#include "qhopf/error.hpp"

namespace qhopf {

void Accumulator::add(Index i, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = map_.try_emplace(i, c);
  if (!inserted) it->second += c;
}

void Accumulator::add_scaled(const SparseVec& v, const CycScalar& c) {
  if (c.is_zero()) return;
  if (c.is_one()) {
    for (const auto& [i, x] : v) add(i, x);
  } else {
    for (const auto& [i, x] : v) add(i, x * c);
  }
}

SparseVec Accumulator::finish() {
  SparseVec out;
  out.reserve(map_.size());
  for (auto& [i, c] : map_)
    if (!c.is_zero()) out.emplace_back(i, std::move(c));
  map_.clear();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SparseVec sparse_axpy(const SparseVec& a, const CycScalar& c, const SparseVec& b) {
  if (c.is_zero()) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, b[j].second * c);
      ++j;
    } else {
      CycScalar s = a[i].second + b[j].second * c;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
  if (b.empty()) return a;
  return sparse_axpy(a, CycScalar(b.front().second.level(), Rational(1)), b);
}

SparseVec sparse_scale(const SparseVec& a, const CycScalar& c) {
  if (c.is_zero()) return {};
  SparseVec out = a;
  if (!c.is_one())
    for (auto& [i, x] : out) x = x * c;
  return out;
}

CycScalar sparse_get(const SparseVec& a, Index i, int level) {
  auto it = std::lower_bound(a.begin(), a.end(), i,
                             [](const auto& e, Index k) { return e.first < k; });
  if (it != a.end() && it->first == i) return it->second;
  return CycScalar(level);
}

SparseVec EchelonBasis::reduce(SparseVec v, SparseVec* coords) const {
  if (rows_.empty()) return v;
  Accumulator acc(level_);
  bool any = false;
  SparseVec c;
  for (const auto& [i, x] : v) {
    auto it = rows_.find(i);
    if (it == rows_.end()) continue;
    c.emplace_back(i, x);
    any = true;
  }
  if (coords) *coords = c;
  if (!any) return v;
  for (const auto& [i, x] : v) acc.add(i, x);
  for (const auto& [p, x] : c) acc.add_scaled(rows_.at(p).vec, -x);
  return acc.finish();
}

bool EchelonBasis::insert(const SparseVec& v) { return insert_tagged(v, ~Index{0}, nullptr); }

bool EchelonBasis::insert_tagged(const SparseVec& v, Index tag, SparseVec* relation) {
  SparseVec coords;
  SparseVec r = reduce(v, &coords);
  const bool tagged = tag != ~Index{0};
  SparseVec tags;
  if (tagged) {
    Accumulator acc(level_);
    acc.add(tag, CycScalar(level_, Rational(1)));
    for (const auto& [p, x] : coords) acc.add_scaled(rows_.at(p).tags, -x);
    tags = acc.finish();
  }
  if (r.empty()) {
    if (relation) *relation = std::move(tags);
    return false;
  }
  const Index pivot = r.front().first;
  const CycScalar inv = r.front().second.inverse();
  r = sparse_scale(r, inv);
  tags = sparse_scale(tags, inv);
  for (auto& [p, row] : rows_) {
    CycScalar f = sparse_get(row.vec, pivot, level_);
    if (f.is_zero()) continue;
    row.vec = sparse_axpy(row.vec, -f, r);
    if (tagged) row.tags = sparse_axpy(row.tags, -f, tags);
  }
  rows_.emplace(pivot, Row{std::move(r), std::move(tags)});
  return true;
}

std::vector<SparseVec> EchelonBasis::rows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row.vec);
  return out;
}

std::vector<Index> EchelonBasis::pivots() const {
  std::vector<Index> out;
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::optional<SparseVec> EchelonBasis::express(const SparseVec& v) const {
  SparseVec coords;
  SparseVec r = reduce(v, &coords);
  if (!r.empty()) return std::nullopt;
  Accumulator acc(level_);
  for (const auto& [p, x] : coords) acc.add_scaled(rows_.at(p).tags, x);
  return acc.finish();
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, int level)
    : rows_(rows), cols_(cols), level_(level), data_(rows * cols, CycScalar(level)) {}

std::vector<std::size_t> DenseMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if (!at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
    CycScalar inv = at(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j)
      if (!at(r, j).is_zero()) at(r, j) = at(r, j) * inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      CycScalar f = at(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        if (!at(r, j).is_zero()) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t DenseMatrix::rank() const {
  DenseMatrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<CycScalar>> DenseMatrix::nullspace() const {
  DenseMatrix m = *this;
  auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<CycScalar>> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycScalar> v(cols_, CycScalar(level_));
    v[free] = CycScalar(level_, Rational(1));
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, free);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace qhopf
