#include "hochlab/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace hochlab {

SparseVector sparse_from_map(const std::map<int, Scalar>& entries) {
  SparseVector out;
  out.reserve(entries.size());
  for (const auto& [i, c] : entries)
    if (sgn(c) != 0) out.emplace_back(i, c);
  return out;
}

SparseVector sparse_axpy(const SparseVector& x, const Scalar& a, const SparseVector& y) {
  if (sgn(a) == 0) return x;
  SparseVector out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, a * y[j].second);
      ++j;
    } else {
      Scalar s = x[i].second + a * y[j].second;
      if (sgn(s) != 0) out.emplace_back(x[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

Scalar sparse_entry(const SparseVector& v, int index) {
  auto it = std::lower_bound(v.begin(), v.end(), index, [](const auto& e, int k) { return e.first < k; });
  return (it != v.end() && it->first == index) ? it->second : Scalar(0);
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  std::map<int, Scalar> acc;
  for (const auto& [j, c] : x)
    for (const auto& [i, v] : columns.at(j)) acc[i] += c * v;
  return sparse_from_map(acc);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : columns) total += c.size();
  return total;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows, b.cols);
  for (int j = 0; j < b.cols; ++j) out.columns[j] = a.apply(b.columns[j]);
  return out;
}

Echelon::Reduction Echelon::reduce(const SparseVector& v) const {
  std::map<int, Scalar> work;
  for (const auto& [i, c] : v) work.emplace(i, c);
  std::map<int, Scalar> tag;
  auto it = work.begin();
  while (it != work.end()) {
    auto p = pivot_row_.find(it->first);
    if (p == pivot_row_.end()) {
      ++it;
      continue;
    }
    const int pivot = it->first;
    const Scalar c = it->second;
    for (const auto& [k, x] : rows_[p->second]) {
      auto slot = work.try_emplace(k, 0).first;
      slot->second -= c * x;
      if (sgn(slot->second) == 0) work.erase(slot);
    }
    for (const auto& [k, x] : tags_[p->second]) {
      auto slot = tag.try_emplace(k, 0).first;
      slot->second -= c * x;
      if (sgn(slot->second) == 0) tag.erase(slot);
    }
    it = work.upper_bound(pivot);
  }
  return {sparse_from_map(work), sparse_from_map(tag)};
}

void Echelon::insert_reduced(Reduction r) {
  const int pivot = r.residual.front().first;
  const Scalar lead = r.residual.front().second;
  if (lead != 1) {
    for (auto& e : r.residual) e.second /= lead;
    for (auto& e : r.tag) e.second /= lead;
  }
  pivot_row_.emplace(pivot, rows_.size());
  rows_.push_back(std::move(r.residual));
  tags_.push_back(std::move(r.tag));
}

void Echelon::append(SparseVector row, SparseVector tag) {
  if (row.empty() || pivot_row_.count(row.front().first)) throw std::logic_error("invalid echelon row");
  insert_reduced({std::move(row), std::move(tag)});
}

bool Echelon::insert(const SparseVector& v, const SparseVector& tag) {
  Reduction r = reduce(v);
  if (r.residual.empty()) return false;
  // The reduction accumulated minus the tags of subtracted rows.
  r.tag = sparse_axpy(r.tag, 1, tag);
  insert_reduced(std::move(r));
  return true;
}

std::size_t rank(const SparseMatrix& m) {
  Echelon e;
  for (const auto& c : m.columns) e.insert(c);
  return e.rank();
}

std::vector<SparseVector> kernel(const SparseMatrix& m) {
  Echelon e;
  std::vector<SparseVector> out;
  for (int j = 0; j < m.cols; ++j) {
    Echelon::Reduction r = e.reduce(m.columns[j]);
    SparseVector tag = sparse_axpy(r.tag, 1, SparseVector{{j, Scalar(1)}});
    if (r.residual.empty()) {
      out.push_back(std::move(tag));
    } else {
      r.tag = std::move(tag);
      e.insert_reduced(std::move(r));
    }
  }
  return out;
}

}  // namespace hochlab
