#pragma once

// Exact linear algebra over a field via incremental sparse row echelon forms.

#include <map>
#include <optional>
#include <vector>

#include "qfrob/matrix.hpp"

namespace qfrob {

// Span of a set of vectors in T^n, kept in row echelon form keyed by the
// leading index of each pivot row (leading coefficient 1).
template <class T>
class Echelon {
 public:
  explicit Echelon(std::size_t n = 0) : n_(n) {}

  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return pivots_.size(); }

  SparseVec<T> reduce(SparseVec<T> v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = pivots_.find(v[pos].first);
      if (it == pivots_.end()) {
        ++pos;
        continue;
      }
      T a = -v[pos].second;
      v = axpy(v, a, it->second);
      // Entries before pos are untouched since pivot rows start at the lead.
    }
    return v;
  }

  // Returns true if v was independent of the current span.
  bool insert(const SparseVec<T>& v) {
    SparseVec<T> r = reduce(v);
    if (r.empty()) return false;
    T inv = T(1) / r.front().second;
    for (auto& e : r) e.second = inv * e.second;
    pivots_.emplace(r.front().first, std::move(r));
    reduced_ = false;
    return true;
  }

  bool contains(const SparseVec<T>& v) const { return reduce(v).empty(); }

  // Bring to reduced row echelon form.
  void fully_reduce() {
    if (reduced_) return;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      SparseVec<T>& row = it->second;
      std::size_t pos = 1;
      while (pos < row.size()) {
        auto jt = pivots_.find(row[pos].first);
        if (jt == pivots_.end() || jt->first == it->first) {
          ++pos;
          continue;
        }
        row = axpy(row, T(-row[pos].second), jt->second);
      }
    }
    reduced_ = true;
  }

  const std::map<std::size_t, SparseVec<T>>& pivots() const { return pivots_; }

  std::vector<SparseVec<T>> basis() {
    fully_reduce();
    std::vector<SparseVec<T>> b;
    for (const auto& [k, r] : pivots_) b.push_back(r);
    return b;
  }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    for (const auto& [k, r] : pivots_) out.push_back(k);
    return out;
  }

  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j)
      if (!pivots_.count(j)) out.push_back(j);
    return out;
  }

  // Basis of {x : r.x = 0 for every row r in the span}.
  std::vector<SparseVec<T>> orthogonal_complement() {
    fully_reduce();
    std::vector<SparseVec<T>> out;
    for (std::size_t f : free_columns()) {
      SparseVec<T> x;
      for (const auto& [lead, row] : pivots_) {
        T c = sparse_get(row, f);
        if (!is_zero(c)) x.emplace_back(lead, -c);
      }
      x.emplace_back(f, T(1));
      std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      out.push_back(std::move(x));
    }
    return out;
  }

  // Coordinates of v with respect to basis() when v lies in the span.
  std::optional<std::vector<T>> coordinates(const SparseVec<T>& v) {
    fully_reduce();
    std::vector<T> c;
    SparseVec<T> rem = v;
    for (const auto& [lead, row] : pivots_) {
      T x = sparse_get(v, lead);
      c.push_back(x);
      if (!is_zero(x)) rem = axpy(rem, T(-x), row);
    }
    if (!rem.empty()) return std::nullopt;
    return c;
  }

 private:
  std::size_t n_;
  std::map<std::size_t, SparseVec<T>> pivots_;
  bool reduced_ = true;
};

template <class T>
Echelon<T> row_space(const Matrix<T>& m) {
  Echelon<T> e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return row_space(m).rank();
}

// Columns form a basis of ker(m).
template <class T>
Matrix<T> nullspace(const Matrix<T>& m) {
  Echelon<T> e = row_space(m);
  auto basis = e.orthogonal_complement();
  return Matrix<T>::from_columns(m.cols(), basis);
}

template <class T>
std::vector<SparseVec<T>> nullspace_vectors(const Matrix<T>& m) {
  Echelon<T> e = row_space(m);
  return e.orthogonal_complement();
}

// Columns form a basis of the column space of m.
template <class T>
Matrix<T> column_space(const Matrix<T>& m) {
  Matrix<T> t = m.transpose();
  Echelon<T> e = row_space(t);
  return Matrix<T>::from_columns(m.rows(), e.basis());
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  // Row-reduce [m | I].
  Echelon<T> e(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec<T> r = m.row(i);
    r.emplace_back(n + i, T(1));
    e.insert(r);
  }
  e.fully_reduce();
  Matrix<T> inv(n, n);
  std::size_t count = 0;
  for (const auto& [lead, row] : e.pivots()) {
    if (lead >= n) return std::nullopt;
    SparseVec<T> r;
    for (const auto& [j, x] : row)
      if (j >= n) r.emplace_back(j - n, x);
    inv.set_row(lead, std::move(r));
    ++count;
  }
  if (count != n) return std::nullopt;
  return inv;
}

template <class T>
bool is_invertible(const Matrix<T>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

// Some x with m x = b, if one exists.
template <class T>
std::optional<SparseVec<T>> solve(const Matrix<T>& m, const SparseVec<T>& b) {
  const std::size_t n = m.cols();
  Echelon<T> e(n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseVec<T> r = m.row(i);
    T bi = sparse_get(b, i);
    if (!is_zero(bi)) r.emplace_back(n, bi);
    e.insert(r);
  }
  e.fully_reduce();
  SparseVec<T> x;
  for (const auto& [lead, row] : e.pivots()) {
    if (lead == n) return std::nullopt;
    T c = sparse_get(row, n);
    if (!is_zero(c)) x.emplace_back(lead, c);
  }
  return x;
}

}  // namespace qfrob
