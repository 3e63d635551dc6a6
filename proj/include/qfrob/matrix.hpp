#pragma once

// Row-sparse matrices over an exact scalar type T. T{} must be zero and
// T(1) one; is_zero(const T&) must be visible.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qfrob {

template <class T>
using SparseVec = std::vector<std::pair<std::size_t, T>>;

template <class T>
SparseVec<T> axpy(const SparseVec<T>& x, const T& a, const SparseVec<T>& y) {
  // x + a*y
  SparseVec<T> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      T v = a * y[j].second;
      if (!is_zero(v)) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      T v = x[i].second + a * y[j].second;
      if (!is_zero(v)) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class T>
SparseVec<T> sparse_from_dense(const std::vector<T>& v) {
  SparseVec<T> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out.emplace_back(i, v[i]);
  return out;
}

template <class T>
std::vector<T> dense_from_sparse(const SparseVec<T>& v, std::size_t n) {
  std::vector<T> out(n);
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

template <class T>
T sparse_get(const SparseVec<T>& v, std::size_t i) {
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return T{};
}

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, T(1));
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      if (!is_zero(d[i])) m.rows_[i].emplace_back(i, d[i]);
    return m;
  }
  static Matrix from_columns(std::size_t rows, const std::vector<SparseVec<T>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [i, x] : cols[j]) m.rows_[i].emplace_back(j, x);
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  T get(std::size_t i, std::size_t j) const { return sparse_get(rows_.at(i), j); }
  void set(std::size_t i, std::size_t j, T v) {
    check(i, j);
    auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != r.end() && it->first == j) {
      if (is_zero(v)) r.erase(it);
      else it->second = std::move(v);
    } else if (!is_zero(v)) {
      r.insert(it, {j, std::move(v)});
    }
  }
  void add_to(std::size_t i, std::size_t j, const T& v) { set(i, j, get(i, j) + v); }

  const SparseVec<T>& row(std::size_t i) const { return rows_.at(i); }
  void set_row(std::size_t i, SparseVec<T> r) { rows_.at(i) = std::move(r); }

  SparseVec<T> column(std::size_t j) const {
    SparseVec<T> out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      T x = get(i, j);
      if (!is_zero(x)) out.emplace_back(i, std::move(x));
    }
    return out;
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }
  bool is_zero_matrix() const {
    for (const auto& r : rows_)
      if (!r.empty()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto& [j, x] : rows_[i]) t.rows_[j].emplace_back(i, x);
    return t;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))> {
    using U = decltype(f(std::declval<T>()));
    Matrix<U> m(rows_.size(), cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      SparseVec<U> r;
      for (const auto& [j, x] : rows_[i]) {
        U y = f(x);
        if (!is_zero(y)) r.emplace_back(j, std::move(y));
      }
      m.set_row(i, std::move(r));
    }
    return m;
  }

  SparseVec<T> apply(const SparseVec<T>& x) const {
    SparseVec<T> out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      T acc{};
      bool any = false;
      std::size_t a = 0, b = 0;
      const auto& r = rows_[i];
      while (a < r.size() && b < x.size()) {
        if (r[a].first < x[b].first) ++a;
        else if (x[b].first < r[a].first) ++b;
        else {
          acc += r[a].second * x[b].second;
          any = true;
          ++a;
          ++b;
        }
      }
      if (any && !is_zero(acc)) out.emplace_back(i, std::move(acc));
    }
    return out;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& r : m.rows_)
      for (auto& e : r) e.second = -e.second;
    return m;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    same_shape(a, b);
    Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) m.rows_[i] = axpy(a.rows_[i], T(1), b.rows_[i]);
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    same_shape(a, b);
    Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) m.rows_[i] = axpy(a.rows_[i], T(-1), b.rows_[i]);
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix m(a.rows(), b.cols());
    std::vector<T> acc(b.cols());
    std::vector<char> used(b.cols(), 0);
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      touched.clear();
      for (const auto& [k, x] : a.rows_[i]) {
        for (const auto& [j, y] : b.rows_[k]) {
          if (!used[j]) {
            used[j] = 1;
            touched.push_back(j);
            acc[j] = x * y;
          } else {
            acc[j] += x * y;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      SparseVec<T> r;
      for (std::size_t j : touched) {
        if (!is_zero(acc[j])) r.emplace_back(j, std::move(acc[j]));
        acc[j] = T{};
        used[j] = 0;
      }
      m.rows_[i] = std::move(r);
    }
    return m;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix m(a.rows(), a.cols());
    if (is_zero(s)) return m;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (const auto& [j, x] : a.rows_[i]) {
        T y = s * x;
        if (!is_zero(y)) m.rows_[i].emplace_back(j, std::move(y));
      }
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const auto& x = a.rows_[i];
      const auto& y = b.rows_[i];
      if (x.size() != y.size()) return false;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k].first != y[k].first || !(x[k].second == y[k].second)) return false;
    }
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_.size() || j >= cols_) throw std::out_of_range("Matrix index");
  }
  static void same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
      throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t cols_ = 0;
  std::vector<SparseVec<T>> rows_;
};

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.rows(); ++k) {
      SparseVec<T> r;
      for (const auto& [j, x] : a.row(i))
        for (const auto& [l, y] : b.row(k)) {
          T z = x * y;
          if (!is_zero(z)) r.emplace_back(j * b.cols() + l, std::move(z));
        }
      m.set_row(i * b.rows() + k, std::move(r));
    }
  return m;
}

template <class T>
Matrix<T> power(const Matrix<T>& a, int n) {
  if (n < 0) throw std::invalid_argument("negative matrix power");
  Matrix<T> r = Matrix<T>::identity(a.rows());
  for (int k = 0; k < n; ++k) r = r * a;
  return r;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

// Block-diagonal sum.
template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) m.set_row(i, a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    SparseVec<T> r;
    for (const auto& [j, x] : b.row(i)) r.emplace_back(j + a.cols(), x);
    m.set_row(a.rows() + i, std::move(r));
  }
  return m;
}

}  // namespace qfrob
