#include "qfrob/qcomb.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qfrob {

QParams QParams::make(int ell, const std::vector<int>& d) {
  if (ell <= 0 || ell % 2 != 0) throw std::invalid_argument("ell must be a positive even integer");
  QParams p;
  p.ell = ell;
  p.d = d;
  p.n = 2 * ell;
  for (int di : d) {
    if (di < 1 || di > 3) throw std::invalid_argument("symmetrizer d_i must be 1, 2 or 3");
    if (ell % di != 0) throw std::invalid_argument("each d_i must divide ell");
    if (ell / di < 2) throw std::invalid_argument("ell_i = ell/d_i must be at least 2");
    p.ell_i.push_back(ell / di);
  }
  return p;
}

namespace {

// v^{a} - v^{-a}
LaurentPoly sym_diff(long a) {
  if (a == 0) return {};
  return LaurentPoly::v_pow(static_cast<int>(a)) - LaurentPoly::v_pow(static_cast<int>(-a));
}

LaurentPoly exact(const LaurentPoly& num, const LaurentPoly& den) {
  auto q = num.divide_exact(den);
  if (!q) throw std::logic_error("q-combinatorics: inexact division");
  return *q;
}

}  // namespace

LaurentPoly qint(long m, int d) {
  if (d <= 0) throw std::invalid_argument("qint: d must be positive");
  return exact(sym_diff(d * m), sym_diff(d));
}

LaurentPoly qfact(long m, int d) {
  if (m < 0) throw std::invalid_argument("qfact: negative argument");
  LaurentPoly r(1);
  for (long s = 1; s <= m; ++s) r = r * qint(s, d);
  return r;
}

LaurentPoly qbinom(long m, long t, int d) {
  if (t < 0) throw std::invalid_argument("qbinom: negative t");
  if (d <= 0) throw std::invalid_argument("qbinom: d must be positive");
  static std::mutex mu;
  static std::map<std::tuple<long, long, int>, LaurentPoly> cache;
  const auto key = std::make_tuple(m, t, d);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  LaurentPoly num(1), den(1);
  for (long s = 1; s <= t; ++s) {
    num = num * sym_diff(d * (m - s + 1));
    den = den * sym_diff(d * s);
  }
  LaurentPoly r = num.is_zero() ? LaurentPoly() : exact(num, den);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, r);
  return r;
}

Matrix<LocalScalar> matrix_divide_exact(const Matrix<LocalScalar>& m, const LaurentPoly& s, int n) {
  if (s.is_zero()) throw std::domain_error("matrix_divide_exact: division by zero");
  const LocalScalar ds(s);
  return m.map([&](const LocalScalar& x) {
    LocalScalar y = x / ds;
    if (!y.regular_at(n))
      throw std::domain_error("matrix_divide_exact: entry " + y.to_string() +
                              " is not regular at zeta; the matrix is not in the lattice");
    return y;
  });
}

Matrix<LocalScalar> matrix_divide_exact(const Matrix<LaurentPoly>& m, const LaurentPoly& s, int n) {
  return matrix_divide_exact(m.map([](const LaurentPoly& p) { return LocalScalar(p); }), s, n);
}

}  // namespace qfrob
