#pragma once

// Quantum integers, factorials and binomials, and the root-of-unity
// parameters they are specialized at.

#include <vector>

#include "qfrob/cyclo.hpp"
#include "qfrob/laurent.hpp"
#include "qfrob/local_scalar.hpp"
#include "qfrob/matrix.hpp"

namespace qfrob {

struct QParams {
  int ell = 0;
  std::vector<int> d;      // symmetrizers per vertex
  std::vector<int> ell_i;  // ell / d_i
  int n = 0;               // 2 * ell, the order of zeta

  // Throws std::invalid_argument unless ell is even, each d_i in {1,2,3}
  // divides ell and each ell_i >= 2.
  static QParams make(int ell, const std::vector<int>& d);

  CycloElem zeta_pow(long k) const { return CycloElem::zeta_power(n, k); }
  CycloElem eval(const LaurentPoly& p) const { return p.eval(n); }
  CycloElem eval(const LocalScalar& x) const { return local_eval(x, n); }
};

// (v^{dm} - v^{-dm}) / (v^d - v^{-d})
LaurentPoly qint(long m, int d);
// prod_{s=1}^{m} qint(s, d); m >= 0
LaurentPoly qfact(long m, int d);
// prod_{s=1}^{t} (v^{d(m-s+1)} - v^{-d(m-s+1)}) / (v^{ds} - v^{-ds}); t >= 0
LaurentPoly qbinom(long m, long t, int d);

// Entrywise M / s in the localization. Throws std::domain_error when a
// reduced denominator vanishes at zeta_n.
Matrix<LocalScalar> matrix_divide_exact(const Matrix<LaurentPoly>& m, const LaurentPoly& s, int n);
Matrix<LocalScalar> matrix_divide_exact(const Matrix<LocalScalar>& m, const LaurentPoly& s, int n);

}  // namespace qfrob
