#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfrob/cyclo.hpp"
#include "qfrob/qpoly.hpp"
#include "qfrob/rational.hpp"

namespace qfrob {

// Laurent polynomial in v with rational coefficients. Stored densely from the
// lowest to the highest nonzero exponent; both ends are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);               // NOLINT
  LaurentPoly(const Rational& c);    // NOLINT
  LaurentPoly(int low, std::vector<Rational> coeffs);

  // c * v^k
  static LaurentPoly v_pow(int k, const Rational& c = 1);

  bool is_zero() const { return c_.empty(); }
  bool is_monomial() const { return c_.size() == 1; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  Rational coeff(int e) const;
  const std::vector<Rational>& dense() const { return c_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Quotient if o divides *this in Q[v, 1/v], else nullopt.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& o) const;

  // Value at z = zeta_n.
  CycloElem eval(int n) const;

  // The polynomial v^{-low} * p, together with low.
  QPoly to_qpoly() const { return QPoly(c_); }

  std::string to_string() const;

 private:
  void trim();
  int low_ = 0;
  std::vector<Rational> c_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline std::string to_string(const LaurentPoly& p) { return p.to_string(); }

}  // namespace qfrob
