#pragma once

#include <string>

#include "qfrob/cyclo.hpp"
#include "qfrob/laurent.hpp"

namespace qfrob {

// A fraction num/den of Laurent polynomials. Membership in the localization
// at v = zeta is a property of the pair (value, N) and is checked by
// regular_at / local_eval, not at construction.
class LocalScalar {
 public:
  LocalScalar() : den_(1) {}
  LocalScalar(long c) : num_(c), den_(1) {}                      // NOLINT
  LocalScalar(const Rational& c) : num_(c), den_(1) {}           // NOLINT
  LocalScalar(LaurentPoly p) : num_(std::move(p)), den_(1) {}    // NOLINT
  LocalScalar(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == LaurentPoly(1); }

  LocalScalar operator-() const;
  friend LocalScalar operator+(const LocalScalar& a, const LocalScalar& b);
  friend LocalScalar operator-(const LocalScalar& a, const LocalScalar& b) { return a + (-b); }
  friend LocalScalar operator*(const LocalScalar& a, const LocalScalar& b);
  friend LocalScalar operator/(const LocalScalar& a, const LocalScalar& b);
  LocalScalar& operator+=(const LocalScalar& o) { return *this = *this + o; }
  LocalScalar& operator-=(const LocalScalar& o) { return *this = *this - o; }
  LocalScalar& operator*=(const LocalScalar& o) { return *this = *this * o; }
  friend bool operator==(const LocalScalar& a, const LocalScalar& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const LocalScalar& a, const LocalScalar& b) { return !(a == b); }

  // den(zeta_n) != 0
  bool regular_at(int n) const;
  std::string to_string() const;

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

inline bool is_zero(const LocalScalar& x) { return x.is_zero(); }
inline std::string to_string(const LocalScalar& x) { return x.to_string(); }

// num(zeta)/den(zeta) in Q(zeta_n). Throws std::domain_error when the
// denominator vanishes at zeta.
CycloElem local_eval(const LocalScalar& x, int n);

}  // namespace qfrob
