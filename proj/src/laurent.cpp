#include "qfrob/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qfrob {

LaurentPoly::LaurentPoly(long c) : c_{Rational(c)} { trim(); }
LaurentPoly::LaurentPoly(const Rational& c) : c_{c} { trim(); }
LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs) : low_(low), c_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::v_pow(int k, const Rational& c) { return LaurentPoly(k, {c}); }

void LaurentPoly::trim() {
  while (!c_.empty() && qfrob::is_zero(c_.back())) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && qfrob::is_zero(c_[lead])) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

Rational LaurentPoly::coeff(int e) const {
  if (c_.empty() || e < low_ || e > high()) return 0;
  return c_[static_cast<std::size_t>(e - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  std::vector<Rational> v(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(low_ - lo) + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
  low_ = lo;
  c_ = std::move(v);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (qfrob::is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(v));
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& o) const {
  if (o.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (is_zero()) return LaurentPoly();
  QPoly q, r;
  QPoly::divmod(QPoly(c_), QPoly(o.c_), q, r);
  if (!r.is_zero()) return std::nullopt;
  return LaurentPoly(low_ - o.low_, q.coeffs());
}

CycloElem LaurentPoly::eval(int n) const {
  if (is_zero()) return CycloElem();
  const CycloField& f = CycloField::get(n);
  std::vector<Rational> acc(static_cast<std::size_t>(f.degree()));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (qfrob::is_zero(c_[i])) continue;
    const auto& p = f.power(low_ + static_cast<int>(i));
    for (std::size_t j = 0; j < p.size(); ++j)
      if (!qfrob::is_zero(p[j])) acc[j] += c_[i] * p[j];
  }
  return CycloElem(n, std::move(acc));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    Rational x = coeff(e);
    if (qfrob::is_zero(x)) continue;
    if (!first) os << (sgn(x) < 0 ? " - " : " + ");
    else if (sgn(x) < 0) os << "-";
    Rational ax = abs(x);
    if (e == 0) {
      os << ax.get_str();
    } else {
      if (ax != 1) os << ax.get_str() << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qfrob
