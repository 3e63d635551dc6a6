#include "qfrob/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qfrob {

namespace {

long height(const Root& r) { return std::accumulate(r.alpha.begin(), r.alpha.end(), 0L); }

}  // namespace

RootDatum RootDatum::build(const std::string& t) {
  RootDatum rd;
  rd.type_ = t;
  if (t == "A1") {
    rd.a_ = {{2}};
    rd.d_ = {1};
  } else if (t == "A2") {
    rd.a_ = {{2, -1}, {-1, 2}};
    rd.d_ = {1, 1};
  } else if (t == "B2") {
    rd.a_ = {{2, -2}, {-1, 2}};
    rd.d_ = {1, 2};
  } else if (t == "G2") {
    rd.a_ = {{2, -3}, {-1, 2}};
    rd.d_ = {1, 3};
  } else {
    throw std::invalid_argument("unsupported Cartan type: " + t);
  }
  const int r = rd.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (rd.d_[static_cast<std::size_t>(i)] * rd.a(i, j) != rd.d_[static_cast<std::size_t>(j)] * rd.a(j, i))
        throw std::logic_error("Cartan matrix is not symmetrized by d");

  // Close the simple roots under the simple reflections (alpha coordinates).
  std::set<std::vector<long>> seen;
  std::deque<std::vector<long>> queue;
  for (int i = 0; i < r; ++i) {
    std::vector<long> e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      long p = 0;
      for (int j = 0; j < r; ++j) p += c[static_cast<std::size_t>(j)] * rd.a(i, j);
      auto s = c;
      s[static_cast<std::size_t>(i)] -= p;
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  for (const auto& c : seen) {
    if (std::any_of(c.begin(), c.end(), [](long x) { return x < 0; })) continue;
    Root root;
    root.alpha = c;
    root.omega.assign(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        root.omega[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(j)] * rd.a(i, j);
    long norm = 0;
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        norm += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k)] *
                rd.d_[static_cast<std::size_t>(j)] * rd.a(j, k);
    root.d = norm / 2;
    rd.positive_.push_back(root);
  }
  std::stable_sort(rd.positive_.begin(), rd.positive_.end(),
                   [](const Root& x, const Root& y) { return height(x) < height(y); });
  return rd;
}

Weight RootDatum::simple_root(int i) const {
  Weight w(static_cast<std::size_t>(rank()));
  for (int k = 0; k < rank(); ++k) w[static_cast<std::size_t>(k)] = a(k, i);
  return w;
}

CoWeight RootDatum::simple_coroot(int i) const {
  CoWeight w(static_cast<std::size_t>(rank()));
  for (int k = 0; k < rank(); ++k) w[static_cast<std::size_t>(k)] = a(i, k);
  return w;
}

long RootDatum::form(const Root& beta, const Weight& mu) const {
  long s = 0;
  for (int j = 0; j < rank(); ++j)
    s += beta.alpha[static_cast<std::size_t>(j)] * d_[static_cast<std::size_t>(j)] * mu[static_cast<std::size_t>(j)];
  return s;
}

bool RootDatum::dominant(const Weight& lam) const {
  return std::all_of(lam.begin(), lam.end(), [](long x) { return x >= 0; });
}

EllForm EllForm::make(const RootDatum& rd, const QParams& p) {
  EllForm f;
  const int r = rd.rank();
  f.gram.assign(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      f.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          p.ell_i[static_cast<std::size_t>(j)] * rd.a(i, j);
  return f;
}

long EllForm::operator()(const std::vector<long>& x, const std::vector<long>& y) const {
  long s = 0;
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = 0; j < gram.size(); ++j) s += x[i] * gram[i][j] * y[j];
  return s;
}

namespace {

// Solves the integer system a^T c = mu (rank <= 2) over Q; returns false if
// the solution is not integral.
bool solve_small(const std::vector<std::vector<long>>& m, const std::vector<long>& rhs,
                 std::vector<long>& out) {
  const std::size_t r = m.size();
  if (r == 1) {
    if (rhs[0] % m[0][0] != 0) return false;
    out = {rhs[0] / m[0][0]};
    return true;
  }
  if (r != 2) throw std::logic_error("solve_small: rank > 2");
  const long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const long x = rhs[0] * m[1][1] - m[0][1] * rhs[1];
  const long y = m[0][0] * rhs[1] - m[1][0] * rhs[0];
  if (x % det != 0 || y % det != 0) return false;
  out = {x / det, y / det};
  return true;
}

}  // namespace

std::vector<long> coroot_coordinates(const RootDatum& rd, const CoWeight& mu) {
  // mu = sum_i c_i alpha_i^vee, and alpha_i^vee has coweight coordinates a(i, .).
  const int r = rd.rank();
  std::vector<std::vector<long>> m(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r)));
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = rd.a(i, k);
  std::vector<long> c;
  if (!solve_small(m, mu, c)) throw std::invalid_argument("coweight is not in the coroot lattice");
  return c;
}

bool in_coroot_lattice(const RootDatum& rd, const CoWeight& mu) {
  try {
    coroot_coordinates(rd, mu);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

Weight phi_sc(const RootDatum& rd, const CoWeight& mu, const QParams& p) {
  Weight w(static_cast<std::size_t>(rd.rank()));
  for (int j = 0; j < rd.rank(); ++j)
    w[static_cast<std::size_t>(j)] = p.ell_i[static_cast<std::size_t>(j)] * mu[static_cast<std::size_t>(j)];
  return w;
}

Weight phi(const RootDatum& rd, const CoWeight& mu, const QParams& p) {
  if (!in_coroot_lattice(rd, mu)) throw std::invalid_argument("phi: argument not in Y");
  return phi_sc(rd, mu, p);
}

Weight dot_reflect(const RootDatum& rd, int i, const Weight& lam) {
  Weight out = lam;
  const long c = lam[static_cast<std::size_t>(i)] + 1;
  Weight a = rd.simple_root(i);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= c * a[k];
  return out;
}

AffineWeyl::AffineWeyl(RootDatum rd, QParams p) : rd_(std::move(rd)), p_(std::move(p)) {
  if (p_.d != rd_.d()) throw std::invalid_argument("AffineWeyl: symmetrizers do not match the root datum");
}

Weight AffineWeyl::dot_reflect_affine(const Weight& lam) const {
  const Root& theta = rd_.highest_root();
  Weight mu = lam;
  for (auto& x : mu) x += 1;
  const long pair = rd_.form(theta, mu) / theta.d;
  const long shift = pair - p_.ell / theta.d;
  for (std::size_t k = 0; k < mu.size(); ++k) mu[k] -= shift * theta.omega[k] + 1;
  return mu;
}

Weight AffineWeyl::translate(int j, long k, const Weight& lam) const {
  Weight a = rd_.simple_root(j);
  Weight out = lam;
  const long l = p_.ell_i[static_cast<std::size_t>(j)];
  for (std::size_t m = 0; m < out.size(); ++m) out[m] += k * l * a[m];
  return out;
}

CanonicalForm AffineWeyl::canonical(const Weight& lam) const {
  const Root& theta = rd_.highest_root();
  Weight mu = lam;
  for (auto& x : mu) x += 1;
  for (;;) {
    bool moved = false;
    for (int i = 0; i < rd_.rank(); ++i) {
      const long c = mu[static_cast<std::size_t>(i)];
      if (c < 0) {
        Weight a = rd_.simple_root(i);
        for (std::size_t m = 0; m < mu.size(); ++m) mu[m] -= c * a[m];
        moved = true;
      }
    }
    if (moved) continue;
    if (rd_.form(theta, mu) > p_.ell) {
      const long shift = rd_.form(theta, mu) / theta.d - p_.ell / theta.d;
      for (std::size_t m = 0; m < mu.size(); ++m) mu[m] -= shift * theta.omega[m];
      continue;
    }
    break;
  }
  CanonicalForm cf;
  cf.singular = rd_.form(theta, mu) == p_.ell ||
                std::any_of(mu.begin(), mu.end(), [](long x) { return x == 0; });
  for (auto& x : mu) x -= 1;
  cf.rep = mu;
  return cf;
}

bool AffineWeyl::same_block(const Weight& a, const Weight& b) const {
  return canonical(a).rep == canonical(b).rep;
}

bool AffineWeyl::in_translation_lattice(const Weight& x) const {
  // x = sum_j n_j l_j alpha_j, and alpha_j has omega coordinates a(., j).
  const int r = rd_.rank();
  std::vector<std::vector<long>> m(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p_.ell_i[static_cast<std::size_t>(j)] * rd_.a(i, j);
  std::vector<long> n;
  return solve_small(m, x, n);
}

std::vector<Weight> AffineWeyl::weyl_orbit(const Weight& mu) const {
  std::set<Weight> seen{mu};
  std::deque<Weight> queue{mu};
  while (!queue.empty()) {
    Weight x = queue.front();
    queue.pop_front();
    for (int i = 0; i < rd_.rank(); ++i) {
      Weight y = x;
      Weight a = rd_.simple_root(i);
      const long c = x[static_cast<std::size_t>(i)];
      for (std::size_t m = 0; m < y.size(); ++m) y[m] -= c * a[m];
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::set<Weight> orbit_in_window(const AffineWeyl& w, const Weight& lam, const Weight& lo,
                                 const Weight& hi) {
  const std::size_t r = lam.size();
  std::set<Weight> out;
  for (std::size_t k = 0; k < r; ++k)
    if (lo[k] > hi[k]) return out;
  Weight mu = lam;
  for (auto& x : mu) x += 1;
  const auto orbit = w.weyl_orbit(mu);
  // Walk every window point and test x + rho - w(mu) in phi(Y).
  Weight x = lo;
  for (;;) {
    for (const auto& wm : orbit) {
      Weight diff(r);
      for (std::size_t k = 0; k < r; ++k) diff[k] = x[k] + 1 - wm[k];
      if (w.in_translation_lattice(diff)) {
        out.insert(x);
        break;
      }
    }
    std::size_t k = 0;
    while (k < r && x[k] == hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == r) break;
    ++x[k];
  }
  return out;
}

SteinbergDecomposition steinberg_decompose(const RootDatum& rd, const Weight& lam, const QParams& p) {
  if (!rd.dominant(lam)) throw std::invalid_argument("steinberg_decompose: weight is not dominant");
  SteinbergDecomposition s;
  for (int i = 0; i < rd.rank(); ++i) {
    const long l = p.ell_i[static_cast<std::size_t>(i)];
    s.lam1.push_back(lam[static_cast<std::size_t>(i)] % l);
    s.mu.push_back(lam[static_cast<std::size_t>(i)] / l);
  }
  return s;
}

std::string weight_to_string(const std::vector<long>& w) {
  std::ostringstream os;
  if (w.size() == 1) {
    os << w[0];
    return os.str();
  }
  os << "(";
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
  os << ")";
  return os.str();
}

}  // namespace qfrob
