#include "qfrob/frobenius.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace qfrob {

namespace {

std::string first_nonzero(const CMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.row(i).empty()) {
      const auto& [j, x] = m.row(i).front();
      std::ostringstream os;
      os << "entry (" << i << "," << j << ") = " << x.to_string();
      return os.str();
    }
  return "none";
}

void expect_equal(Report& r, const CMatrix& a, const CMatrix& b, const std::string& name) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    r.fail(name, "shape mismatch", std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                                       std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    return;
  }
  CMatrix d = a - b;
  if (d.is_zero_matrix()) r.pass(name);
  else r.fail(name, "matrices differ", first_nonzero(d));
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

DualGroupRep empty_rep(const RootDatum& rd, std::size_t dim) {
  DualGroupRep v;
  v.datum = rd;
  for (int i = 0; i < rd.rank(); ++i) {
    v.e.emplace_back(dim, dim);
    v.f.emplace_back(dim, dim);
    v.h.emplace_back(dim, dim);
  }
  return v;
}

void fill_h(DualGroupRep& v) {
  for (int i = 0; i < v.rank(); ++i) {
    std::vector<CycloElem> d;
    for (const auto& w : v.weights) d.emplace_back(w[static_cast<std::size_t>(i)]);
    v.h[static_cast<std::size_t>(i)] = CMatrix::diagonal(d);
  }
}

// underline(V) (x) M: the module M repeated dim_v times.
WeightModule underline_tensor(std::size_t dim_v, const WeightModule& m) {
  WeightModule out;
  out.datum = m.datum;
  out.params = m.params;
  out.name = "C^" + std::to_string(dim_v) + "*" + m.name;
  for (std::size_t k = 0; k < dim_v; ++k) out.weights.insert(out.weights.end(), m.weights.begin(), m.weights.end());
  const CMatrix iv = CMatrix::identity(dim_v);
  for (int i = 0; i < m.rank(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    out.e.push_back(kron(iv, m.e[si]));
    out.f.push_back(kron(iv, m.f[si]));
    out.div_e.push_back(kron(iv, m.div_e[si]));
    out.div_f.push_back(kron(iv, m.div_f[si]));
  }
  return out;
}

bool same_small_action(const SmallQuantumView& a, const SmallQuantumView& b) {
  return a.ke == b.ke && a.f == b.f && a.classes == b.classes;
}

}  // namespace

bool DualGroupRep::weights_in_y() const {
  for (const auto& w : weights)
    if (!in_coroot_lattice(datum, w)) return false;
  return true;
}

DualGroupRep trivial_rep(const RootDatum& rd) {
  DualGroupRep v = empty_rep(rd, 1);
  v.weights.push_back(CoWeight(static_cast<std::size_t>(rd.rank()), 0));
  v.name = "C";
  return v;
}

DualGroupRep sl2_irrep(long n) {
  if (n < 0) throw std::invalid_argument("sl2_irrep: negative highest weight");
  const auto dim = static_cast<std::size_t>(n) + 1;
  DualGroupRep v = empty_rep(RootDatum::build("A1"), dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const long kk = static_cast<long>(k);
    v.weights.push_back({n - 2 * kk});
    if (k + 1 < dim) v.f[0].set(k + 1, k, CycloElem(1));
    if (k > 0) v.e[0].set(k - 1, k, CycloElem(kk * (n - kk + 1)));
  }
  fill_h(v);
  v.name = "V(" + std::to_string(n) + ")";
  return v;
}

DualGroupRep sl3_standard() {
  DualGroupRep v = empty_rep(RootDatum::build("A2"), 3);
  v.weights = {{1, 0}, {-1, 1}, {0, -1}};
  v.e[0].set(0, 1, CycloElem(1));
  v.e[1].set(1, 2, CycloElem(1));
  v.f[0].set(1, 0, CycloElem(1));
  v.f[1].set(2, 1, CycloElem(1));
  fill_h(v);
  v.name = "std";
  return v;
}

DualGroupRep sl3_dual() {
  DualGroupRep v = empty_rep(RootDatum::build("A2"), 3);
  v.weights = {{0, 1}, {1, -1}, {-1, 0}};
  v.e[1].set(0, 1, CycloElem(1));
  v.e[0].set(1, 2, CycloElem(1));
  v.f[1].set(1, 0, CycloElem(1));
  v.f[0].set(2, 1, CycloElem(1));
  fill_h(v);
  v.name = "std*";
  return v;
}

DualGroupRep tensor(const DualGroupRep& a, const DualGroupRep& b) {
  if (a.datum.type() != b.datum.type()) throw std::invalid_argument("tensor: reps of different types");
  DualGroupRep v;
  v.datum = a.datum;
  v.name = a.name + "*" + b.name;
  for (const auto& wa : a.weights)
    for (const auto& wb : b.weights) {
      CoWeight w = wa;
      for (std::size_t k = 0; k < w.size(); ++k) w[k] += wb[k];
      v.weights.push_back(std::move(w));
    }
  const CMatrix ia = CMatrix::identity(a.dim()), ib = CMatrix::identity(b.dim());
  for (int i = 0; i < a.rank(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    v.e.push_back(kron(a.e[si], ib) + kron(ia, b.e[si]));
    v.f.push_back(kron(a.f[si], ib) + kron(ia, b.f[si]));
    v.h.push_back(kron(a.h[si], ib) + kron(ia, b.h[si]));
  }
  return v;
}

DualGroupRep direct_sum(const DualGroupRep& a, const DualGroupRep& b) {
  if (a.datum.type() != b.datum.type()) throw std::invalid_argument("direct_sum: reps of different types");
  DualGroupRep v;
  v.datum = a.datum;
  v.name = a.name + "+" + b.name;
  v.weights = a.weights;
  v.weights.insert(v.weights.end(), b.weights.begin(), b.weights.end());
  for (int i = 0; i < a.rank(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    v.e.push_back(qfrob::direct_sum(a.e[si], b.e[si]));
    v.f.push_back(qfrob::direct_sum(a.f[si], b.f[si]));
    v.h.push_back(qfrob::direct_sum(a.h[si], b.h[si]));
  }
  return v;
}

Report validate_rep(const DualGroupRep& v) {
  Report r;
  const std::size_t n = v.dim();
  const int rk = v.rank();
  bool shapes = static_cast<int>(v.e.size()) == rk && static_cast<int>(v.f.size()) == rk &&
                static_cast<int>(v.h.size()) == rk;
  for (std::size_t i = 0; shapes && i < static_cast<std::size_t>(rk); ++i)
    for (const CMatrix* m : {&v.e[i], &v.f[i], &v.h[i]}) shapes = shapes && m->rows() == n && m->cols() == n;
  r.expect(shapes, "rep shapes", "one n x n matrix per vertex for e, f, h", "shape mismatch");
  if (!shapes) return r;
  for (int i = 0; i < rk; ++i) {
    const auto si = static_cast<std::size_t>(i);
    const std::string tag = "_" + std::to_string(i + 1);
    std::vector<CycloElem> d;
    for (const auto& w : v.weights) d.emplace_back(w[si]);
    expect_equal(r, v.h[si], CMatrix::diagonal(d), "h" + tag + " acts by <mu, alpha" + tag + ">");
    const CoWeight a = v.datum.simple_coroot(i);
    std::string bad;
    for (std::size_t p = 0; p < n && bad.empty(); ++p) {
      for (const auto& [q, x] : v.e[si].row(p)) {
        CoWeight w = v.weights[q];
        for (std::size_t k = 0; k < w.size(); ++k) w[k] += a[k];
        if (w != v.weights[p]) bad = "e" + tag + " entry (" + std::to_string(p) + "," + std::to_string(q) + ")";
      }
      for (const auto& [q, x] : v.f[si].row(p)) {
        CoWeight w = v.weights[q];
        for (std::size_t k = 0; k < w.size(); ++k) w[k] -= a[k];
        if (w != v.weights[p]) bad = "f" + tag + " entry (" + std::to_string(p) + "," + std::to_string(q) + ")";
      }
    }
    r.expect(bad.empty(), "grading of e" + tag + ", f" + tag, "shift by the simple coroot", bad);
    for (int j = 0; j < rk; ++j) {
      const auto sj = static_cast<std::size_t>(j);
      CMatrix c = commutator(v.e[si], v.f[sj]);
      if (i == j) c = c - v.h[si];
      if (c.is_zero_matrix()) r.pass("[e" + tag + ",f_" + std::to_string(j + 1) + "]");
      else r.fail("[e" + tag + ",f_" + std::to_string(j + 1) + "]", "Chevalley relation fails", first_nonzero(c));
      if (i == j) continue;
      // Cartan entry of the dual Lie algebra is a_ji.
      const long m = 1 - v.datum.a(j, i);
      CMatrix se(n, n), sf(n, n);
      Rational binom = 1;
      for (long s = 0; s <= m; ++s) {
        if (s > 0) binom = binom * (m - s + 1) / s;
        CycloElem c0(s % 2 == 0 ? binom : Rational(-binom));
        se = se + c0 * (power(v.e[si], static_cast<int>(m - s)) * v.e[sj] * power(v.e[si], static_cast<int>(s)));
        sf = sf + c0 * (power(v.f[si], static_cast<int>(m - s)) * v.f[sj] * power(v.f[si], static_cast<int>(s)));
      }
      r.expect(se.is_zero_matrix(), "Serre e (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", "",
               first_nonzero(se));
      r.expect(sf.is_zero_matrix(), "Serre f (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", "",
               first_nonzero(sf));
    }
    const int nn = static_cast<int>(n);
    r.expect(power(v.e[si], nn).is_zero_matrix() && power(v.f[si], nn).is_zero_matrix(),
             "e" + tag + ", f" + tag + " nilpotent", "", "nonzero power");
  }
  return r;
}

std::vector<CMatrix> rep_morphisms(const DualGroupRep& a, const DualGroupRep& b) {
  std::vector<std::pair<const CMatrix*, const CMatrix*>> gens;
  for (int i = 0; i < a.rank(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    gens.emplace_back(&a.e[si], &b.e[si]);
    gens.emplace_back(&a.f[si], &b.f[si]);
  }
  return solve_intertwiners(b.dim(), a.dim(), gens,
                            [&](std::size_t p, std::size_t q) { return b.weights[p] == a.weights[q]; });
}

CMatrix exp_nilpotent(const CMatrix& x, const Rational& t) {
  CMatrix out = CMatrix::identity(x.rows());
  CMatrix term = CMatrix::identity(x.rows());
  for (long k = 1; k <= static_cast<long>(x.rows()); ++k) {
    term = CycloElem(Rational(t / k)) * (term * x);
    if (term.is_zero_matrix()) return out;
    out = out + term;
  }
  if (!(term * x).is_zero_matrix()) throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
  return out;
}

CMatrix DualGroupElement::on(const DualGroupRep& v) const {
  CMatrix m = CMatrix::identity(v.dim());
  for (const auto& f : factors) {
    const auto si = static_cast<std::size_t>(f.vertex);
    m = m * exp_nilpotent(f.raising ? v.e.at(si) : v.f.at(si), f.t);
  }
  return m;
}

WeightModule frobenius_pullback(const DualGroupRep& v, const QParams& p) {
  if (p.d != v.datum.d()) throw std::invalid_argument("frobenius_pullback: parameters do not match the root datum");
  for (int li : p.ell_i)
    if (li % 2 != 0)
      throw std::invalid_argument("frobenius_pullback: odd l_i needs a sign twist that is not implemented");
  WeightModule m;
  m.datum = v.datum;
  m.params = p;
  m.name = "Fr*(" + v.name + ")";
  for (const auto& w : v.weights) m.weights.push_back(phi_sc(v.datum, w, p));
  for (int i = 0; i < v.rank(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    m.e.emplace_back(v.dim(), v.dim());
    m.f.emplace_back(v.dim(), v.dim());
    m.div_e.push_back(v.e[si]);
    m.div_f.push_back(v.f[si]);
  }
  return m;
}

ClassReducer::ClassReducer(const RootDatum& rd, const QParams& p, SmallForm form) {
  const auto r = static_cast<std::size_t>(rd.rank());
  std::vector<std::vector<long>> gens;
  for (int j = 0; j < rd.rank(); ++j) {
    const long lj = p.ell_i[static_cast<std::size_t>(j)];
    std::vector<long> g(r, 0);
    if (form == SmallForm::sc) {
      g[static_cast<std::size_t>(j)] = lj;
    } else {
      Weight a = rd.simple_root(j);
      for (std::size_t k = 0; k < r; ++k) g[k] = lj * a[k];
    }
    gens.push_back(std::move(g));
  }
  for (std::size_t c = 0; c < r; ++c) {
    // Euclid on column c until a single generator has a nonzero entry there.
    for (;;) {
      std::size_t best = gens.size();
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (gens[k][c] != 0 && (best == gens.size() || std::labs(gens[k][c]) < std::labs(gens[best][c]))) best = k;
      if (best == gens.size()) throw std::logic_error("ClassReducer: lattice is not of full rank");
      bool reduced = false;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k == best || gens[k][c] == 0) continue;
        const long q = gens[k][c] / gens[best][c];
        for (std::size_t j = 0; j < r; ++j) gens[k][j] -= q * gens[best][j];
        reduced = true;
      }
      bool single = true;
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (k != best && gens[k][c] != 0) single = false;
      if (single) {
        std::vector<long> b = gens[best];
        if (b[c] < 0)
          for (auto& x : b) x = -x;
        basis_.push_back(std::move(b));
        gens.erase(gens.begin() + static_cast<long>(best));
        break;
      }
      if (!reduced) throw std::logic_error("ClassReducer: elimination stalled");
    }
  }
}

Weight ClassReducer::reduce(const Weight& lam) const {
  Weight x = lam;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const long q = floor_div(x[k], basis_[k][k]);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] -= q * basis_[k][j];
  }
  return x;
}

bool ClassReducer::trivial(const Weight& lam) const {
  for (long c : reduce(lam))
    if (c != 0) return false;
  return true;
}

bool SmallQuantumView::trivial_action() const {
  for (const auto& m : ke)
    if (!m.is_zero_matrix()) return false;
  for (const auto& m : f)
    if (!m.is_zero_matrix()) return false;
  for (const auto& c : classes)
    for (long x : c)
      if (x != 0) return false;
  return true;
}

SmallQuantumView restrict_to_small(const WeightModule& m, SmallForm form) {
  SmallQuantumView v;
  v.module = std::make_shared<const WeightModule>(m);
  v.form = form;
  for (int i = 0; i < m.rank(); ++i) {
    v.ke.push_back(m.k_diag(i, 1) * m.e[static_cast<std::size_t>(i)]);
    v.f.push_back(m.f[static_cast<std::size_t>(i)]);
  }
  ClassReducer red(m.datum, m.params, form);
  for (const auto& w : m.weights) v.classes.push_back(red.reduce(w));
  return v;
}

Submodule small_invariants(const WeightModule& m, SmallForm form) {
  SmallQuantumView v = restrict_to_small(m, form);
  std::vector<std::size_t> support;
  std::vector<long> index(m.dim(), -1);
  ClassReducer red(m.datum, m.params, form);
  for (std::size_t k = 0; k < m.dim(); ++k)
    if (red.trivial(m.weights[k])) {
      index[k] = static_cast<long>(support.size());
      support.push_back(k);
    }
  Echelon<CycloElem> eqs(support.size());
  for (const auto* fam : {&v.ke, &v.f})
    for (const auto& g : *fam)
      for (std::size_t p = 0; p < g.rows(); ++p) {
        CVector row;
        for (const auto& [q, x] : g.row(p))
          if (index[q] >= 0) row.emplace_back(static_cast<std::size_t>(index[q]), x);
        if (!row.empty()) eqs.insert(row);
      }
  Echelon<CycloElem> span(m.dim());
  for (const auto& sol : eqs.orthogonal_complement()) {
    CVector x;
    for (const auto& [k, val] : sol) x.emplace_back(support[k], val);
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    span.insert(span.reduce(x));
  }
  return Submodule(v.module, std::move(span));
}

std::vector<CMatrix> small_intertwiners(const SmallQuantumView& a, const SmallQuantumView& b) {
  if (a.form != b.form) throw std::invalid_argument("small_intertwiners: views use different forms");
  std::vector<std::pair<const CMatrix*, const CMatrix*>> gens;
  for (std::size_t i = 0; i < a.ke.size(); ++i) {
    gens.emplace_back(&a.ke[i], &b.ke[i]);
    gens.emplace_back(&a.f[i], &b.f[i]);
  }
  return solve_intertwiners(b.dim(), a.dim(), gens,
                            [&](std::size_t p, std::size_t q) { return b.classes[p] == a.classes[q]; });
}

namespace {

// [K^-1; c; t] at zeta: acts on lam by qbinom(-<alpha_i^vee, lam> + c, t).
CMatrix kinv_binom_diag(const WeightModule& m, int i, long c, long t) {
  std::vector<CycloElem> d;
  const int di = m.params.d[static_cast<std::size_t>(i)];
  for (const auto& w : m.weights) d.push_back(m.params.eval(qbinom(-m.datum.pairing(i, w) + c, t, di)));
  return CMatrix::diagonal(d);
}

LMatrix kinv_binom_generic(const WeightModule& m, int i, long c, long t) {
  std::vector<LocalScalar> d;
  const int di = m.params.d[static_cast<std::size_t>(i)];
  for (const auto& w : m.weights) d.emplace_back(qbinom(-m.datum.pairing(i, w) + c, t, di));
  return LMatrix::diagonal(d);
}

}  // namespace

Report verify_commutator_identity(const WeightModule& m, int i) {
  Report r;
  const auto si = static_cast<std::size_t>(i);
  const long n = m.params.ell_i.at(si);
  const int di = m.params.d[si];
  const std::string tag = m.rank() > 1 ? " (vertex " + std::to_string(i + 1) + ")" : "";
  const CMatrix lhs = commutator(m.div_e[si], m.div_f[si]);
  CMatrix rhs(m.dim(), m.dim()), lit(m.dim(), m.dim());
  for (long k = 0; k < n; ++k) {
    const CMatrix ek = m.divided_e(i, k), fk = m.divided_f(i, k);
    rhs = rhs - ek * kinv_binom_diag(m, i, -2 * k, n - k) * fk;
    lit = lit + ek * m.kbinom_diag(i, 2 * k, n - k) * fk;
  }
  expect_equal(r, lhs, rhs, "commutator identity at zeta" + tag);
  if (m.generic) {
    const GenericLift& g = *m.generic;
    const LMatrix glhs = commutator(g.div_e[si], g.div_f[si]);
    LMatrix grhs(m.dim(), m.dim());
    for (long k = 0; k < n; ++k) {
      const LaurentPoly fact = qfact(k, di);
      const LMatrix ek = matrix_divide_exact(power(g.e[si], static_cast<int>(k)), fact, m.params.n);
      const LMatrix fk = matrix_divide_exact(power(g.f[si], static_cast<int>(k)), fact, m.params.n);
      grhs = grhs - ek * kinv_binom_generic(m, i, -2 * k, n - k) * fk;
    }
    r.expect(glhs == grhs, "commutator identity over the localization" + tag, "generic-v matrices",
             "generic matrices differ");
  }
  const CMatrix dl = lhs - lit;
  if (dl.is_zero_matrix()) r.pass("displayed sum with [K;2k;l-k]" + tag, "agrees on this module");
  else
    r.skip("displayed sum with [K;2k;l-k]" + tag,
           "informational: differs from the commutator on this module (" + first_nonzero(dl) +
               "); the corrected sum is the check above");
  return r;
}

DualGroupRep factorization_reconstruct(const WeightModule& m) {
  if (!restrict_to_small(m, SmallForm::sc).trivial_action())
    throw std::invalid_argument("factorization_reconstruct: the small quantum group acts nontrivially");
  DualGroupRep v;
  v.datum = m.datum;
  v.name = "V[" + m.name + "]";
  for (const auto& w : m.weights) {
    CoWeight mu(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      const long lj = m.params.ell_i[j];
      if (w[j] % lj != 0)
        throw std::invalid_argument("factorization_reconstruct: weight " + weight_to_string(w) +
                                    " is not in the image of phi_sc");
      mu[j] = w[j] / lj;
    }
    v.weights.push_back(std::move(mu));
  }
  for (int i = 0; i < m.rank(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    v.e.push_back(m.div_e[si]);
    v.f.push_back(m.div_f[si]);
    v.h.push_back(m.kbinom_diag(i, 0, m.params.ell_i[si]));
  }
  Report check = validate_rep(v);
  if (const Check* c = check.find_failure())
    throw std::invalid_argument("factorization_reconstruct: not a dual-group rep (" + c->name + ")");
  WeightModule back = frobenius_pullback(v, m.params);
  if (back.weights != m.weights || back.e != m.e || back.f != m.f || back.div_e != m.div_e ||
      back.div_f != m.div_f)
    throw std::logic_error("factorization_reconstruct: pullback does not return the module");
  return v;
}

std::optional<CMatrix> monoidal_intertwiner(const DualGroupRep& a, const DualGroupRep& b, const QParams& p) {
  return find_isomorphism(frobenius_pullback(tensor(a, b), p),
                          tensor_product(frobenius_pullback(a, p), frobenius_pullback(b, p)));
}

CMatrix swap_matrix(std::size_t dim_a, std::size_t dim_b) {
  CMatrix s(dim_a * dim_b, dim_a * dim_b);
  for (std::size_t x = 0; x < dim_a; ++x)
    for (std::size_t y = 0; y < dim_b; ++y) s.set(y * dim_a + x, x * dim_b + y, CycloElem(1));
  return s;
}

bool HeckeStructure::complete() const {
  for (const auto& a : alpha)
    if (!a) return false;
  return true;
}

std::optional<CMatrix> solve_alpha(const WeightModule& m, const DualGroupRep& v, SmallForm form,
                                   std::uint64_t seed) {
  const SmallQuantumView src = restrict_to_small(tensor_product(frobenius_pullback(v, m.params), m), form);
  const SmallQuantumView tgt = restrict_to_small(underline_tensor(v.dim(), m), form);
  if (same_small_action(src, tgt)) return CMatrix::identity(src.dim());
  auto basis = small_intertwiners(src, tgt);
  if (basis.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int trial = 0; trial < 16; ++trial) {
    CMatrix x(tgt.dim(), src.dim());
    for (const auto& b : basis) x = x + CycloElem(coef(rng)) * b;
    if (is_invertible(x)) return x;
  }
  return std::nullopt;
}

std::optional<CMatrix> alpha_for(const HeckeStructure& h, const DualGroupRep& v) {
  auto a = solve_alpha(*h.base, v, h.form, h.seed);
  if (!a || h.twisted_by.factors.empty()) return a;
  return kron(h.twisted_by.on(v), CMatrix::identity(h.base->dim())) * *a;
}

Report check_naturality(const HeckeStructure& h, std::size_t i, std::size_t j, const CMatrix& t) {
  Report r;
  const std::string name = "naturality " + h.reps[i].name + " -> " + h.reps[j].name;
  if (!h.alpha[i] || !h.alpha[j]) {
    r.skip(name, "alpha missing");
    return r;
  }
  const CMatrix tm = kron(t, CMatrix::identity(h.base->dim()));
  expect_equal(r, tm * *h.alpha[i], *h.alpha[j] * tm, name);
  return r;
}

Report check_tensor_compatibility(const HeckeStructure& h, std::size_t i, std::size_t j) {
  Report r;
  const DualGroupRep& v1 = h.reps[i];
  const DualGroupRep& v2 = h.reps[j];
  const std::string name = "tensor compatibility " + v1.name + ", " + v2.name;
  auto a12 = alpha_for(h, tensor(v1, v2));
  if (!h.alpha[i] || !h.alpha[j] || !a12) {
    r.fail(name, "an alpha in the composite is missing", "no intertwiner");
    return r;
  }
  const std::size_t dm = h.base->dim();
  const CMatrix im = CMatrix::identity(dm);
  const CMatrix sw = kron(swap_matrix(v1.dim(), v2.dim()), im);
  // Fr*(V1) (x) Fr*(V2) -> Fr*(V1 (x) V2) is the identity on underlying spaces.
  const CMatrix lhs = sw * *a12;
  const CMatrix rhs = kron(CMatrix::identity(v2.dim()), *h.alpha[i]) * sw *
                      kron(CMatrix::identity(v1.dim()), *h.alpha[j]);
  expect_equal(r, lhs, rhs, name);
  return r;
}

HeckeStructure build_hecke_structure(const WeightModule& m, const std::vector<DualGroupRep>& reps, SmallForm form,
                                     std::uint64_t seed) {
  HeckeStructure h;
  h.base = std::make_shared<const WeightModule>(m);
  h.form = form;
  h.reps = reps;
  h.seed = seed;
  for (const auto& v : reps) {
    auto a = solve_alpha(m, v, form, seed);
    const std::string tag = " for V = " + v.name;
    if (!a) {
      h.report.fail("alpha exists" + tag, "no invertible u_l-intertwiner Fr*(V) (x) M -> V (x) M",
                    "Hom space has no invertible element");
    } else {
      h.report.pass("alpha exists" + tag);
      h.report.expect(is_invertible(*a), "alpha invertible" + tag, "", "singular intertwiner");
    }
    h.alpha.push_back(std::move(a));
  }
  auto unit = alpha_for(h, trivial_rep(m.datum));
  h.report.expect(unit && *unit == CMatrix::identity(m.dim()), "alpha_C is the identity", "",
                  "alpha for the trivial rep differs from the identity");
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (reps[i].datum.type() != reps[j].datum.type()) continue;
      for (const auto& t : rep_morphisms(reps[i], reps[j])) h.report.merge(check_naturality(h, i, j, t));
      h.report.merge(check_tensor_compatibility(h, i, j));
    }
  return h;
}

HeckeStructure twist(const HeckeStructure& h, const DualGroupElement& g) {
  HeckeStructure out = h;
  const CMatrix im = CMatrix::identity(h.base->dim());
  for (std::size_t k = 0; k < h.reps.size(); ++k)
    if (out.alpha[k]) out.alpha[k] = kron(g.on(h.reps[k]), im) * *out.alpha[k];
  out.twisted_by = g * h.twisted_by;
  out.report = Report{};
  return out;
}

}  // namespace qfrob
