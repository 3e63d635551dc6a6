#pragma once

// Root data for types A1, A2, B2, G2, the forms and maps attached to the
// root-of-unity order, and the affine Weyl group acting by the dot action.
//
// Weights are integer vectors in the fundamental-weight basis w_i. Elements
// of Y and of its saturation X*_sc are integer vectors in the fundamental
// coweight basis (the basis dual to the simple roots).

#include <set>
#include <string>
#include <vector>

#include "qfrob/qcomb.hpp"

namespace qfrob {

using Weight = std::vector<long>;
using CoWeight = std::vector<long>;

struct Root {
  std::vector<long> alpha;  // coefficients in the simple roots
  Weight omega;             // coordinates in the fundamental weights
  long d = 1;               // (beta, beta) / 2
};

class RootDatum {
 public:
  // Throws std::invalid_argument for unsupported types.
  static RootDatum build(const std::string& cartan_type);

  const std::string& type() const { return type_; }
  int rank() const { return static_cast<int>(a_.size()); }
  // a(i, j) = <alpha_i^vee, alpha_j>
  long a(int i, int j) const { return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<int>& d() const { return d_; }

  Weight simple_root(int i) const;
  CoWeight simple_coroot(int i) const;
  Weight rho() const { return Weight(static_cast<std::size_t>(rank()), 1); }
  Weight zero() const { return Weight(static_cast<std::size_t>(rank()), 0); }

  // <alpha_i^vee, lam>
  long pairing(int i, const Weight& lam) const { return lam.at(static_cast<std::size_t>(i)); }
  // (beta, mu) for a root beta, with (alpha_i, w_j) = d_i delta_ij.
  long form(const Root& beta, const Weight& mu) const;

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return positive_.back(); }

  bool dominant(const Weight& lam) const;

  QParams params(int ell) const { return QParams::make(ell, d_); }

 private:
  std::string type_;
  std::vector<std::vector<long>> a_;
  std::vector<int> d_;
  std::vector<Root> positive_;  // sorted by height, highest root last
};

// The integral form (.,.)_l on Y: (alpha_i^vee, alpha_j^vee)_l = l_j a_ij.
struct EllForm {
  std::vector<std::vector<long>> gram;  // in the simple coroot basis
  static EllForm make(const RootDatum& rd, const QParams& p);
  long operator()(const std::vector<long>& x, const std::vector<long>& y) const;
};

// phi: Y -> X. The argument is in the fundamental coweight basis and must lie
// in Y (the coroot lattice); phi_sc accepts all of X*_sc.
Weight phi(const RootDatum& rd, const CoWeight& mu, const QParams& p);
Weight phi_sc(const RootDatum& rd, const CoWeight& mu, const QParams& p);
// Whether a fundamental-coweight vector lies in the coroot lattice Y.
bool in_coroot_lattice(const RootDatum& rd, const CoWeight& mu);
// Coordinates of mu in the simple coroot basis (mu must lie in Y).
std::vector<long> coroot_coordinates(const RootDatum& rd, const CoWeight& mu);

Weight dot_reflect(const RootDatum& rd, int i, const Weight& lam);

struct CanonicalForm {
  Weight rep;          // lam* with lam* + rho in the closed fundamental alcove
  bool singular = false;
};

class AffineWeyl {
 public:
  AffineWeyl(RootDatum rd, QParams p);

  const RootDatum& datum() const { return rd_; }
  const QParams& params() const { return p_; }

  Weight dot_reflect(int i, const Weight& lam) const { return qfrob::dot_reflect(rd_, i, lam); }
  // Dot action of the affine reflection in the upper wall of the fundamental alcove.
  Weight dot_reflect_affine(const Weight& lam) const;
  // Translation by phi(alpha_j^vee) = l_j alpha_j, k times.
  Weight translate(int j, long k, const Weight& lam) const;

  CanonicalForm canonical(const Weight& lam) const;
  bool same_block(const Weight& a, const Weight& b) const;
  // Whether x lies in the lattice phi(Y).
  bool in_translation_lattice(const Weight& x) const;
  // Finite Weyl orbit of mu under the linear action.
  std::vector<Weight> weyl_orbit(const Weight& mu) const;

 private:
  RootDatum rd_;
  QParams p_;
};

// Orbit points inside the box lo <= lam <= hi (coordinatewise).
std::set<Weight> orbit_in_window(const AffineWeyl& w, const Weight& lam, const Weight& lo,
                                 const Weight& hi);

struct SteinbergDecomposition {
  Weight lam1;      // 0 <= <alpha_i^vee, lam1> < l_i
  CoWeight mu;      // dominant, in X*_sc
};

// Throws std::invalid_argument for a non-dominant weight.
SteinbergDecomposition steinberg_decompose(const RootDatum& rd, const Weight& lam, const QParams& p);

std::string weight_to_string(const std::vector<long>& w);

}  // namespace qfrob
