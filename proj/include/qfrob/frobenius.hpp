#pragma once

// Quantum Frobenius pullback, restriction to the small quantum group, the
// factorization of modules with trivial small action, and Hecke structures.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qfrob/repcore.hpp"

namespace qfrob {

// A representation of the Lie algebra of the dual group. Weights live in
// X*_sc (fundamental coweight coordinates); e_i raises by the simple coroot
// alpha_i^vee and h_i acts on mu by <mu, alpha_i> = mu_i.
struct DualGroupRep {
  RootDatum datum;
  std::vector<CoWeight> weights;
  std::vector<CMatrix> e, f, h;
  std::string name;

  std::size_t dim() const { return weights.size(); }
  int rank() const { return datum.rank(); }
  // Whether every weight lies in Y, i.e. V is a rep of the adjoint-type dual group.
  bool weights_in_y() const;

  friend bool operator==(const DualGroupRep& a, const DualGroupRep& b) {
    return a.datum.type() == b.datum.type() && a.weights == b.weights && a.e == b.e && a.f == b.f &&
           a.h == b.h;
  }
};

DualGroupRep trivial_rep(const RootDatum& rd);
// Irreducible rep of highest weight n for the dual of A1, basis v_0..v_n with
// f v_k = v_{k+1} and e v_k = k(n-k+1) v_{k-1}.
DualGroupRep sl2_irrep(long n);
DualGroupRep sl3_standard();
DualGroupRep sl3_dual();
DualGroupRep tensor(const DualGroupRep& a, const DualGroupRep& b);
DualGroupRep direct_sum(const DualGroupRep& a, const DualGroupRep& b);

// Chevalley relations, Serre relations, weight grading and nilpotency.
Report validate_rep(const DualGroupRep& v);
// Basis of the Lie-algebra intertwiners a -> b.
std::vector<CMatrix> rep_morphisms(const DualGroupRep& a, const DualGroupRep& b);
// exp(t x) for nilpotent x.
CMatrix exp_nilpotent(const CMatrix& x, const Rational& t);

// An element of the dual group written as a product of root-subgroup
// elements exp(t e_i) or exp(t f_i), leftmost factor applied last.
struct DualGroupElement {
  struct Factor {
    bool raising = true;
    int vertex = 0;
    Rational t;
  };
  std::vector<Factor> factors;

  CMatrix on(const DualGroupRep& v) const;
  friend DualGroupElement operator*(const DualGroupElement& a, const DualGroupElement& b) {
    DualGroupElement c = a;
    c.factors.insert(c.factors.end(), b.factors.begin(), b.factors.end());
    return c;
  }
};

// Pullback along the quantum Frobenius: X-weights phi_sc(mu) (equal to phi
// on Y), E_i and F_i act by zero, the divided powers by e_i and f_i.
// Throws std::invalid_argument when some l_i is odd.
WeightModule frobenius_pullback(const DualGroupRep& v, const QParams& p);

// u_l uses the characters of ker(phi_T), read as classes in X / phi(Y);
// u_{l,sc} uses X / phi_sc(X*_sc).
enum class SmallForm { adjoint, sc };

// Canonical representatives of X modulo phi(Y) or phi_sc(X*_sc).
class ClassReducer {
 public:
  ClassReducer(const RootDatum& rd, const QParams& p, SmallForm form);
  Weight reduce(const Weight& lam) const;
  bool trivial(const Weight& lam) const;

 private:
  std::vector<std::vector<long>> basis_;  // echelon basis, basis_[k][j] = 0 for j < k
};

struct SmallQuantumView {
  std::shared_ptr<const WeightModule> module;
  SmallForm form = SmallForm::adjoint;
  std::vector<CMatrix> ke, f;   // K_i E_i and F_i
  std::vector<Weight> classes;  // class of each basis weight

  std::size_t dim() const { return module->dim(); }
  // Every K_i E_i and F_i is zero and every class is trivial.
  bool trivial_action() const;
};

SmallQuantumView restrict_to_small(const WeightModule& m, SmallForm form = SmallForm::adjoint);
Submodule small_invariants(const WeightModule& m, SmallForm form = SmallForm::adjoint);
// Basis of the u_l-intertwiners a -> b (both views must use the same form).
std::vector<CMatrix> small_intertwiners(const SmallQuantumView& a, const SmallQuantumView& b);

// Checks [E^(l), F^(l)] = -sum_{k<l} E^(k) [K^-1; -2k; l-k] F^(k) exactly at
// zeta (and over the localization when a generic lift exists). The sum as
// displayed with [K; 2k; l-k] is evaluated too and recorded as a skip entry
// when it disagrees.
Report verify_commutator_identity(const WeightModule& m, int i);

// Inverse of frobenius_pullback on modules with trivial u_{l,sc}-action.
// Throws std::invalid_argument when the precondition fails or a weight is
// not in the image of phi_sc.
DualGroupRep factorization_reconstruct(const WeightModule& m);

// Fr*(a (x) b) -> Fr*(a) (x) Fr*(b), found by solving the intertwiner system.
std::optional<CMatrix> monoidal_intertwiner(const DualGroupRep& a, const DualGroupRep& b, const QParams& p);

// Permutation a (x) b -> b (x) a.
CMatrix swap_matrix(std::size_t dim_a, std::size_t dim_b);

struct HeckeStructure {
  std::shared_ptr<const WeightModule> base;
  SmallForm form = SmallForm::sc;
  std::vector<DualGroupRep> reps;
  std::vector<std::optional<CMatrix>> alpha;  // Fr*(V) (x) M -> V (x) M
  DualGroupElement twisted_by;                // identity unless produced by twist
  std::uint64_t seed = 0;
  Report report;

  bool complete() const;
};

// The u_l-intertwiner Fr*(V) (x) M -> V (x) M: identity when it qualifies,
// otherwise a seeded combination of the Hom space; nullopt if no invertible
// intertwiner is found.
std::optional<CMatrix> solve_alpha(const WeightModule& m, const DualGroupRep& v, SmallForm form,
                                   std::uint64_t seed = 0);

HeckeStructure build_hecke_structure(const WeightModule& m, const std::vector<DualGroupRep>& reps,
                                     SmallForm form = SmallForm::sc, std::uint64_t seed = 0);

// (t (x) 1) alpha_i = alpha_j (t (x) 1) for a morphism t: reps[i] -> reps[j].
Report check_naturality(const HeckeStructure& h, std::size_t i, std::size_t j, const CMatrix& t);
// alpha for an arbitrary rep, consistent with h (including its twist).
std::optional<CMatrix> alpha_for(const HeckeStructure& h, const DualGroupRep& v);
// The tensor axiom for reps[i], reps[j], with alpha of the tensor product
// from alpha_for.
Report check_tensor_compatibility(const HeckeStructure& h, std::size_t i, std::size_t j);
// alpha_V -> (g_V (x) 1) alpha_V.
HeckeStructure twist(const HeckeStructure& h, const DualGroupElement& g);

}  // namespace qfrob
