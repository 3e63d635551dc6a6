#pragma once

// Finite-dimensional modules over the quantum group at zeta, realized as
// X-graded spaces with matrices for E_i, F_i and the divided powers
// E_i^(l_i), F_i^(l_i). K_t and the K-binomial elements act through the
// grading.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qfrob/linalg.hpp"
#include "qfrob/local_scalar.hpp"
#include "qfrob/report.hpp"
#include "qfrob/rootdata.hpp"

namespace qfrob {

using CMatrix = Matrix<CycloElem>;
using CVector = SparseVec<CycloElem>;
using LMatrix = Matrix<LocalScalar>;

// Generator matrices at generic v, with entries in the localization.
struct GenericLift {
  std::vector<LMatrix> e, f, div_e, div_f;
};

struct WeightModule {
  RootDatum datum;
  QParams params;
  std::vector<Weight> weights;  // weight of each basis vector
  std::vector<CMatrix> e, f, div_e, div_f;
  std::optional<GenericLift> generic;
  std::string name;

  std::size_t dim() const { return weights.size(); }
  int rank() const { return datum.rank(); }

  // K_i^power at zeta: z^{power * d_i <alpha_i^vee, lam>} on weight lam.
  CMatrix k_diag(int i, long power = 1) const;
  // [K_i; m; t] at zeta: qbinom(<alpha_i^vee, lam> + m, t, d_i) on weight lam.
  CMatrix kbinom_diag(int i, long m, long t) const;
  // qint(<alpha_i^vee, lam> + m, d_i) on weight lam.
  CMatrix kint_diag(int i, long m) const;
  LMatrix k_diag_generic(int i, long power = 1) const;

  // E_i^(k) at zeta for 0 <= k <= l_i (k < l_i via E^k/[k]!).
  CMatrix divided_e(int i, long k) const;
  CMatrix divided_f(int i, long k) const;

  // Every generator family, in a fixed order.
  std::vector<const CMatrix*> generators() const;
  std::vector<std::size_t> basis_of_weight(const Weight& lam) const;
  std::map<Weight, std::size_t> weight_multiplicities() const;
};

WeightModule trivial_module(const RootDatum& rd, const QParams& p);

// Weyl module W(lam) for type A1, lam >= 0. Basis v_k = F^(k) v_0.
WeightModule weyl_module(long lam, const QParams& p);

Report relation_check(const WeightModule& m);

// Grading-compatibility checks only (cheap).
Report grading_check(const WeightModule& m);

// Uses the generic lifts when both factors have one, otherwise the coproduct
// formulas for divided powers at zeta.
WeightModule tensor_product(const WeightModule& a, const WeightModule& b);
// Divided powers of a tensor product from the coproduct formulas at zeta.
std::vector<CMatrix> tensor_divided_e_at_zeta(const WeightModule& a, const WeightModule& b);
std::vector<CMatrix> tensor_divided_f_at_zeta(const WeightModule& a, const WeightModule& b);

WeightModule direct_sum(const WeightModule& a, const WeightModule& b);

// Adds delta to one entry of one generator matrix (negative controls).
// family: 0 = E, 1 = F, 2 = divE, 3 = divF.
WeightModule perturb_entry(const WeightModule& m, int family, int vertex, std::size_t row,
                           std::size_t col, const CycloElem& delta);

class Submodule {
 public:
  Submodule(std::shared_ptr<const WeightModule> parent, Echelon<CycloElem> span);

  const WeightModule& parent() const { return *parent_; }
  std::size_t dim() const { return span_.rank(); }
  std::vector<CVector> basis() const;
  bool contains(const CVector& v) const { return span_.contains(v); }
  bool stable() const;

  // The submodule and the quotient as modules in their own right.
  WeightModule as_module() const;
  WeightModule quotient() const;

 private:
  std::shared_ptr<const WeightModule> parent_;
  Echelon<CycloElem> span_;
};

CVector basis_vector(std::size_t k);

Submodule submodule_closure(const WeightModule& m, const std::vector<CVector>& seeds);
Submodule submodule_closure(std::shared_ptr<const WeightModule> m, const std::vector<CVector>& seeds);
// Requires one-dimensional weight spaces and a unique highest weight.
Submodule maximal_proper_submodule(const WeightModule& w);

struct Factor {
  Weight highest;
  std::size_t dim = 0;
  friend bool operator<(const Factor& a, const Factor& b) {
    return a.highest != b.highest ? a.highest < b.highest : a.dim < b.dim;
  }
  friend bool operator==(const Factor& a, const Factor& b) {
    return a.highest == b.highest && a.dim == b.dim;
  }
};

// Multiset of simple composition factors (type A1), sorted.
std::vector<Factor> composition_factors(const WeightModule& m);

// Head of the highest-weight submodule generated by a top weight vector:
// the simple module L(lam) as a quotient. Type A1.
WeightModule simple_head(const WeightModule& w);

// Whether an intertwiner A -> B commuting with every generator exists and is
// invertible; returns it when found.
std::optional<CMatrix> find_isomorphism(const WeightModule& a, const WeightModule& b);
// Basis of Hom(A, B) commuting with all generators (as dim B x dim A matrices).
std::vector<CMatrix> intertwiners(const WeightModule& a, const WeightModule& b);

// Basis of {X : X A = B X for every pair (A, B) in gens}, where X is
// rows x cols and X[p][q] is forced to zero unless allowed(p, q).
std::vector<CMatrix> solve_intertwiners(std::size_t rows, std::size_t cols,
                                        const std::vector<std::pair<const CMatrix*, const CMatrix*>>& gens,
                                        const std::function<bool(std::size_t, std::size_t)>& allowed);

}  // namespace qfrob
