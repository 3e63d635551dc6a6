#pragma once

// Finite-dimensional coalgebras, Hopf algebras and comodules given by
// structure tensors, and the triple (O, A, a) with induction, the functor
// Psi = C (x)_O -, the adjunction maps and the conditions of the
// equivalence theorem.
//
// Tensor factors are flattened with the left factor as the major index, as
// in kron: the basis vector x_i (x) y_j has index i * dim(y) + j. A left
// coaction of C on M is a (dim C * dim M) x dim M matrix, a right coaction a
// (dim M * dim C) x dim M matrix.

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfrob/cyclo.hpp"
#include "qfrob/linalg.hpp"
#include "qfrob/repcore.hpp"

namespace qfrob {

struct CoalgebraFD {
  std::size_t n = 0;
  CMatrix delta;   // n*n x n
  CMatrix counit;  // 1 x n
  std::string name;

  std::size_t dim() const { return n; }
  // Throws std::invalid_argument naming the failed axiom.
  static CoalgebraFD make(CMatrix delta, CMatrix counit, std::string name);
  static CoalgebraFD ground_field();
};

Report coalgebra_axioms(const CMatrix& delta, const CMatrix& counit);

struct HopfAlgebraFD {
  CoalgebraFD coalg;
  CMatrix mult;      // n x n*n
  CMatrix unit;      // n x 1
  CMatrix antipode;  // n x n
  std::vector<CMatrix> left_mul;  // left_mul[i]: y -> b_i y

  std::size_t dim() const { return coalg.n; }
  const std::string& name() const { return coalg.name; }
  // Throws std::invalid_argument naming the failed axiom.
  static HopfAlgebraFD make(CoalgebraFD c, CMatrix mult, CMatrix unit, CMatrix antipode);
  CVector one() const { return unit.column(0); }
  CMatrix left_mult_by(const CVector& x) const;
};

Report hopf_axioms(const CoalgebraFD& c, const CMatrix& mult, const CMatrix& unit, const CMatrix& antipode);

enum class Side { left, right };

struct ComoduleFD {
  std::size_t dim = 0;
  CMatrix coaction;
  Side side = Side::left;
  std::string name;

  // Throws std::invalid_argument naming the failed axiom.
  static ComoduleFD make(const CoalgebraFD& c, CMatrix coaction, Side side, std::string name);
};

Report comodule_axioms(const CoalgebraFD& c, const ComoduleFD& m);
// T_k = (b_k^* (x) id) o coaction for each basis element b_k of C; a
// subspace is a subcomodule iff it is stable under every T_k.
std::vector<CMatrix> coefficient_operators(const CoalgebraFD& c, const ComoduleFD& m);

ComoduleFD regular_comodule(const CoalgebraFD& c);
ComoduleFD trivial_comodule(const HopfAlgebraFD& h);
ComoduleFD direct_sum(const CoalgebraFD& c, const ComoduleFD& a, const ComoduleFD& b);
// Diagonal coaction m (x) n -> m_(-1) n_(-1) (x) m_0 (x) n_0.
ComoduleFD tensor(const HopfAlgebraFD& h, const ComoduleFD& a, const ComoduleFD& b);
// (f (x) id) o coaction along a coalgebra map f.
ComoduleFD pushforward(const CMatrix& f, const ComoduleFD& m);

// A subspace kept in reduced row echelon form.
struct Subspace {
  std::size_t ambient = 0;
  std::vector<CVector> basis;
  std::vector<std::size_t> leads;

  static Subspace span(std::size_t ambient, const std::vector<CVector>& vectors);
  static Subspace whole(std::size_t ambient);
  std::size_t dim() const { return basis.size(); }
  bool contains(const CVector& v) const { return coordinates(v).has_value(); }
  std::optional<CVector> coordinates(const CVector& v) const;
  CMatrix inclusion() const;  // ambient x dim
  bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

// Matrix of f restricted to src with values in dst; throws std::domain_error
// if f(src) is not contained in dst.
CMatrix restrict_map(const CMatrix& f, const Subspace& src, const Subspace& dst);

ComoduleFD sub_comodule(const CoalgebraFD& c, const ComoduleFD& m, const Subspace& s);
struct QuotientComodule {
  ComoduleFD comodule;
  CMatrix projection;  // dim(quotient) x dim(m)
};
QuotientComodule quotient_comodule(const CoalgebraFD& c, const ComoduleFD& m, const Subspace& s);

std::vector<CMatrix> comodule_morphisms(const CoalgebraFD& c, const ComoduleFD& a, const ComoduleFD& b);
std::optional<CMatrix> comodule_isomorphism(const CoalgebraFD& c, const ComoduleFD& a, const ComoduleFD& b);

// Smallest subcomodule reachable by closing eigenvectors of the coefficient
// operators (eigenvalue 0, and roots of unity of order root_order for
// operators of that order).
Subspace minimal_subcomodule(const CoalgebraFD& c, const ComoduleFD& m, int root_order);
// Representatives of the simple comodules, found inside the regular
// comodule. Simplicity is certified by dim End = 1. Throws std::logic_error
// when the search stalls (it is complete for cosemisimple coalgebras).
std::vector<ComoduleFD> simple_comodules(const CoalgebraFD& c, int root_order);
// Indices into simples of the composition factors of m, sorted.
std::vector<std::size_t> comodule_composition_factors(const CoalgebraFD& c, const ComoduleFD& m,
                                                      const std::vector<ComoduleFD>& simples, int root_order);
// dim Ext^1(s1, s2): extensions 0 -> s2 -> E -> s1 -> 0 of left comodules.
std::size_t ext1_dim(const CoalgebraFD& c, const ComoduleFD& s1, const ComoduleFD& s2);
// Block id per simple: connected components of the Ext^1 graph.
std::vector<std::size_t> ext_blocks(const CoalgebraFD& c, const std::vector<ComoduleFD>& simples);

// Cotensor product of a right and a left comodule, inside right (x) left.
Subspace cotensor(const CoalgebraFD& a, const ComoduleFD& right, const ComoduleFD& left);

struct TripleFD {
  HopfAlgebraFD O, A;
  CoalgebraFD a;
  CMatrix a_action;  // a (x) A -> a, dim a x (dim a * dim A)
  CMatrix iota;      // dim A x dim O
  CMatrix pi;        // dim a x dim A
  int root_order = 1;
  std::string name;

  // Checks the structural invariants: iota an injective Hopf map, pi a
  // surjective coalgebra and right-module map, a_action a right action.
  // Conditions (i)-(iv) are left to check_conditions. Throws
  // std::invalid_argument naming the failed invariant.
  static TripleFD make(HopfAlgebraFD O, HopfAlgebraFD A, CoalgebraFD a, CMatrix a_action, CMatrix iota, CMatrix pi,
                       int root_order, std::string name);

  ComoduleFD A_as_right() const;                      // (id (x) pi) Delta_A
  ComoduleFD restrict(const ComoduleFD& n) const;     // Res: A-comod -> a-comod
  ComoduleFD pullback(const ComoduleFD& v) const;     // F*: O-comod -> A-comod
  CVector unit_a() const { return pi.apply(A.one()); }
};

// An object of Cat: an O-module with a compatible left A-coaction.
struct TripleObject {
  std::size_t dim = 0;
  std::vector<CMatrix> action;  // action[j]: the j-th basis element of O
  CMatrix coaction;             // dim A * dim x dim
  std::string name;
};

Report object_axioms(const TripleFD& t, const TripleObject& x);
TripleObject object_O(const TripleFD& t);
TripleObject object_A(const TripleFD& t);
// O (x) N with O acting on the first factor and the diagonal coaction.
TripleObject free_object(const TripleFD& t, const ComoduleFD& n);
ComoduleFD underlying_comodule(const TripleObject& x);
std::vector<CMatrix> object_morphisms(const TripleFD& t, const TripleObject& x, const TripleObject& y);
std::optional<CMatrix> object_isomorphism(const TripleFD& t, const TripleObject& x, const TripleObject& y);

struct Induced {
  TripleObject object;
  Subspace carrier;  // inside A (x) M
};
// Throws std::domain_error when the O-action does not preserve the carrier.
Induced induce(const TripleFD& t, const ComoduleFD& m);

struct PsiResult {
  ComoduleFD comodule;
  CMatrix projection;  // dim Psi(N) x dim N
  Subspace kernel;     // span of m.N
};
// Throws std::domain_error when the coaction does not descend.
PsiResult psi(const TripleFD& t, const TripleObject& n);

// N -> Ind(Psi(N)), in the basis of the induced carrier.
CMatrix adjunction_unit(const TripleFD& t, const TripleObject& n);
// Psi(Ind(M)) -> M.
CMatrix adjunction_counit(const TripleFD& t, const ComoduleFD& m);

struct ConditionReport {
  Report report;
  bool i = false, ii = false, iii = false;
  bool iv_a_free = false;  // a freeness witness was found
  bool iv_b = false;       // exact and faithful on the catalog
  std::vector<CVector> free_basis;

  bool satisfied() const { return i && ii && iii && (iv_a_free || iv_b); }
};

ConditionReport check_conditions(const TripleFD& t, std::uint64_t seed = 0);

struct Catalog {
  std::vector<TripleObject> objects;
  std::vector<ComoduleFD> comodules;
};

// Simples of a, the regular a, O, A, and O (x) N for each simple A-comodule N.
Catalog standard_catalog(const TripleFD& t);
Report verify_equivalence(const TripleFD& t, const Catalog& c);

// Hypotheses (i), (ii) and surjectivity of Res o Ind onto the simples,
// conclusion m.A = ker(pi).
Report verify_ideal_prop(const TripleFD& t);

// Points of Spec O: algebra maps O -> field, as row vectors.
using Point = std::vector<CycloElem>;
bool is_point(const HopfAlgebraFD& o, const Point& g);
Point identity_point(const HopfAlgebraFD& o);
Point point_product(const HopfAlgebraFD& o, const Point& g1, const Point& g2);
Point point_inverse(const HopfAlgebraFD& o, const Point& g);
// Basis functionals that are points (the evaluations for function algebras).
std::vector<Point> basis_points(const HopfAlgebraFD& o);

// Same carrier and coaction; f acts as (id (x) gamma^-1) Delta(f) did
// before. Throws std::invalid_argument if gamma is not a point.
TripleObject twist(const TripleFD& t, const Point& gamma, const TripleObject& x);
// The induced action on a-comod: Psi(T_gamma(Ind(M))).
ComoduleFD twist_comodule(const TripleFD& t, const Point& gamma, const ComoduleFD& m);

// An object of Cat with an O-coaction making it an O-Hopf module that
// commutes with the O-action: a Gamma-equivariant a-comodule.
struct EquivariantComodule {
  TripleObject object;
  CMatrix o_coaction;  // dim O * dim x dim
};
EquivariantComodule canonical_equivariance(const TripleFD& t, const ComoduleFD& n);
// The fiber at 1: the O-coinvariants with the restricted A-coaction.
// Throws std::invalid_argument for incompatible data.
ComoduleFD equivariant_reconstruct(const TripleFD& t, const EquivariantComodule& m);

// Finite groups given by a multiplication table.
struct FiniteGroup {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;

  std::size_t order() const { return names.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
  std::size_t inverse(std::size_t a) const;
  std::size_t element_order(std::size_t a) const;
  std::size_t exponent() const;
  // Throws std::invalid_argument unless the table is a group.
  static FiniteGroup make(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table);
};

struct GroupFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupFile {
  FiniteGroup group;
  std::vector<std::size_t> subgroup;
};

// Format: a header line "elements: <names>", one line "x y -> z" per
// ordered pair, and a line "subgroup: <names>". '#' starts a comment.
// Throws GroupFileError.
GroupFile parse_group_file(std::istream& in);

bool is_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& h);
bool is_normal(const FiniteGroup& g, const std::vector<std::size_t>& h);

HopfAlgebraFD function_algebra(const FiniteGroup& g, const std::string& name);
// (O_H, O_{H''}, O_{H'}) for H' normal in H'' and H = H''/H'. Throws
// std::invalid_argument for a non-normal subgroup.
TripleFD finite_group_triple(const FiniteGroup& g, const std::vector<std::size_t>& normal);
// (A, A, C) with pi the counit.
TripleFD self_triple(const HopfAlgebraFD& h, int root_order);
// (A, A, A) with identity maps.
TripleFD degenerate_triple(const HopfAlgebraFD& h, int root_order);
// The triple with O replaced by the ground field.
TripleFD shrink_O(const TripleFD& t);

}  // namespace qfrob
