#pragma once

#include <vector>

#include "trihopf/algebra.hpp"
#include "trihopf/group.hpp"
#include "trihopf/twist.hpp"

namespace trihopf {

// G acting on A by automorphisms, with a map pi : G -> A.
// A is written multiplicatively throughout.
struct CocycleDatum {
  FiniteGroup g;
  FiniteGroup a;
  std::vector<std::vector<int>> action;  // action[g][x] = g.x
  std::vector<int> pi;                   // pi[g]
};

// G = <x> x <y> = Z2 x Z2 on A = Z4 = <a>, x trivial, y.a = a^-1;
// pi(1) = 1, pi(x) = a^2, pi(y) = a, pi(xy) = a^3. The double has order 16.
CocycleDatum klein_on_z4_datum();
// G = S3 on A = Z2 x Z3 by s(a, b) = (a, sign(s) b); pi_1 = parity, pi_2 from the
// table id,(123),(132),(12),(13),(23) -> 0,1,2,2,0,1. The double has order 36.
CocycleDatum s3_on_z6_datum();
// G = A abelian, trivial action, pi = id.
CocycleDatum identity_datum(const FiniteGroup& a);

// Action is by automorphisms, pi(gg') = pi(g) (g.pi(g')) on all pairs, pi bijective.
Report verify_cocycle(const CocycleDatum& d);
// Inverse permutation of pi; StructureError if pi is not bijective.
std::vector<int> pi_inverse(const CocycleDatum& d);

// The double (G x| A^, A x A^, rho x rho*^-1, b g -> pi(g) b) of a datum with A abelian.
// Elements of G~ are gt.pair(g, b) = g b; characters of A index A^.
struct DoubledDatum {
  CocycleDatum base;
  CocycleDatum datum;
  SemidirectProduct gt;
  CharacterGroup chars;
  std::vector<std::vector<int>> chi_action;  // (g.chi)(x) = chi(g^-1 . x)
  int conductor = 1;  // exponent of A
  int order_a = 0;
  int g_elem(int g) const { return gt.pair(g, 0); }
  int chi_elem(int chi) const { return gt.pair(0, chi); }
  // The pairing (x, chi) = chi(x) in Q(zeta_conductor).
  Cyclotomic pairing(int x, int chi) const;
  // (b, g) with h = b g.
  std::pair<int, int> split(int h) const;
};
DoubledDatum double_datum(const CocycleDatum& d);

// T(x) defined by pi^-1(x^-1) pi^-1(T(x)) = 1.
struct TMap {
  std::vector<int> map;
};
TMap tmap(const CocycleDatum& d);

// (pi^-1 x pi^-1)(J) for J in k[A] (x) k[A], landing in k[G] (x) k[G].
Tensor2 pull_back_tensor(const CocycleDatum& d, const Tensor2& j);
// (rho(g) x rho(g))(J) = J for every g.
bool is_invariant(const CocycleDatum& d, const Tensor2& j);
// |A|^-1 sum chi(x) x (x) chi on the abelian group A x A^ of the double.
Tensor2 canonical_pairing_twist(const DoubledDatum& dd);

struct CocycleTwist {
  DoubledDatum doubled;
  HopfPresentation host;  // k[G~] over Q(zeta_exp(A))
  Twist twist;            // inverse obtained by linear solving
  Tensor2 closed_form_inverse;
  TMap t;
};
// Jbar = |A|^-1 sum chi(x) pi^-1(x) (x) chi. Throws std::logic_error when the
// solved inverse and the closed form disagree.
CocycleTwist jbar(const CocycleDatum& d, Exec ex = default_exec());

struct CocycleTriangular {
  CocycleTwist source;
  HopfPresentation hopf;  // k[G~]^Jbar
  Tensor2 r;              // Jbar_21^-1 Jbar
  Report report;
};
// Builds (k[G~]^Jbar, R) and checks Hopf axioms, quasitriangularity, triangularity,
// minimality, u = 1, noncommutativity and noncocommutativity. Throws
// std::logic_error when the closed-form R disagrees with Jbar_21^-1 Jbar.
CocycleTriangular rmatrix_from_cocycle(const CocycleDatum& d, Exec ex = default_exec());
// |A|^-2 sum chi_y(x) chi_x(y)^-1 chi_x pi^-1(x) (x) pi^-1(T(y)) chi_y.
Tensor2 closed_form_r(const DoubledDatum& dd, const TMap& t);

// V = Fun(A) with basis delta_a for H = G x| A^ and J = |A|^-1 sum b(pi(g)) b (x) g.
struct ProjectiveRep {
  Tensor2 j;                        // on k[H], H = doubled.gt.group
  StructureAlgebra dual;            // (k[H]_J)^* in the basis Y_h dual to h
  StructureAlgebra dual_z;          // same algebra in the basis Z_{bg} = |A| b(pi(g)) Y_{bg}
  AlgebraRepresentation z_action;   // Z_{bg} delta_a = b(a) delta_pi(g), indexed like dual_z
  std::vector<Matrix> phi;          // phi(h) for h in H
  Report report;
};
ProjectiveRep projective_rep(const CocycleDatum& d, Exec ex = default_exec());

}  // namespace trihopf
