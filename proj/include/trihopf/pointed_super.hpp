#pragma once

#include <vector>

#include "trihopf/group.hpp"
#include "trihopf/hopf.hpp"
#include "trihopf/rmatrix.hpp"
#include "trihopf/twist.hpp"

namespace trihopf {

// (G, F, n): G abelian, F a nondegenerate skew-symmetric bicharacter with
// values in Q(zeta_conductor), n[g] = dim V_g, zero off I_F = {g : F(g,g) = -1}.
struct PointedDatum {
  FiniteGroup g;
  TwoCocycle form;
  int conductor = 1;
  std::vector<int> n;
};

Report verify_datum(const PointedDatum& d);
bool in_odd_support(const PointedDatum& d, int g);  // F(g,g) = -1

// G = Z2 = {1, g}, F(g,g) = -1, n_g = n.
PointedDatum hn_datum(int n);
// G = Z2 x Z2 with F(a,b) = (-1)^(a1 b1 + a1 b2 + a2 b1), so I_F = {(1,0), (1,1)};
// n_(1,0) = n10, n_(1,1) = n11.
PointedDatum klein_pointed_datum(int n10, int n11);
// G = Z4 x Z4 with F(a,b) = i^(a1 b2 - a2 b1) (-1)^(a1 b1); (1,0) and (3,0) lie in I_F
// and are inverse to each other.
PointedDatum z4z4_pointed_datum(int n10, int n30);

// H(D) on the basis a x_S, x_S = x_{i1} ... x_{ik} with i1 < ... < ik, at index
// mask(S) * |G| + a. Odd generators are ordered by group element, then by index in V_g.
struct PointedAlgebra {
  PointedDatum datum;
  HopfPresentation hopf;
  std::vector<int> degree;  // degree[i] = g with x_i in V_g
  std::vector<int> local;   // position of x_i inside V_g
  int generators() const { return static_cast<int>(degree.size()); }
  int index(int a, unsigned mask) const { return static_cast<int>(mask) * datum.g.order() + a; }
  Vec group_element(int a) const { return unit_vec(hopf.dim(), index(a, 0)); }
  Vec generator(int i) const { return unit_vec(hopf.dim(), index(0, 1u << i)); }
};
// UsageError if the datum fails verify_datum.
PointedAlgebra build_hd(const PointedDatum& d);

struct AntipodeOrder {
  bool s2_identity = false;
  bool s4_identity = false;
  Report report;  // asserts S^4 = Id
};
AntipodeOrder s4_check(const HopfPresentation& h);

// phi[chi] in G for chi indexing character_group(G); m[g] is the n_{g^-1} x n_g
// matrix of M_g : V_g^* -> V_{g^-1} (empty when n_g = 0).
struct TDatum {
  std::vector<int> phi;
  std::vector<Matrix> m;
};
Report verify_tdatum(const PointedDatum& d, const TDatum& t);
// phi = f^-1 with f(g) = F(g, .), and each M_g the identity (needs n_g = n_g^-1
// and g = g^-1 wherever n_g > 0).
TDatum canonical_tdatum(const PointedDatum& d);
// All phi : G^ -> G satisfying the conditions on phi, found by brute force over
// homomorphisms.
std::vector<std::vector<int>> phi_candidates(const PointedDatum& d);
// False exactly when n_g != n_{g^-1} for some g.
bool has_admissible_m(const PointedDatum& d);

struct PointedTriangular {
  Matrix f;     // f_T : H^{*cop} -> H, column i = f_T(e_i^*)
  Tensor2 r;    // R_T = sum_i e_i (x) f_T(e_i^*)
  Report report;
};
// UsageError naming the violated condition when T is not admissible.
PointedTriangular minimal_triangular_structure(const PointedAlgebra& h, const TDatum& t);
// Elements of the dual basis: a character, and P_x for x the dual of generator i.
Vec dual_character(const PointedAlgebra& h, int chi);
Vec dual_p(const PointedAlgebra& h, int i);

// Projection A -> K = k[G(A)] built from f_R, and the biproduct splitting.
struct BiproductCheck {
  std::vector<Vec> k_basis;  // grouplikes of A
  Matrix pi;                 // |G| x dim A, coordinates in k_basis
  std::vector<Vec> b_basis;  // B = {x : (id x pi) Delta(x) = x (x) 1}
  Report report;
};
BiproductCheck biproduct_projection(const HopfPresentation& a, const Tensor2& r);

// Q acting on an odd space V of dimension v by matrices action[q].
struct SuperGroupDatum {
  FiniteGroup q;
  int v = 0;
  std::vector<Matrix> action;
  int conductor = 1;
};
Report verify_super_group_datum(const SuperGroupDatum& s);
// Z2 = {1, g} acting on V = k^v by -1.
SuperGroupDatum sign_super_datum(int v);

// k[Q] x| Lambda V on the basis q x_S at index mask(S) * |Q| + q, with parity |S| mod 2,
// Delta(q) = q (x) q, Delta(x) = x (x) 1 + 1 (x) x.
struct SupergroupAlgebra {
  SuperGroupDatum datum;
  HopfPresentation hopf;
  int index(int q, unsigned mask) const { return static_cast<int>(mask) * datum.q.order() + q; }
  Vec group_element(int q) const { return unit_vec(hopf.dim(), index(q, 0)); }
  Vec generator(int i) const { return unit_vec(hopf.dim(), index(0, 1u << i)); }
};
SupergroupAlgebra supergroup_algebra(const SuperGroupDatum& s);

// Super (A, g) -> ordinary: Delta(a) = Delta~_0(a) - (-1)^p(a) (g (x) 1) Delta~_1(a),
// S(a) = g^p(a) S~(a), where Delta~_i collects the terms with second leg of parity i.
// UsageError unless g is grouplike, g^2 = 1 and Ad(g) is the parity.
HopfPresentation bosonize(const HopfPresentation& super, const Vec& g);
// Ordinary (A, u) -> super, graded by Ad(u); UsageError unless u is grouplike,
// u^2 = 1 and every basis vector is an eigenvector of Ad(u).
HopfPresentation unbosonize(const HopfPresentation& ordinary, const Vec& u);

// Splits x by parity of the tensor legs: even (x) even and odd (x) odd.
// UsageError if x has mixed components.
std::pair<Tensor2, Tensor2> split_even_odd(const Parity& p, const Tensor2& x);
// R = (R~_0 + (1 (x) g) R~_1) R_g on the ordinary side.
Tensor2 super_to_ordinary_r(const HopfPresentation& super, const Tensor2& r, const Vec& g);
// R~ = (R_0 + (1 (x) u) R_1) R_u with the grading by Ad(u).
Tensor2 ordinary_to_super_r(const HopfPresentation& ordinary, const Tensor2& r, const Vec& u);

// J = exp(r/2) for r = sum r_ij x_i (x) x_j with r a symmetric matrix; certified
// twist. UsageError if r is not symmetric.
Twist exp_twist(const SupergroupAlgebra& a, const Matrix& r);
// J = J~_0 - (g (x) 1) J~_1 on the bosonization; UsageError unless J~ is even
// (both legs of equal parity). Returns the certified twist.
Twist even_twist_correspondence(const HopfPresentation& super, const Tensor2& j, const Vec& g);

}  // namespace trihopf
