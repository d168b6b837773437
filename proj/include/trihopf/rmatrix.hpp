#pragma once

#include <optional>

#include "trihopf/hopf.hpp"

namespace trihopf {

// (Delta x id)(R) = R13 R23, (id x Delta)(R) = R13 R12, Delta^cop(a) R = R Delta(a)
// on every basis element, and invertibility of R.
Report verify_quasitriangular(const HopfPresentation& h, const Tensor2& r, Exec ex = default_exec());
// R R_21 = 1 (x) 1 (Koszul-signed flip for superalgebras).
bool is_triangular(const HopfPresentation& h, const Tensor2& r);

struct DrinfeldElement {
  Vec u;
  Vec u_inverse;
  bool implements_s2 = false;  // S^2(a) = u a u^-1 on all basis elements
  bool grouplike = false;
  bool involutive = false;     // u^2 = 1
};
// u = m (S x id)(R_21); throws StructureError if u is not invertible.
DrinfeldElement drinfeld_element(const HopfPresentation& h, const Tensor2& r);

// (1 (x) 1 + 1 (x) u + u (x) 1 - u (x) u) / 2 for a grouplike u with u^2 = 1.
Tensor2 r_u(const HopfPresentation& h, const Vec& u);

struct MinimalPart {
  HopfPresentation hopf;
  std::vector<Vec> basis;  // in coordinates of the host
  Tensor2 r;               // R in coordinates of `basis`
  int rank = 0;            // dim of the minimal part
  int tensor_rank = 0;     // rank of the coefficient matrix of R
};
// Hopf subalgebra generated by the legs of R; StructureError if the generated
// subalgebra is not a Hopf subalgebra or R does not lie in it.
MinimalPart minimal_part(const HopfPresentation& h, const Tensor2& r);

// Matrix of f_R(p) = (p x id)(R) on the dual basis: column i = f_R(e_i^*).
Matrix f_r_map(const HopfPresentation& h, const Tensor2& r);
// On the minimal part, checks that f_R : A_m^{*cop} -> A_m is a bijective
// Hopf algebra map (ordinary Hopf algebras only).
Report verify_f_r_isomorphism(const HopfPresentation& h, const Tensor2& r);

}  // namespace trihopf
