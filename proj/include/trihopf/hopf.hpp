#pragma once

#include <optional>
#include <vector>

#include "trihopf/algebra.hpp"
#include "trihopf/kernels.hpp"
#include "trihopf/tensor.hpp"

namespace trihopf {

// Hopf (super)algebra on a basis e_0..e_{n-1}.
struct HopfPresentation {
  StructureAlgebra algebra;
  std::vector<Tensor2> comult;   // comult[i] = Delta(e_i)
  Vec counit;                    // counit[i] = eps(e_i)
  Matrix antipode;               // column i = S(e_i)
  std::optional<Parity> parity;  // present for superalgebras

  int dim() const { return algebra.dim(); }
  int conductor() const { return algebra.conductor(); }
  const Parity* parity_ptr() const { return parity ? &*parity : nullptr; }
  bool is_super() const { return parity.has_value(); }

  Vec one() const { return algebra.unit(); }
  Vec mul(const Vec& a, const Vec& b) const { return algebra.multiply(a, b); }
  Tensor2 coproduct(const Vec& a) const;
  Cyclotomic eps(const Vec& a) const;
  Vec S(const Vec& a) const { return antipode.apply(a); }
  Vec e(int i) const { return unit_vec(dim(), i); }
};

// Checks every Hopf axiom on all basis elements (and the grading for
// superalgebras); each failure carries a witness.
Report verify_hopf(const HopfPresentation& h, Exec ex = default_exec());

HopfPresentation group_algebra(const FiniteGroup& g, int conductor);
// Dual Hopf algebra on the dual basis (structure constants transposed).
HopfPresentation dual_hopf(const HopfPresentation& h);
// Opposite coproduct (super flip for superalgebras) with antipode S^-1.
HopfPresentation co_opposite(const HopfPresentation& h);
// Presentation on the basis given by the columns of p (old coordinates).
HopfPresentation change_basis(const HopfPresentation& h, const Matrix& p);
// f (columns = images of basis vectors) is a bijective Hopf algebra map
// from -> to: multiplicative, unital, comultiplicative, counital, and
// intertwines the antipodes (parities too in the super case).
Report verify_hopf_map(const HopfPresentation& from, const HopfPresentation& to, const Matrix& f);
// Same presentation over Q(zeta_conductor); UsageError unless the current conductor divides it.
HopfPresentation extend_scalars(const HopfPresentation& h, int conductor);
Tensor2 extend_scalars(const Tensor2& t, int conductor);
// Hopf subalgebra spanned by basis; throws StructureError if not closed.
HopfPresentation sub_hopf(const HopfPresentation& h, const std::vector<Vec>& basis);

std::vector<Vec> grouplikes(const HopfPresentation& h);
// Basis of P_{g,h} = {x : Delta(x) = x (x) g + h (x) x}.
std::vector<Vec> skew_primitives(const HopfPresentation& h, const Vec& g, const Vec& hh);
bool is_commutative(const HopfPresentation& h);
bool is_cocommutative(const HopfPresentation& h);  // super-cocommutative with parity
Matrix antipode_power(const HopfPresentation& h, int k);

// Tensor square operations (Koszul signs for superalgebras).
Tensor2 one_tensor(const HopfPresentation& h);
Tensor2 tensor_mul(const HopfPresentation& h, const Tensor2& x, const Tensor2& y, Exec ex = default_exec());
Tensor3 tensor3_mul(const HopfPresentation& h, const Tensor3& x, const Tensor3& y, Exec ex = default_exec());
Tensor2 tensor_flip(const Tensor2& x);
// x_21 with the Koszul sign (-1)^{p(a)p(b)} when h is super.
Tensor2 tensor_op(const HopfPresentation& h, const Tensor2& x);
bool is_tensor_inverse(const HopfPresentation& h, const Tensor2& x, const Tensor2& y);
// Inverse in A (x) A computed inside B1 (x) B2 where B_i is the subalgebra
// generated by the i-th legs of x. nullopt if x is singular; BudgetExceeded
// if dim(B1) dim(B2) exceeds max_dim.
std::optional<Tensor2> tensor_inverse(const HopfPresentation& h, const Tensor2& x, int max_dim = 900);
// (f (x) g)(x) for linear maps given as matrices.
Tensor2 apply_maps(const Matrix& f, const Matrix& g, const Tensor2& x);
// Multiplication map m(x) = sum x_ij e_i e_j.
Vec multiply_legs(const HopfPresentation& h, const Tensor2& x);
// Coordinates of x in span(b1) (x) span(b2), if it lies there.
std::optional<Tensor2> tensor_coords(const Tensor2& x, const CoordinateSolver& c1, const CoordinateSolver& c2);
Tensor2 tensor_from_coords(const Tensor2& c, const std::vector<Vec>& b1, const std::vector<Vec>& b2);

// Parity of a vector if homogeneous: 0, 1, or -1 for inhomogeneous; zero is even.
int vector_parity(const Parity& p, const Vec& v);
// Super tensor product algebra for homogeneous bases.
StructureAlgebra super_tensor_algebra(const StructureAlgebra& a, const Parity* pa, const StructureAlgebra& b,
                                      const Parity* pb);

}  // namespace trihopf
