#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "trihopf/group.hpp"
#include "trihopf/linalg.hpp"

namespace trihopf {

using SparseVec = std::vector<std::pair<int, Cyclotomic>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, int dim);

// Finite-dimensional unital algebra given by structure constants
// e_i e_j = sum_k m_ij^k e_k over Q(zeta_N).
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  StructureAlgebra(int dim, int conductor);

  int dim() const { return dim_; }
  int conductor() const { return conductor_; }

  const SparseVec& product(int i, int j) const { return mult_[static_cast<size_t>(i) * dim_ + j]; }
  void set_product(int i, int j, const Vec& v);
  void set_product(int i, int j, SparseVec v);
  Cyclotomic constant(int i, int j, int k) const;
  const Vec& unit() const { return unit_; }
  void set_unit(Vec u);

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec basis_product(int i, int j) const { return to_dense(product(i, j), dim_); }
  Matrix left_mult(const Vec& a) const;   // x -> a x
  Matrix right_mult(const Vec& a) const;  // x -> x a
  // tr(L_{e_k}) for each k.
  Vec trace_vector() const;
  bool is_commutative() const;
  // Two-sided inverse, if a is a unit.
  std::optional<Vec> inverse(const Vec& a) const;
  Vec power(const Vec& a, int k) const;

  friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b);

 private:
  int dim_ = 0;
  int conductor_ = 1;
  std::vector<SparseVec> mult_;
  Vec unit_;
};

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::string witness;  // empty when passed
};

struct Report {
  std::vector<AxiomResult> results;
  bool passed() const;
  const AxiomResult* failure() const;  // first failure or nullptr
  void add(std::string name, bool ok, std::string witness = "");
  void merge(const Report& other, const std::string& prefix = "");
};

Report verify_algebra(const StructureAlgebra& a);

// Jacobson radical as the kernel of the trace form (a, b) -> tr(L_{ab}).
std::vector<Vec> jacobson_radical(const StructureAlgebra& a);
std::vector<Vec> center(const StructureAlgebra& a);

// Algebra spanned by `basis` (closed under products, containing the unit),
// expressed in that basis. Throws StructureError if not closed.
StructureAlgebra restrict_algebra(const StructureAlgebra& a, const std::vector<Vec>& basis);

// Smallest subalgebra containing the unit and the given elements.
std::vector<Vec> generated_subalgebra(const StructureAlgebra& a, const std::vector<Vec>& gens);

struct Quotient {
  StructureAlgebra algebra;
  Matrix projection;  // dim(quotient) x dim(a)
  Matrix lift;        // dim(a) x dim(quotient), a section of the projection
};
// Quotient by a two-sided ideal given by a spanning set.
Quotient quotient(const StructureAlgebra& a, const std::vector<Vec>& ideal);

struct BlockProfile {
  std::vector<int> sizes;  // d_i, sorted ascending, one per simple block M_{d_i}
  int radical_dim = 0;
  int dim = 0;
  std::string str() const;
};
// Sizes of the matrix blocks of A/Rad over the algebraic closure, via the
// eigenvalues d_i^2 of T_Z^-1 T_A on the center of A/Rad.
BlockProfile block_profile(const StructureAlgebra& a);

// Primitive idempotents of a commutative semisimple algebra; NonSplitError if
// some eigenvalue leaves Q(zeta_N).
std::vector<Vec> split_commutative(const StructureAlgebra& c);
// Primitive central idempotents of a semisimple algebra.
std::vector<Vec> primitive_central_idempotents(const StructureAlgebra& a);

// Left module given by action matrices of the basis elements.
struct AlgebraRepresentation {
  int dim = 0;
  std::vector<Matrix> action;
  Matrix of(const Vec& a) const;
};
Report verify_representation(const StructureAlgebra& a, const AlgebraRepresentation& v);
AlgebraRepresentation regular_representation(const StructureAlgebra& a);
// One simple module per block of A/Rad (pulled back to A), in block order.
std::vector<AlgebraRepresentation> simple_modules(const StructureAlgebra& a);
// Simple module of a semisimple algebra for the block of central idempotent e.
AlgebraRepresentation simple_module_for_block(const StructureAlgebra& a, const Vec& e);

// X_g X_h = c(g,h) X_{gh}.
StructureAlgebra twisted_group_algebra(const FiniteGroup& g, const TwoCocycle& c, int conductor);
StructureAlgebra group_algebra_structure(const FiniteGroup& g, int conductor);
// Opposite algebra.
StructureAlgebra opposite(const StructureAlgebra& a);
// Tensor product algebra, basis e_i (x) f_j at index i*dim(b)+j.
StructureAlgebra tensor_algebra(const StructureAlgebra& a, const StructureAlgebra& b);

}  // namespace trihopf
