#pragma once

#include <vector>

#include "trihopf/group.hpp"
#include "trihopf/hopf.hpp"
#include "trihopf/rmatrix.hpp"
#include "trihopf/twist.hpp"

namespace trihopf {

// A = k[G]^J for a twist J of k[H] pushed into k[G], H <= G.
struct CotriangularInput {
  FiniteGroup g;
  Subgroup h;
  Tensor2 j;  // indexed by elements of G, supported on H x H
  int conductor = 1;
};

// Twist of k[G] certified from in.j; UsageError if J leaves k[H] (x) k[H].
Twist cotriangular_twist(const CotriangularInput& in);

// (A^*)_Z for A = k[G]^J on the group basis, spanned by delta_z for z in `coset`
// (in the given order), with (delta_x delta_y)(k) = Delta^J(k)(x, y) and unit sum_z delta_z.
// StructureError if a product leaves the span.
StructureAlgebra coset_algebra(const HopfPresentation& a, const std::vector<int>& coset);

// (A_1)^* with Delta_J(a) = Delta(a) J and (A_2)^* with Delta(a) = J^-1 Delta(a), both on
// delta_h for h in positions of in.h; rho_1(h) delta_y = delta_{hy}, rho_2(h) delta_y = delta_{yh^-1}.
struct MovshevPair {
  FiniteGroup h;  // the subgroup as a group
  StructureAlgebra a1;
  StructureAlgebra a2;
  std::vector<std::vector<int>> rho1;  // rho1[h][y]
  std::vector<std::vector<int>> rho2;
};
MovshevPair movshev_pair(const CotriangularInput& in, const Twist& t);

// For a simple algebra on which a group acts by basis permutations, elements T_h with
// T_h a T_h^-1 = rho(h)(a) and the 2-cocycle T_h T_h' = c(h, h') T_hh'. StructureError
// when some T_h is not unique up to scalars (the algebra is not central simple).
struct ProjectiveLift {
  std::vector<Vec> t;
  TwoCocycle c;
};
ProjectiveLift projective_lift(const FiniteGroup& h, const StructureAlgebra& a, const std::vector<std::vector<int>>& rho);

struct CosetBlocks {
  int representative = 0;
  int size = 0;
  Subgroup k;                    // K_g = H cap g H g^-1
  int ratio = 0;                 // |H| / |K_g|
  std::vector<int> blocks;       // block sizes of (A^*)_Z
  std::vector<int> predicted;    // ratio x block sizes of k_{c_W}[K_g]; empty if unavailable
  TwoCocycle c_w;
};
struct DoubleCosetBlockReport {
  std::vector<CosetBlocks> cosets;
  Report report;
};
// Block structure of A^* over the double cosets of H. NonSplitError with a hint to
// enlarge the conductor when a block does not split over the field.
DoubleCosetBlockReport dual_double_coset_decomposition(const CotriangularInput& in);

// F_g(delta_y) = sum_{h g h' = y} delta_h (x) delta_h' into (A_2)^* (x) (A_1)^*, basis
// index pos(h) |H| + pos(h').
struct FgEmbedding {
  Matrix f;                  // |H|^2 x |Z|
  StructureAlgebra target;   // (A_2)^* (x) (A_1)^*
  int rank = 0;
  int invariant_dim = 0;     // dim U_g
  Report report;
};
FgEmbedding fg_embedding(const CotriangularInput& in, int g);

struct KaplanskyResult {
  BlockProfile profile;  // of the dual algebra
  bool divides = false;
  Report report;  // asserts divisibility only when asked to
};
KaplanskyResult kaplansky_check(const HopfPresentation& h, bool assert_divisibility);

struct ChevalleyReport {
  int radical_dim = 0;
  bool is_hopf_ideal = false;
  bool tensor_test_run = false;
  bool simple_tensors_semisimple = false;  // Rad acts by zero on V (x) W for simple V, W
  Report report;
};
ChevalleyReport chevalley_check(const HopfPresentation& h);

// tr(u|V) for the Drinfeld element u of (h, r).
Cyclotomic categorical_dimension(const HopfPresentation& h, const Tensor2& r, const AlgebraRepresentation& v);
bool is_rational_integer(const Cyclotomic& x);

// V (x) W through the coproduct (ordinary Hopf algebras; UsageError for super).
AlgebraRepresentation tensor_representation(const HopfPresentation& h, const AlgebraRepresentation& v,
                                            const AlgebraRepresentation& w);
// The one-dimensional representation given by an algebra map to the field.
AlgebraRepresentation character_representation(const Vec& values);

}  // namespace trihopf
