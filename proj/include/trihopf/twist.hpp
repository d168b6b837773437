#pragma once

#include <optional>
#include <string>

#include "trihopf/hopf.hpp"

namespace trihopf {

struct Twist {
  Tensor2 j;
  Tensor2 inverse;
};

enum class TwistStatus { twist, singular_quasitwist, not_quasitwist };

struct TwistCheck {
  Report report;
  TwistStatus status = TwistStatus::not_quasitwist;
  std::optional<Twist> twist;
};

// (Delta x id)(J)(J x 1) = (id x Delta)(J)(1 x J), counit normalization, and
// invertibility. A candidate inverse, if given and correct, skips the solve.
TwistCheck check_twist(const HopfPresentation& h, const Tensor2& j, Exec ex = default_exec(),
                       const Tensor2* inverse_hint = nullptr);
// Certified twist; throws StructureError naming the failed condition.
Twist verify_twist(const HopfPresentation& h, const Tensor2& j, Exec ex = default_exec(),
                   const Tensor2* inverse_hint = nullptr);

// J^x = Delta(x) J (x^-1 (x) x^-1) for invertible x with eps(x) = 1.
Twist gauge(const HopfPresentation& h, const Twist& t, const Vec& x);
// Delta^J(a) = J^-1 Delta(a) J and S^J(a) = Q^-1 S(a) Q with Q = m (S x id)(J).
HopfPresentation twist_hopf(const HopfPresentation& h, const Twist& t);
// J_21^-1 R J.
Tensor2 twist_r(const HopfPresentation& h, const Tensor2& r, const Twist& t);
// J^-1 viewed as a twist for A^J; twisting A^J by it gives A back.
Twist inverse_twist(const HopfPresentation& twisted, const Twist& t);

// Twist of k[A] from a 2-cocycle c on the character group: J = sum c(chi,psi)
// E_chi (x) E_psi with E_chi = |A|^-1 sum_g chi(g)^-1 g, so (chi (x) psi)(J) =
// c(chi, psi).
Twist abelian_twist(const FiniteGroup& a, const TwoCocycle& c, int conductor);
// Value (chi (x) psi)(J) on characters of the character group of a.
Cyclotomic evaluate_characters(const FiniteGroup& a, const Tensor2& j, int chi, int psi, int conductor);

// Coalgebra with a left action of G by coalgebra automorphisms.
struct GCoalgebra {
  int dim = 0;
  std::vector<Matrix> action;  // action[g]
  std::vector<Tensor2> comult;
  Vec counit;
  int conductor = 1;
};
Report verify_g_coalgebra(const FiniteGroup& g, const GCoalgebra& c);
// (k[G], Delta_J) with Delta_J(a) = Delta(a) J and G acting by left multiplication.
GCoalgebra twisted_coalgebra(const FiniteGroup& g, const Tensor2& j, int conductor);
// Dual coalgebra of the twisted group algebra k_c[H] with H acting by the dual
// of conjugation by X_h.
GCoalgebra dual_twisted_group_coalgebra(const FiniteGroup& h, const TwoCocycle& c, int conductor);
// Checks that f (columns = images of basis vectors) intertwines the actions,
// comultiplications and counits.
Report verify_g_coalgebra_map(const FiniteGroup& g, const GCoalgebra& from, const GCoalgebra& to, const Matrix& f);

// Dual algebra of (k[G], Delta_J); StructureError unless semisimple.
StructureAlgebra movshev_dual_algebra(const FiniteGroup& g, const Tensor2& j, int conductor);
// Stabilizer in G of the first primitive central idempotent of the dual algebra.
Subgroup movshev_stabilizer(const FiniteGroup& g, const Tensor2& j, int conductor);

struct Extraction {
  Tensor2 j;
  Vec lambda;
  Matrix iso;  // column a = a . lambda, a G-coalgebra isomorphism (k[G], Delta_J) -> C
};
// Searches lambda (basis vectors, then 0/1 combinations in lexicographic
// order) with eps(lambda) != 0 and {g lambda} a basis.
Extraction extract_quasitwist(const FiniteGroup& g, const GCoalgebra& c);

struct GaugeSearch {
  bool found = false;
  Vec x;
  long evaluations = 0;
  std::string note;  // why the search stopped; "inconclusive" when not found
};
// Looks for x with J2 = J1^x: grouplikes, the coboundary solve on commutative
// semisimple hosts, then 0/1 supports, within `budget` candidate evaluations.
GaugeSearch find_gauge(const HopfPresentation& h, const Tensor2& j1, const Tensor2& j2, long budget = 4096);

}  // namespace trihopf
