#pragma once

#include <string>
#include <vector>

#include "trihopf/group.hpp"
#include "trihopf/hopf.hpp"

namespace trihopf {

// G = G1 G2 with G1 cap G2 = 1.
struct ExactFactorization {
  FiniteGroup g;
  Subgroup g1;
  Subgroup g2;
};

// Throws StructureError naming the failing condition.
ExactFactorization make_factorization(const FiniteGroup& g, const Subgroup& g1, const Subgroup& g2);

// Actions read off unique factorizations, on positions in g1.elements / g2.elements.
// a b = (a.b)(a''), i.e. G1 acting on G2 = G/G1, and b a = (b.a)(b''), G2 on G1 = G/G2.
struct MatchedActions {
  std::vector<std::vector<int>> g1_on_g2;  // [a][b] = a.b
  std::vector<std::vector<int>> g2_on_g1;  // [b][a] = b.a
};
MatchedActions matched_actions(const ExactFactorization& f);

// Ordered subgroup pairs (G1, G2) with |G1||G2| = |G| and trivial intersection,
// G1 ascending in the order of all_subgroups, at most `limit` of them.
std::vector<ExactFactorization> find_exact_factorizations(const FiniteGroup& g, int limit = 1000);

// H(G, G1, G2) on the basis delta_b (x) a at index pos(b)*|G1| + pos(a).
HopfPresentation bicrossproduct(const ExactFactorization& f, int conductor = 1);

struct BiperfectResult {
  bool group_theoretic = false;   // G1, G2 perfect and self-normalizing
  int grouplike_count_h = 0;      // |G(H)| from hopf::grouplikes
  int grouplike_count_hdual = 0;  // |G(H^*)| likewise
  // (fixed points of G1 on G2) x |G1^ab| counts one-dimensional representations
  // of H, hence grouplikes of H^*; the swapped formula counts grouplikes of H.
  int formula_h = 0;
  int formula_hdual = 0;
  bool consistent = false;  // counts match formulas, and group_theoretic <=> both counts are 1
};
BiperfectResult biperfect_test(const ExactFactorization& f);

// Block sizes dim(V)|G1|/|(G1)_x| over G1-orbit representatives x in G2 and
// irreducible V of the stabilizer, sorted.
std::vector<int> predicted_block_sizes(const ExactFactorization& f);

// H(G, G2, G1) -> H(G, G1, G2)^* on the canonical correspondence of basis
// vectors; tries the few natural index maps and records the one that is a
// Hopf isomorphism.
struct DualityResult {
  Report report;
  std::string map;  // name of the correspondence that worked, empty if none
  Matrix iso;
};
DualityResult duality_check(const ExactFactorization& f);

}  // namespace trihopf
