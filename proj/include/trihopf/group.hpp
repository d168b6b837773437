#pragma once

#include <string>
#include <vector>

#include "trihopf/scalar.hpp"

namespace trihopf {

// Finite group on elements 0..order-1 with identity 0, stored as a Cayley table.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  // Validates closure, identity at index 0, inverses and associativity.
  // Throws StructureError naming a witness on failure.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table);

  int order() const { return n_; }
  int mul(int a, int b) const { return t_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, int k) const;
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }  // g a g^-1
  int element_order(int a) const;
  int exponent() const;
  bool is_abelian() const;
  std::vector<std::vector<int>> table() const;

  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);
  std::string name(int a) const;
  // Index of the element with the given name; -1 if absent.
  int find(const std::string& name) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

 private:
  int n_ = 0;
  std::vector<int> t_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
};

struct Subgroup {
  std::vector<int> elements;  // sorted, contains 0
  std::vector<char> member;   // indicator over the parent

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const { return member[g] != 0; }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
Subgroup intersection(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup centralizer(const FiniteGroup& g, int x);
Subgroup commutator_subgroup(const FiniteGroup& g);
bool is_perfect(const FiniteGroup& g);
bool is_self_normalizing(const FiniteGroup& g, const Subgroup& h);
// The subgroup as a group in its own right; element i of the result is h.elements[i].
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);  // (x,y) -> x*|b|+y
FiniteGroup symmetric_group(int n);  // permutations in lexicographic order, cycle-notation names
// Group generated by permutations of {0..degree-1}; composition (s*t)(i) = s(t(i)).
FiniteGroup permutation_group(const std::vector<std::vector<int>>& gens, int degree);
int permutation_sign(const std::vector<int>& p);
// Elements of permutation_group(gens, degree) in index order.
std::vector<std::vector<int>> permutation_group_elements(const std::vector<std::vector<int>>& gens, int degree);
std::string cycle_notation(const std::vector<int>& p);

// Q semidirect A with (q,1)(1,a)(q,1)^-1 = (1, q.a) and
// (q,a)(q',a') = (qq', (q'^-1 . a) a'). Element (q,a) has index q*|A|+a.
struct SemidirectProduct {
  FiniteGroup group;
  int q_order = 0;
  int a_order = 0;
  int pair(int q, int a) const { return q * a_order + a; }
  int q_part(int x) const { return x / a_order; }
  int a_part(int x) const { return x % a_order; }
};

// action[q][a] = q.a; must be a homomorphism Q -> Aut(A).
SemidirectProduct semidirect_product(const FiniteGroup& q, const FiniteGroup& a,
                                     const std::vector<std::vector<int>>& action);

// Decomposition of an abelian group as a direct product of cyclic groups.
struct AbelianBasis {
  std::vector<int> generators;
  std::vector<int> orders;
  std::vector<std::vector<int>> coords;  // coords[x][i]: exponent of generators[i] in x
  int element(const std::vector<int>& exps) const;
  const FiniteGroup* group = nullptr;
};
AbelianBasis abelian_basis(const FiniteGroup& a);

// Linear character with values zeta_modulus^exps[g].
struct Character {
  std::vector<int> exps;
  int modulus = 1;
  Cyclotomic value(int g, int conductor) const;
};

// Character group of an abelian group; dual element i is characters[i], trivial first.
struct CharacterGroup {
  FiniteGroup dual;
  std::vector<Character> characters;
  int modulus = 1;
  // Pairing <x, chi> = chi(x) as exponent modulo `modulus`.
  int pairing_exp(int x, int chi) const { return characters[chi].exps[x]; }
};
CharacterGroup character_group(const FiniteGroup& a);

struct DoubleCoset {
  int representative = 0;     // least element
  std::vector<int> elements;  // sorted
};
std::vector<DoubleCoset> double_cosets(const FiniteGroup& g, const Subgroup& h);

// K_g = H cap g H g^-1 with theta1(a) = g^-1 a g and theta2 = id, both K_g -> H.
struct StabilizerData {
  int g = 0;
  Subgroup k;
  std::vector<int> theta1;  // indexed by parent element, meaningful on K_g
  std::vector<int> theta2;
};
StabilizerData stabilizer_data(const FiniteGroup& g, const Subgroup& h, int x);

// Function G x G -> K^* stored densely.
struct TwoCocycle {
  int order = 0;
  std::vector<Cyclotomic> values;
  const Cyclotomic& operator()(int a, int b) const { return values[static_cast<size_t>(a) * order + b]; }
  Cyclotomic& operator()(int a, int b) { return values[static_cast<size_t>(a) * order + b]; }
};

TwoCocycle trivial_cocycle(int order);
// Empty string when c is a 2-cocycle with nonzero values, else a witness.
std::string cocycle_violation(const FiniteGroup& g, const TwoCocycle& c);
// Bimultiplicative form on an abelian group: c(prod g_i^a_i, prod g_j^b_j) =
// zeta_modulus^(sum a_i m_ij b_j) over the basis of `basis`.
TwoCocycle cocycle_from_bilinear(const FiniteGroup& a, const AbelianBasis& basis,
                                 const std::vector<std::vector<int>>& m, int modulus);
bool is_bimultiplicative(const FiniteGroup& a, const TwoCocycle& c);
// m -> c(m,g)/c(g,m) is a nontrivial function on the centralizer of every g != 1.
bool is_nondegenerate(const FiniteGroup& g, const TwoCocycle& c);
// Pullback c(f(a), f(b)) along an index map into the cocycle's group.
TwoCocycle pullback(const TwoCocycle& c, const std::vector<int>& f);

}  // namespace trihopf
