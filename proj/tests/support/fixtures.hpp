#pragma once

#include <random>

#include "trihopf/hopf.hpp"
#include "trihopf/rmatrix.hpp"

namespace fixtures {

using namespace trihopf;

// Sweedler's algebra written out by hand on 1, g, x, gx.
inline HopfPresentation sweedler_by_hand() {
  HopfPresentation h;
  h.algebra = StructureAlgebra(4, 1);
  auto set = [&](int i, int j, int k, int c) {
    SparseVec v;
    if (c != 0) v.emplace_back(k, Cyclotomic(c));
    h.algebra.set_product(i, j, v);
  };
  for (int i = 0; i < 4; ++i) {
    set(0, i, i, 1);
    set(i, 0, i, 1);
  }
  set(1, 1, 0, 1);
  set(1, 2, 3, 1);
  set(1, 3, 2, 1);
  set(2, 1, 3, -1);
  set(2, 2, 0, 0);
  set(2, 3, 0, 0);
  set(3, 1, 2, -1);
  set(3, 2, 0, 0);
  set(3, 3, 0, 0);
  h.algebra.set_unit(unit_vec(4, 0));
  h.comult.assign(4, Tensor2(4, 4));
  h.comult[0](0, 0) = 1;
  h.comult[1](1, 1) = 1;
  h.comult[2](2, 0) = 1;
  h.comult[2](1, 2) = 1;
  h.comult[3](3, 1) = 1;
  h.comult[3](0, 3) = 1;
  h.counit = {Cyclotomic(1), Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)};
  h.antipode = Matrix(4, 4);
  h.antipode(0, 0) = 1;
  h.antipode(1, 1) = 1;
  h.antipode(3, 2) = -1;
  h.antipode(2, 3) = 1;
  return h;
}

inline Cyclotomic small_scalar(std::mt19937& rng, int conductor) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> power(0, conductor - 1);
  return Cyclotomic(coef(rng)) * Cyclotomic::root_of_unity(power(rng), conductor);
}

inline Vec random_vec(std::mt19937& rng, int dim, int conductor) {
  Vec v(dim);
  for (auto& c : v) c = small_scalar(rng, conductor);
  return v;
}

inline Tensor2 random_tensor(std::mt19937& rng, int d1, int d2, int conductor, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  Tensor2 t(d1, d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j)
      if (keep(rng)) t(i, j) = small_scalar(rng, conductor);
  return t;
}

}  // namespace fixtures

namespace fixtures {

// (Z/p)^2 with (x, y) at index x*p + y.
inline FiniteGroup zp2(int p) { return direct_product(cyclic_group(p), cyclic_group(p)); }

// omega(a, b) = zeta_p^(a1 b2 - a2 b1).
inline Cyclotomic omega(int p, int a, int b) {
  int e = ((a / p) * (b % p) - (a % p) * (b / p)) % p;
  return Cyclotomic::root_of_unity((e + p) % p, p);
}

// p^-2 sum_{a,b} omega(a, b) a (x) b on k[(Z/p)^2].
inline Tensor2 symplectic_j(int p) {
  int n = p * p;
  Tensor2 j(n, n);
  Cyclotomic s = Cyclotomic(Rational(1, n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) j(a, b) = s * omega(p, a, b);
  return j;
}

// Z2 acting on (Z/p)^2 by (x, y) -> (x, -y), determinant -1.
inline SemidirectProduct det_minus_one(int p) {
  std::vector<std::vector<int>> act(2, std::vector<int>(p * p));
  for (int a = 0; a < p * p; ++a) {
    act[0][a] = a;
    act[1][a] = (a / p) * p + (p - a % p) % p;
  }
  return semidirect_product(cyclic_group(2), zp2(p), act);
}

// Push a tensor on a subgroup (given by an index map) into the parent group.
inline Tensor2 push_forward(const Tensor2& j, const std::vector<int>& into, int n) {
  Tensor2 out(n, n);
  for (auto [a, b] : j.support()) out(into[a], into[b]) = j(a, b);
  return out;
}

}  // namespace fixtures

namespace fixtures {

// Entry-wise equality of two presentations on the same basis, ignoring the conductor.
inline bool same_presentation(const HopfPresentation& a, const HopfPresentation& b) {
  return a.algebra == b.algebra && a.comult == b.comult && a.counit == b.counit && a.antipode == b.antipode &&
         a.parity == b.parity;
}

}  // namespace fixtures

namespace fixtures {

// R_g - (lambda/2)(x (x) x - x (x) gx + gx (x) gx + gx (x) x) on 1, g, x, gx.
inline Tensor2 sweedler_r(const Rational& lambda) {
  Tensor2 r = r_u(sweedler_by_hand(), unit_vec(4, 1));
  Cyclotomic c = Cyclotomic(lambda) * Cyclotomic(Rational(1, 2));
  r(2, 2) -= c;
  r(2, 3) += c;
  r(3, 3) -= c;
  r(3, 2) -= c;
  return r;
}

}  // namespace fixtures
