#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "trihopf/errors.hpp"
#include "trihopf/rmatrix.hpp"
#include "trihopf/twist.hpp"

using namespace trihopf;

namespace {

int character_matching(const CharacterGroup& cg, const std::vector<Cyclotomic>& values, int conductor) {
  for (size_t i = 0; i < cg.characters.size(); ++i) {
    bool ok = true;
    for (size_t g = 0; g < values.size() && ok; ++g)
      ok = cg.characters[i].value(static_cast<int>(g), conductor) == values[g];
    if (ok) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

TEST_CASE("trivial twist") {
  auto h = group_algebra(cyclic_group(4), 4);
  auto t = verify_twist(h, one_tensor(h));
  CHECK(t.inverse == one_tensor(h));
  auto tw = twist_hopf(h, t);
  CHECK(tw.comult == h.comult);
  CHECK(tw.antipode == h.antipode);
  CHECK(twist_r(h, one_tensor(h), t) == one_tensor(h));
  auto c = trivial_cocycle(4);
  CHECK(abelian_twist(cyclic_group(4), c, 4).j == one_tensor(h));
}

TEST_CASE("twist status distinguishes singular quasitwists") {
  auto h = group_algebra(cyclic_group(2), 1);
  // (1 + u)/2 (x) (1 + u)/2 ... fails the counit normalization
  Tensor2 bad = one_tensor(h);
  bad(1, 1) = Cyclotomic(1);
  auto c = check_twist(h, bad);
  CHECK(c.status == TwistStatus::not_quasitwist);
  CHECK(!c.report.passed());
  CHECK_THROWS_AS(verify_twist(h, bad), StructureError);
}

TEST_CASE("symplectic twist on (Z/3)^2") {
  const int p = 3;
  auto hgrp = fixtures::zp2(p);
  auto h = group_algebra(hgrp, p);
  Tensor2 j = fixtures::symplectic_j(p);
  auto t = verify_twist(h, j);
  // the same twist from its cocycle on the character group
  auto cg = character_group(hgrp);
  TwoCocycle c(trivial_cocycle(9));
  for (int chi = 0; chi < 9; ++chi)
    for (int psi = 0; psi < 9; ++psi) c(chi, psi) = evaluate_characters(hgrp, j, chi, psi, p);
  CHECK(cocycle_violation(cg.dual, c).empty());
  CHECK(is_bimultiplicative(cg.dual, c));
  CHECK(is_nondegenerate(cg.dual, c));
  auto t2 = abelian_twist(hgrp, c, p);
  CHECK(t2.j == j);
  // under u -> omega(u, .), c(chi_u, chi_v) = omega(v, u)
  for (int u = 0; u < 9; ++u)
    for (int v = 0; v < 9; ++v) {
      std::vector<Cyclotomic> fu, fv;
      for (int x = 0; x < 9; ++x) {
        fu.push_back(fixtures::omega(p, u, x));
        fv.push_back(fixtures::omega(p, v, x));
      }
      int cu = character_matching(cg, fu, p), cv = character_matching(cg, fv, p);
      REQUIRE(cu >= 0);
      REQUIRE(cv >= 0);
      CHECK(c(cu, cv) == fixtures::omega(p, v, u));
    }
  // Movshev: (A_J)* is M_3 and the stabilizer is all of H
  auto dual = movshev_dual_algebra(hgrp, j, p);
  CHECK(block_profile(dual).sizes == std::vector<int>{3});
  CHECK(movshev_stabilizer(hgrp, j, p).elements.size() == 9);
  // J_21^-1 J is triangular with Drinfeld element 1
  auto r = twist_r(h, one_tensor(h), t);
  auto tw = twist_hopf(h, t);
  CHECK(verify_hopf(tw).passed());
  CHECK(verify_quasitriangular(tw, r).passed());
  CHECK(is_triangular(tw, r));
  CHECK(drinfeld_element(tw, r).u == h.one());
  CHECK(minimal_part(tw, r).rank == 9);
}

TEST_CASE("Z2 x Z2 twist from a nondegenerate cocycle") {
  auto a = direct_product(cyclic_group(2), cyclic_group(2));
  auto cg = character_group(a);
  auto c = cocycle_from_bilinear(cg.dual, abelian_basis(cg.dual), {{0, 1}, {0, 0}}, 2);
  auto t = abelian_twist(a, c, 1);
  auto h = group_algebra(a, 1);
  CHECK(check_twist(h, t.j).status == TwistStatus::twist);
  CHECK(t.j != one_tensor(h));
  for (int chi = 0; chi < 4; ++chi)
    for (int psi = 0; psi < 4; ++psi) CHECK(evaluate_characters(a, t.j, chi, psi, 1) == c(chi, psi));
  CHECK(block_profile(movshev_dual_algebra(a, t.j, 1)).sizes == std::vector<int>{2});
  CHECK(block_profile(movshev_dual_algebra(a, one_tensor(h), 1)).sizes == std::vector<int>{1, 1, 1, 1});
  CHECK(movshev_stabilizer(a, one_tensor(h), 1).elements.size() == 1);
}

TEST_CASE("twisting the p = 3 semidirect product") {
  const int p = 3;
  auto sp = fixtures::det_minus_one(p);
  const auto& g = sp.group;
  std::vector<int> into(9);
  for (int a = 0; a < 9; ++a) into[a] = sp.pair(0, a);
  Tensor2 j = fixtures::push_forward(fixtures::symplectic_j(p), into, 18);
  auto h = group_algebra(g, p);
  auto t = verify_twist(h, j);
  auto tw = twist_hopf(h, t);
  CHECK(verify_hopf(tw).passed());
  CHECK(!is_cocommutative(tw));
  CHECK(!is_commutative(tw));
  // twisting back by J^-1 recovers k[G]
  auto back = twist_hopf(tw, verify_twist(tw, t.inverse));
  CHECK(back.comult == h.comult);
  CHECK(back.antipode == h.antipode);
  // stabilizer of the J supported on H is H
  auto st = movshev_stabilizer(g, j, p);
  CHECK(st.elements.size() == 9);
  for (int x : st.elements) CHECK(sp.q_part(x) == 0);
}

TEST_CASE("gauge transformations preserve twists") {
  auto grp = cyclic_group(4);
  auto h = group_algebra(grp, 4);
  auto a = direct_product(cyclic_group(2), cyclic_group(2));
  std::mt19937 rng(99);
  auto base = verify_twist(h, one_tensor(h));
  for (int trial = 0; trial < 8; ++trial) {
    Vec x = fixtures::random_vec(rng, 4, 4);
    Cyclotomic e = h.eps(x);
    if (e.is_zero() || !h.algebra.inverse(x)) continue;
    x = scale(x, e.inv());
    auto tx = gauge(h, base, x);
    CHECK(check_twist(h, tx.j).status == TwistStatus::twist);
    auto found = find_gauge(h, base.j, tx.j);
    CHECK(found.found);
    if (found.found) CHECK(gauge(h, base, found.x).j == tx.j);
  }
  // grouplike gauge is conjugation
  auto h2 = group_algebra(a, 1);
  auto cg = character_group(a);
  auto t = abelian_twist(a, cocycle_from_bilinear(cg.dual, abelian_basis(cg.dual), {{0, 1}, {0, 0}}, 2), 1);
  for (int gi = 0; gi < 4; ++gi) {
    Vec g = unit_vec(4, gi);
    Vec gi_inv = unit_vec(4, a.inv(gi));
    auto tg = gauge(h2, t, g);
    CHECK(tg.j == tensor_mul(h2, tensor_mul(h2, Tensor2::pure(g, g), t.j), Tensor2::pure(gi_inv, gi_inv)));
  }
}

TEST_CASE("gauge equivalent twists give isomorphic triangular structures") {
  const int p = 3;
  auto sp = fixtures::det_minus_one(p);
  auto h = group_algebra(sp.group, p);
  std::vector<int> into(9);
  for (int a = 0; a < 9; ++a) into[a] = sp.pair(0, a);
  auto t = verify_twist(h, fixtures::push_forward(fixtures::symplectic_j(p), into, 18));
  // x = 1 + c e a f with e, f = (1 +- s)/2 for the reflection s, so x^-1 = 1 - c e a f
  // keeps coefficients small while conjugation by x is nontrivial.
  const int s = sp.pair(1, 0);
  Vec e(18), f(18);
  e[0] = f[0] = Cyclotomic(Rational(1, 2));
  e[s] = Cyclotomic(Rational(1, 2));
  f[s] = Cyclotomic(Rational(-1, 2));
  auto a1 = twist_hopf(h, t);
  auto r1 = twist_r(h, one_tensor(h), t);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 2; ++trial) {
    int a = sp.pair(0, std::uniform_int_distribution<int>(1, 8)(rng));
    Vec ga(18);
    ga[a] = Cyclotomic(1);
    Vec n = h.mul(h.mul(e, ga), f);
    REQUIRE(h.mul(n, n) == Vec(18));
    Vec x = h.one();
    Cyclotomic c = fixtures::small_scalar(rng, p);
    if (c.is_zero()) c = Cyclotomic(1);
    for (int i = 0; i < 18; ++i) x[i] += c * n[i];
    REQUIRE(h.eps(x) == Cyclotomic(1));
    auto tx = gauge(h, t, x);
    CHECK(check_twist(h, tx.j, default_exec(), &tx.inverse).status == TwistStatus::twist);
    auto a2 = twist_hopf(h, tx);
    auto r2 = twist_r(h, one_tensor(h), tx);
    Matrix conj = h.algebra.left_mult(x) * h.algebra.right_mult(*h.algebra.inverse(x));
    REQUIRE(conj != Matrix::identity(18));
    for (int i = 0; i < 18; ++i) CHECK(a2.coproduct(conj.column(i)) == apply_maps(conj, conj, a1.comult[i]));
    CHECK(apply_maps(conj, conj, r1) == r2);
    CHECK(conj * a1.antipode == a2.antipode * conj);
  }
}

TEST_CASE("extracting a quasitwist from a G-coalgebra") {
  const int p = 3;
  auto hgrp = fixtures::zp2(p);
  Tensor2 j = fixtures::symplectic_j(p);
  auto c = twisted_coalgebra(hgrp, j, p);
  CHECK(verify_g_coalgebra(hgrp, c).passed());
  auto ex = extract_quasitwist(hgrp, c);
  CHECK(ex.j == j);
  CHECK(verify_g_coalgebra_map(hgrp, twisted_coalgebra(hgrp, ex.j, p), c, ex.iso).passed());

  // the dual coalgebra of the twisted group algebra
  auto cg = character_group(hgrp);
  auto coc = cocycle_from_bilinear(hgrp, abelian_basis(hgrp), {{0, 1}, {0, 0}}, p);
  auto dc = dual_twisted_group_coalgebra(hgrp, coc, p);
  CHECK(verify_g_coalgebra(hgrp, dc).passed());
  auto ex2 = extract_quasitwist(hgrp, dc);
  auto h = group_algebra(hgrp, p);
  CHECK(check_twist(h, ex2.j).status == TwistStatus::twist);
  CHECK(verify_g_coalgebra_map(hgrp, twisted_coalgebra(hgrp, ex2.j, p), dc, ex2.iso).passed());
  CHECK(block_profile(movshev_dual_algebra(hgrp, ex2.j, p)).sizes == std::vector<int>{3});

  // abelian G with the plain coalgebra: J is gauge equivalent to 1 (x) 1
  auto z4 = cyclic_group(4);
  auto plain = twisted_coalgebra(z4, one_tensor(group_algebra(z4, 4)), 4);
  auto ex3 = extract_quasitwist(z4, plain);
  CHECK(find_gauge(group_algebra(z4, 4), one_tensor(group_algebra(z4, 4)), ex3.j).found);
}
