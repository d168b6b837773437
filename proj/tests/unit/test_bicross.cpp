#include <doctest.h>

#include <set>

#include "trihopf/bicross.hpp"
#include "trihopf/errors.hpp"

using namespace trihopf;

namespace {

// Pairs of subgroups whose products a*b cover G exactly once.
int count_by_products(const FiniteGroup& g) {
  int count = 0;
  for (const auto& a : all_subgroups(g))
    for (const auto& b : all_subgroups(g)) {
      std::multiset<int> prods;
      for (int x : a.elements)
        for (int y : b.elements) prods.insert(g.mul(x, y));
      bool exact = static_cast<int>(prods.size()) == g.order();
      for (int z = 0; z < g.order() && exact; ++z) exact = prods.count(z) == 1;
      if (exact) ++count;
    }
  return count;
}

ExactFactorization s3_a3_12() {
  FiniteGroup g = symmetric_group(3);
  Subgroup a3 = generated_subgroup(g, {g.find("(1 2 3)")});
  Subgroup t = generated_subgroup(g, {g.find("(1 2)")});
  return make_factorization(g, a3, t);
}

void check_same(const HopfPresentation& a, const HopfPresentation& b) {
  CHECK(a.algebra == b.algebra);
  CHECK(a.comult == b.comult);
  CHECK(a.counit == b.counit);
  CHECK(a.antipode == b.antipode);
}

}  // namespace

TEST_CASE("exact factorizations agree with a product scan") {
  for (const auto& g : {cyclic_group(1), cyclic_group(6), symmetric_group(3), direct_product(cyclic_group(2), cyclic_group(2))}) {
    auto fs = find_exact_factorizations(g);
    CHECK(static_cast<int>(fs.size()) == count_by_products(g));
  }
  CHECK(find_exact_factorizations(cyclic_group(6)).size() == 4);
  CHECK(find_exact_factorizations(cyclic_group(1)).size() == 1);
  CHECK(find_exact_factorizations(symmetric_group(4), 5).size() == 5);
  auto f = s3_a3_12();
  bool found = false;
  for (const auto& e : find_exact_factorizations(f.g))
    if (e.g1 == f.g1 && e.g2 == f.g2) found = true;
  CHECK(found);
}

TEST_CASE("factorization preconditions") {
  FiniteGroup g = symmetric_group(3);
  Subgroup t = generated_subgroup(g, {g.find("(1 2)")});
  Subgroup t2 = generated_subgroup(g, {g.find("(1 3)")});
  CHECK_THROWS_AS(make_factorization(g, t, t), StructureError);
  CHECK_THROWS_AS(make_factorization(g, t, t2), StructureError);
}

TEST_CASE("matched actions come from refactoring") {
  auto f = s3_a3_12();
  auto m = matched_actions(f);
  const FiniteGroup& g = f.g;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 2; ++b) {
      // a b = (a.b) a'' with a'' in G1
      int ab = g.mul(f.g1.elements[a], f.g2.elements[b]);
      int rest = g.mul(g.inv(f.g2.elements[m.g1_on_g2[a][b]]), ab);
      CHECK(f.g1.contains(rest));
      int ba = g.mul(f.g2.elements[b], f.g1.elements[a]);
      int rest2 = g.mul(g.inv(f.g1.elements[m.g2_on_g1[b][a]]), ba);
      CHECK(f.g2.contains(rest2));
    }
}

TEST_CASE("bicrossproducts are Hopf algebras") {
  for (const auto& g : {cyclic_group(6), symmetric_group(3), direct_product(cyclic_group(2), cyclic_group(2))})
    for (const auto& f : find_exact_factorizations(g)) {
      auto r = verify_hopf(bicrossproduct(f));
      CHECK_MESSAGE(r.passed(), (r.failure() ? r.failure()->name + " " + r.failure()->witness : ""));
    }
  auto h = bicrossproduct(s3_a3_12());
  CHECK(h.dim() == 6);
}

TEST_CASE("degenerate factorizations give k[G] and its dual") {
  FiniteGroup g = symmetric_group(3);
  auto whole = whole_group(g), triv = trivial_subgroup(g);
  check_same(bicrossproduct(make_factorization(g, whole, triv)), group_algebra(g, 1));
  check_same(bicrossproduct(make_factorization(g, triv, whole)), dual_hopf(group_algebra(g, 1)));
}

TEST_CASE("perturbed bicrossproduct fails with a witness") {
  auto h = bicrossproduct(s3_a3_12());
  h.algebra.set_product(1, 2, Vec{0, 0, 0, 0, 0, Cyclotomic(1)});
  auto r = verify_hopf(h);
  CHECK_FALSE(r.passed());
  REQUIRE(r.failure() != nullptr);
  CHECK_FALSE(r.failure()->witness.empty());

  auto h2 = bicrossproduct(s3_a3_12());
  h2.comult[4](0, 0) += Cyclotomic(1);
  CHECK_FALSE(verify_hopf(h2).passed());
}

TEST_CASE("S3 factorization is not biperfect") {
  auto r = biperfect_test(s3_a3_12());
  CHECK_FALSE(r.group_theoretic);
  CHECK(r.grouplike_count_h == 2);
  CHECK(r.grouplike_count_hdual == 6);
  CHECK(r.formula_h == 2);
  CHECK(r.formula_hdual == 6);
  CHECK(r.consistent);
}

TEST_CASE("abelian factorizations are never biperfect") {
  for (const auto& f : find_exact_factorizations(cyclic_group(6))) {
    auto r = biperfect_test(f);
    CHECK_FALSE(r.group_theoretic);
    CHECK(r.consistent);
    CHECK(r.grouplike_count_h == 6);
    CHECK(r.grouplike_count_hdual == 6);
  }
  FiniteGroup g = direct_product(cyclic_group(2), cyclic_group(2));
  auto r = biperfect_test(make_factorization(g, whole_group(g), trivial_subgroup(g)));
  CHECK(r.grouplike_count_h == 4);
}

TEST_CASE("block sizes follow the orbit formula") {
  for (const auto& g : {symmetric_group(3), cyclic_group(6)})
    for (const auto& f : find_exact_factorizations(g))
      CHECK(block_profile(bicrossproduct(f).algebra).sizes == predicted_block_sizes(f));
  // H(S3, A3, <(12)>) is commutative: six 1x1 blocks.
  CHECK(predicted_block_sizes(s3_a3_12()) == std::vector<int>(6, 1));
  // H(S3, <(12)>, A3): <(12)> on the three points of G/<(12)> has one fixed point and one free orbit.
  FiniteGroup g = symmetric_group(3);
  auto f = make_factorization(g, generated_subgroup(g, {g.find("(1 2)")}), generated_subgroup(g, {g.find("(1 2 3)")}));
  CHECK(predicted_block_sizes(f) == std::vector<int>{1, 1, 2});
}

TEST_CASE("swapping the factors gives the dual") {
  for (const auto& g : {symmetric_group(3), cyclic_group(6)})
    for (const auto& f : find_exact_factorizations(g)) {
      auto d = duality_check(f);
      CHECK(d.report.passed());
      CHECK_FALSE(d.map.empty());
    }
}
