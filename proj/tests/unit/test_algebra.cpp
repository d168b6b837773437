#include <doctest.h>

#include "trihopf/algebra.hpp"
#include "trihopf/errors.hpp"

using namespace trihopf;

namespace {

// Matrix algebra M_n(Q) on matrix units E_ij at index i*n+j.
StructureAlgebra matrix_algebra(int n, int conductor) {
  StructureAlgebra a(n * n, conductor);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j == k) a.set_product(i * n + j, k * n + l, SparseVec{{i * n + l, Cyclotomic(1)}});
  Vec u(n * n);
  for (int i = 0; i < n; ++i) u[i * n + i] = Cyclotomic(1);
  a.set_unit(u);
  return a;
}

// Q[x]/(x^2+1).
StructureAlgebra gaussian(int conductor) {
  StructureAlgebra a(2, conductor);
  a.set_product(0, 0, SparseVec{{0, Cyclotomic(1)}});
  a.set_product(0, 1, SparseVec{{1, Cyclotomic(1)}});
  a.set_product(1, 0, SparseVec{{1, Cyclotomic(1)}});
  a.set_product(1, 1, SparseVec{{0, Cyclotomic(-1)}});
  a.set_unit(unit_vec(2, 0));
  return a;
}

}  // namespace

TEST_CASE("group algebra of S3") {
  auto s3 = symmetric_group(3);
  auto a = group_algebra_structure(s3, 3);
  CHECK(verify_algebra(a).passed());
  CHECK(jacobson_radical(a).empty());
  CHECK(center(a).size() == 3);
  auto bp = block_profile(a);
  CHECK(bp.sizes == std::vector<int>{1, 1, 2});
  auto idem = primitive_central_idempotents(a);
  CHECK(idem.size() == 3);
  Vec sum(6);
  for (const auto& e : idem) {
    CHECK(a.multiply(e, e) == e);
    sum = add(sum, e);
  }
  CHECK(sum == a.unit());
  auto mods = simple_modules(a);
  std::vector<int> dims;
  for (const auto& m : mods) {
    CHECK(verify_representation(a, m).passed());
    dims.push_back(m.dim);
  }
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 1, 2});
}

TEST_CASE("simple modules of S3 over the rationals") {
  // Here the echelon basis of the 2-dim corner has no eigenvalue in Q.
  auto a = group_algebra_structure(symmetric_group(3), 1);
  std::vector<int> dims;
  for (const auto& m : simple_modules(a)) {
    CHECK(verify_representation(a, m).passed());
    dims.push_back(m.dim);
  }
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 1, 2});
}

TEST_CASE("matrix algebras and radicals") {
  auto m3 = matrix_algebra(3, 1);
  CHECK(verify_algebra(m3).passed());
  CHECK(block_profile(m3).sizes == std::vector<int>{3});
  auto mods = simple_modules(m3);
  REQUIRE(mods.size() == 1);
  CHECK(mods[0].dim == 3);
  CHECK(verify_representation(m3, mods[0]).passed());

  // upper triangular 2x2: basis E11, E12, E22
  StructureAlgebra t(3, 1);
  t.set_product(0, 0, SparseVec{{0, Cyclotomic(1)}});
  t.set_product(0, 1, SparseVec{{1, Cyclotomic(1)}});
  t.set_product(1, 2, SparseVec{{1, Cyclotomic(1)}});
  t.set_product(2, 2, SparseVec{{2, Cyclotomic(1)}});
  Vec u(3);
  u[0] = Cyclotomic(1);
  u[2] = Cyclotomic(1);
  t.set_unit(u);
  CHECK(verify_algebra(t).passed());
  CHECK(jacobson_radical(t).size() == 1);
  auto bp = block_profile(t);
  CHECK(bp.radical_dim == 1);
  CHECK(bp.sizes == std::vector<int>{1, 1});
  auto tm = simple_modules(t);
  CHECK(tm.size() == 2);
  for (const auto& m : tm) CHECK(verify_representation(t, m).passed());
}

TEST_CASE("splitting depends on the conductor") {
  CHECK(block_profile(gaussian(1)).sizes == std::vector<int>{1, 1});
  CHECK_THROWS_AS(split_commutative(gaussian(1)), NonSplitError);
  auto idem = split_commutative(gaussian(4));
  CHECK(idem.size() == 2);
}

TEST_CASE("twisted group algebra with nondegenerate cocycle is simple") {
  auto h = direct_product(cyclic_group(3), cyclic_group(3));
  auto basis = abelian_basis(h);
  auto c = cocycle_from_bilinear(h, basis, {{0, 1}, {0, 0}}, 3);
  auto a = twisted_group_algebra(h, c, 3);
  CHECK(verify_algebra(a).passed());
  CHECK(block_profile(a).sizes == std::vector<int>{3});
  auto mods = simple_modules(a);
  REQUIRE(mods.size() == 1);
  CHECK(mods[0].dim == 3);
  CHECK(verify_representation(a, mods[0]).passed());
  auto triv = twisted_group_algebra(h, trivial_cocycle(9), 3);
  CHECK(block_profile(triv).sizes == std::vector<int>(9, 1));
}

TEST_CASE("perturbed structure constant breaks associativity with a witness") {
  auto a = group_algebra_structure(cyclic_group(3), 1);
  a.set_product(1, 1, SparseVec{{2, Cyclotomic(2)}});
  auto rep = verify_algebra(a);
  CHECK(!rep.passed());
  REQUIRE(rep.failure() != nullptr);
  CHECK(!rep.failure()->witness.empty());
}

TEST_CASE("generated subalgebra and quotient") {
  auto s3 = symmetric_group(3);
  auto a = group_algebra_structure(s3, 1);
  int c3 = s3.find("(1 2 3)");
  auto sub = generated_subalgebra(a, {unit_vec(6, c3)});
  CHECK(sub.size() == 3);
  auto r = restrict_algebra(a, sub);
  CHECK(verify_algebra(r).passed());
  CHECK(r.is_commutative());
}
