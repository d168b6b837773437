#include <doctest.h>

#include <random>

#include "trihopf/errors.hpp"
#include "trihopf/linalg.hpp"
#include "trihopf/scalar.hpp"

using namespace trihopf;

namespace {

Cyclotomic random_element(std::mt19937& rng, int n) {
  const auto& f = CyclotomicField::get(n);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c;
  for (int i = 0; i < f.degree(); ++i) c.emplace_back(num(rng), den(rng));
  return Cyclotomic(f, c);
}

}  // namespace

TEST_CASE("rational arithmetic crosses into GMP and back") {
  Rational big(1);
  for (int i = 0; i < 10; ++i) big *= Rational(1000000007);
  CHECK(!big.is_small());
  mpq_class ref(1);
  for (int i = 0; i < 10; ++i) ref *= 1000000007;
  CHECK(big.to_mpq() == ref);
  Rational back = big / big;
  CHECK(back.is_one());
  CHECK(back.is_small());
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK(Rational::parse("-22/4") == Rational(-11, 2));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<int64_t>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(15) == std::vector<int64_t>{1, -1, 0, 1, -1, 1, 0, -1, 1});
  CHECK(euler_phi(36) == 12);
}

TEST_CASE("roots of unity") {
  auto i = Cyclotomic::root_of_unity(1, 4);
  CHECK(i * i == Cyclotomic(-1));
  auto w = Cyclotomic::root_of_unity(1, 3);
  CHECK(w + w * w == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(5, 6) * Cyclotomic::root_of_unity(1, 6) == Cyclotomic(1));
  CHECK(Cyclotomic::root_of_unity(3, 6) == Cyclotomic(-1));
  for (int n : {5, 7, 8, 9, 12}) {
    auto z = Cyclotomic::root_of_unity(1, n);
    Cyclotomic p(1);
    for (int k = 0; k < n; ++k) p *= z;
    CHECK(p.is_one());
  }
}

TEST_CASE("inverse and division by zero") {
  auto a = Cyclotomic(1) + Cyclotomic::root_of_unity(1, 5);
  CHECK((a * a.inv()).is_one());
  CHECK_THROWS_AS(Cyclotomic::zero(5).inv(), DivisionByZero);
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(1, 4) + Cyclotomic::root_of_unity(1, 6), UsageError);
  // rationals mix with any field
  CHECK(Cyclotomic(Rational(1, 2)) * Cyclotomic::root_of_unity(2, 4) == Cyclotomic(Rational(-1, 2)));
}

TEST_CASE("embedding between conductors") {
  auto i = Cyclotomic::root_of_unity(1, 4);
  CHECK(embed(i, 12) == Cyclotomic::root_of_unity(3, 12));
  CHECK_THROWS_AS(embed(i, 6), UsageError);
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    auto a = random_element(rng, 6);
    auto b = random_element(rng, 6);
    CHECK(embed(a * b, 12) == embed(a, 12) * embed(b, 12));
    CHECK(embed(a + b, 12) == embed(a, 12) + embed(b, 12));
  }
}

TEST_CASE("field axioms hold on random elements") {
  std::mt19937 rng(12345);
  for (int n : {3, 4, 5, 6, 8, 12}) {
    for (int t = 0; t < 15; ++t) {
      auto a = random_element(rng, n);
      auto b = random_element(rng, n);
      auto c = random_element(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
      CHECK((a - a).is_zero());
      // Galois conjugation is a ring automorphism
      CHECK((a * b).conj() == a.conj() * b.conj());
      auto z = (a * b).to_complex();
      auto w = a.to_complex() * b.to_complex();
      CHECK(std::abs(z - w) < 1e-9L);
    }
  }
}

TEST_CASE("linear algebra basics") {
  const int n = 4;
  Matrix m(3, 3);
  auto i = Cyclotomic::root_of_unity(1, n);
  m(0, 0) = Cyclotomic(1);
  m(0, 1) = i;
  m(1, 0) = i;
  m(1, 1) = Cyclotomic(-1);  // row1 = i*row0
  m(2, 2) = Cyclotomic(2);
  CHECK(rank(m) == 2);
  CHECK(determinant(m).is_zero());
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero_vec(m.apply(ns[0])));
  m(1, 1) = Cyclotomic(3);
  CHECK(determinant(m) == Cyclotomic(2) * (Cyclotomic(3) - i * i));
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix::identity(3));
  CoordinateSolver cs({unit_vec(3, 0), add(unit_vec(3, 1), unit_vec(3, 2))});
  auto c = cs.coords(Vec{Cyclotomic(2), i, i});
  REQUIRE(c.has_value());
  CHECK((*c)[1] == i);
  CHECK(!cs.coords(unit_vec(3, 1)).has_value());
}
