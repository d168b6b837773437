#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "trihopf/rational.hpp"

namespace trihopf {

// Q(zeta_N) presented as Q[x]/(Phi_N). One immutable instance per conductor.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int conductor);

  int conductor() const { return n_; }
  int degree() const { return phi_; }
  // Coefficients of Phi_N, lowest degree first, length degree()+1.
  const std::vector<int64_t>& modulus() const { return modulus_; }
  // zeta^k reduced mod Phi_N, any integer k.
  const std::vector<int64_t>& zeta_power(int64_t k) const;
  // x^k reduced mod Phi_N for degree() <= k <= 2*degree()-2.
  const std::vector<int64_t>& reduction(int k) const { return reduction_[k - phi_]; }

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;

 private:
  explicit CyclotomicField(int n);
  static const CyclotomicField& get_locked(int conductor);

  int n_;
  int phi_;
  std::vector<int64_t> modulus_;
  std::vector<std::vector<int64_t>> powers_;
  std::vector<std::vector<int64_t>> reduction_;
};

std::vector<int64_t> cyclotomic_polynomial(int n);
int euler_phi(int n);

// Element of Q(zeta_N). Elements of conductor 1 (rationals) combine freely
// with any field; other conductor mismatches raise UsageError.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(int64_t v);         // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const CyclotomicField& f, const Rational& r);
  Cyclotomic(const CyclotomicField& f, std::vector<Rational> coeffs);

  static Cyclotomic root_of_unity(int64_t k, int n);
  static Cyclotomic zero(int n);
  static Cyclotomic one(int n);

  const CyclotomicField& field() const { return *field_; }
  int conductor() const { return field_->conductor(); }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  Rational coeff(int i) const;
  std::vector<Rational> coeffs() const;
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic inv() const;
  // Field automorphism zeta -> zeta^j, gcd(j, N) = 1.
  Cyclotomic galois(int64_t j) const;
  Cyclotomic conj() const { return galois(-1); }
  // Complex embedding zeta -> exp(2 pi i j / N).
  std::complex<long double> to_complex(int64_t j = 1) const;
  std::string str() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  // this += a * b without a temporary for the product when possible.
  void add_product(const Cyclotomic& a, const Cyclotomic& b);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  friend Cyclotomic embed(const Cyclotomic& a, int m);
  void trim();

  const CyclotomicField* field_;
  std::vector<Rational> c_;  // empty means zero, otherwise length degree()
};

// Image of a under zeta_N -> zeta_M^(M/N); requires N | M.
Cyclotomic embed(const Cyclotomic& a, int m);

// Field both operands live in (conductor 1 adapts), or UsageError.
const CyclotomicField& common_field(const Cyclotomic& a, const Cyclotomic& b);

using Vec = std::vector<Cyclotomic>;

}  // namespace trihopf
