#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace trihopf {

// Exact rational number. Values whose reduced numerator and denominator fit
// in int64 are kept inline; larger values spill to a GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(int64_t n, int64_t d);
  explicit Rational(const mpq_class& q);
  static Rational parse(const std::string& s);

  Rational(const Rational& o);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;
  bool is_small() const { return !big_; }

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  long double to_long_double() const;
  std::string str() const;

  Rational operator-() const;
  Rational inv() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 n, __int128 d);
  static Rational from_mpq(mpq_class q);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace trihopf
