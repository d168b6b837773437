#include "trihopf/rational.hpp"

#include <limits>
#include <numeric>

#include "trihopf/errors.hpp"

namespace trihopf {
namespace {

constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

bool fits(__int128 v) { return v <= kMax && v >= -kMax; }

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

uint64_t gcd64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

// gcd(|t|, g) for g > 0 fitting in int64.
uint64_t gcd_wide(__int128 t, int64_t g) {
  auto r = static_cast<uint64_t>(abs128(t) % static_cast<__int128>(g));
  return gcd64(r, static_cast<uint64_t>(g));
}

mpz_class mpz_from_wide(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  auto hi = static_cast<uint64_t>(u >> 64);
  auto lo = static_cast<uint64_t>(u);
  mpz_class z = hi;
  z <<= 64;
  z += mpz_class(static_cast<unsigned long>(lo));
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(int64_t n) : num_(n), den_(1) {
  if (n == std::numeric_limits<int64_t>::min()) *this = from_mpq(mpq_class(mpz_from_wide(n)));
}

Rational::Rational(int64_t n, int64_t d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw UsageError("cannot parse rational '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  q.canonicalize();
  return from_mpq(q);
}

Rational::Rational(const Rational& o)
    : num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  return *this;
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  if (fits(n) && fits(d)) {
    auto g = gcd64(static_cast<uint64_t>(abs128(n)), static_cast<uint64_t>(d));
    Rational r;
    r.num_ = static_cast<int64_t>(n / static_cast<__int128>(g));
    r.den_ = static_cast<int64_t>(d / static_cast<__int128>(g));
    return r;
  }
  mpq_class q(mpz_from_wide(n), mpz_from_wide(d));
  q.canonicalize();
  return from_mpq(q);
}

Rational Rational::from_mpq(mpq_class q) {
  Rational r;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
    r.num_ = n.get_si();
    r.den_ = d.get_si();
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

long double Rational::to_long_double() const {
  if (big_) return static_cast<long double>(big_->get_d());
  return static_cast<long double>(num_) / static_cast<long double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational");
  if (big_) return from_mpq(1 / *big_);
  return from_wide(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() + b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
  int64_t g = static_cast<int64_t>(gcd64(static_cast<uint64_t>(a.den_), static_cast<uint64_t>(b.den_)));
  __int128 t = static_cast<__int128>(a.num_) * (b.den_ / g) + static_cast<__int128>(b.num_) * (a.den_ / g);
  if (t == 0) return Rational();
  auto g2 = static_cast<int64_t>(gcd_wide(t, g));
  __int128 n = t / g2;
  __int128 d = static_cast<__int128>(a.den_ / g) * (b.den_ / g2);
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<int64_t>(n);
    r.den_ = static_cast<int64_t>(d);
    return r;
  }
  return Rational::from_wide(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() * b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, 1);
  auto g1 = static_cast<int64_t>(gcd64(static_cast<uint64_t>(a.num_ < 0 ? -a.num_ : a.num_),
                                       static_cast<uint64_t>(b.den_)));
  auto g2 = static_cast<int64_t>(gcd64(static_cast<uint64_t>(b.num_ < 0 ? -b.num_ : b.num_),
                                       static_cast<uint64_t>(a.den_)));
  __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
  __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<int64_t>(n);
    r.den_ = static_cast<int64_t>(d);
    return r;
  }
  return Rational::from_wide(n, d);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }

Rational& Rational::operator+=(const Rational& o) { return *this = *this + o; }
Rational& Rational::operator-=(const Rational& o) { return *this = *this - o; }
Rational& Rational::operator*=(const Rational& o) { return *this = *this * o; }
Rational& Rational::operator/=(const Rational& o) { return *this = *this / o; }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in size class
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

}  // namespace trihopf
