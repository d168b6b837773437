#include "trihopf/scalar.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "trihopf/errors.hpp"

namespace trihopf {
namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

// Exact division of integer polynomials (divisor monic).
std::vector<int64_t> divide_monic(std::vector<int64_t> num, const std::vector<int64_t>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<int64_t> q(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    int64_t c = num[k + dd];
    q[k] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  return q;
}

long double two_pi() { return 2.0L * std::acos(-1.0L); }

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw UsageError("conductor must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw UsageError("conductor must be positive");
  static std::map<int, std::vector<int64_t>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<int64_t> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[n] = p;
  return p;
}

CyclotomicField::CyclotomicField(int n) : n_(n), phi_(euler_phi(n)), modulus_(cyclotomic_polynomial(n)) {
  std::vector<int64_t> cur(phi_, 0);
  cur[0] = 1;
  auto times_x = [&](std::vector<int64_t> v) {
    int64_t top = v[phi_ - 1];
    for (int i = phi_ - 1; i > 0; --i) v[i] = v[i - 1];
    v[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi_; ++i) v[i] -= top * modulus_[i];
    }
    return v;
  };
  std::vector<int64_t> x_k = cur;
  int top = std::max(n_, 2 * phi_ - 1);
  for (int k = 0; k < top; ++k) {
    if (k < n_) powers_.push_back(x_k);
    if (k >= phi_ && k <= 2 * phi_ - 2) reduction_.push_back(x_k);
    x_k = times_x(x_k);
  }
}

const CyclotomicField& CyclotomicField::get(int conductor) {
  if (conductor == 1) {
    static const CyclotomicField* rationals = &get_locked(1);
    return *rationals;
  }
  return get_locked(conductor);
}

const CyclotomicField& CyclotomicField::get_locked(int conductor) {
  if (conductor < 1) throw UsageError("conductor must be positive");
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& slot = registry[conductor];
  if (!slot) slot.reset(new CyclotomicField(conductor));
  return *slot;
}

const std::vector<int64_t>& CyclotomicField::zeta_power(int64_t k) const {
  int64_t r = k % n_;
  if (r < 0) r += n_;
  return powers_[r];
}

const CyclotomicField& common_field(const Cyclotomic& a, const Cyclotomic& b) {
  if (&a.field() == &b.field()) return a.field();
  if (a.conductor() == 1) return b.field();
  if (b.conductor() == 1) return a.field();
  throw UsageError("conductor mismatch: " + std::to_string(a.conductor()) + " vs " +
                   std::to_string(b.conductor()));
}

Cyclotomic::Cyclotomic() : field_(&CyclotomicField::get(1)) {}

Cyclotomic::Cyclotomic(int64_t v) : Cyclotomic(Rational(v)) {}

Cyclotomic::Cyclotomic(const Rational& r) : field_(&CyclotomicField::get(1)) {
  if (!r.is_zero()) c_.push_back(r);
}

Cyclotomic::Cyclotomic(const CyclotomicField& f, const Rational& r) : field_(&f) {
  if (!r.is_zero()) {
    c_.assign(f.degree(), Rational());
    c_[0] = r;
  }
}

Cyclotomic::Cyclotomic(const CyclotomicField& f, std::vector<Rational> coeffs)
    : field_(&f), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) > f.degree()) {
    throw UsageError("coefficient vector longer than field degree");
  }
  c_.resize(f.degree());
  trim();
}

Cyclotomic Cyclotomic::root_of_unity(int64_t k, int n) {
  const auto& f = CyclotomicField::get(n);
  const auto& p = f.zeta_power(k);
  std::vector<Rational> c(p.begin(), p.end());
  return Cyclotomic(f, std::move(c));
}

Cyclotomic Cyclotomic::zero(int n) { return Cyclotomic(CyclotomicField::get(n), Rational()); }

Cyclotomic Cyclotomic::one(int n) { return Cyclotomic(CyclotomicField::get(n), Rational(1)); }

void Cyclotomic::trim() {
  for (const auto& x : c_) {
    if (!x.is_zero()) return;
  }
  c_.clear();
}

bool Cyclotomic::is_one() const {
  if (c_.empty() || !c_[0].is_one()) return false;
  for (size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

Rational Cyclotomic::coeff(int i) const {
  if (i < 0 || i >= field_->degree()) throw UsageError("coefficient index out of range");
  return c_.empty() ? Rational() : c_[i];
}

std::vector<Rational> Cyclotomic::coeffs() const {
  if (c_.empty()) return std::vector<Rational>(field_->degree());
  return c_;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw UsageError("scalar " + str() + " is not rational");
  return c_.empty() ? Rational() : c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.c_.empty()) {
    if (&o.field() != field_ && o.conductor() != 1 && conductor() == 1 && c_.empty()) field_ = &o.field();
    else common_field(*this, o);
    return *this;
  }
  const auto& f = common_field(*this, o);
  if (c_.empty()) {
    if (&o.field() == &f) {
      c_ = o.c_;
      field_ = &f;
    } else {
      *this = Cyclotomic(f, o.c_[0]);
    }
    return *this;
  }
  if (field_ != &f) {  // this is rational, lift
    Rational r = c_[0];
    c_.assign(f.degree(), Rational());
    c_[0] = r;
    field_ = &f;
  }
  if (&o.field() == &f) {
    for (int i = 0; i < f.degree(); ++i) {
      if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    }
  } else {
    c_[0] += o.c_[0];
  }
  trim();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this = *this * o.inv(); }

void Cyclotomic::add_product(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  *this += a * b;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const auto& f = common_field(a, b);
  if (a.c_.empty() || b.c_.empty()) return Cyclotomic(f, Rational());
  int phi = f.degree();
  if (&a.field() != &f || &b.field() != &f || phi == 1) {
    // at least one operand is rational: scale
    const Cyclotomic& s = (&a.field() != &f || phi == 1) ? a : b;
    const Cyclotomic& v = (&s == &a) ? b : a;
    const Rational& r = s.c_[0];
    Cyclotomic out = v;
    out.field_ = &f;
    if (&v.field() != &f) {  // both rational
      out.c_[0] *= r;
      return out;
    }
    for (auto& x : out.c_) {
      if (!x.is_zero()) x *= r;
    }
    return out;
  }
  std::vector<Rational> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + phi);
  for (int k = phi; k <= 2 * phi - 2; ++k) {
    if (prod[k].is_zero()) continue;
    const auto& red = f.reduction(k);
    for (int m = 0; m < phi; ++m) {
      if (red[m] != 0) out[m] += prod[k] * Rational(red[m]);
    }
  }
  Cyclotomic r;
  r.field_ = &f;
  r.c_ = std::move(out);
  r.trim();
  return r;
}

Cyclotomic Cyclotomic::inv() const {
  if (c_.empty()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(conductor()) + ")");
  if (is_rational()) return Cyclotomic(*field_, c_[0].inv());
  int phi = field_->degree();
  // Solve (multiplication by this) * y = 1 over Q.
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
  for (int j = 0; j < phi; ++j) {
    Cyclotomic col = *this * Cyclotomic::root_of_unity(j, conductor());
    auto cc = col.coeffs();
    for (int i = 0; i < phi; ++i) m[i][j] = cc[i];
  }
  m[0][phi] = Rational(1);
  for (int col = 0; col < phi; ++col) {
    int piv = -1;
    for (int r = col; r < phi; ++r) {
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw DivisionByZero("singular multiplication map");
    std::swap(m[piv], m[col]);
    Rational inv = m[col][col].inv();
    for (int k = col; k <= phi; ++k) m[col][k] *= inv;
    for (int r = 0; r < phi; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational factor = m[r][col];
      for (int k = col; k <= phi; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  std::vector<Rational> y(phi);
  for (int i = 0; i < phi; ++i) y[i] = m[i][phi];
  return Cyclotomic(*field_, std::move(y));
}

Cyclotomic Cyclotomic::galois(int64_t j) const {
  int n = conductor();
  if (std::gcd(((j % n) + n) % n, static_cast<int64_t>(n)) != 1) {
    throw UsageError("galois exponent must be coprime to the conductor");
  }
  Cyclotomic out(*field_, Rational());
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    const auto& p = field_->zeta_power(j * static_cast<int64_t>(k));
    std::vector<Rational> term(p.size());
    for (size_t m = 0; m < p.size(); ++m) {
      if (p[m] != 0) term[m] = c_[k] * Rational(p[m]);
    }
    out += Cyclotomic(*field_, std::move(term));
  }
  return out;
}

std::complex<long double> Cyclotomic::to_complex(int64_t j) const {
  std::complex<long double> z = 0;
  int n = conductor();
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    long double ang = two_pi() * static_cast<long double>((j * static_cast<int64_t>(k)) % n) / n;
    z += c_[k].to_long_double() * std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

std::string Cyclotomic::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    std::string coef = c_[k].str();
    if (!s.empty()) {
      if (coef[0] == '-') {
        s += " - ";
        coef = coef.substr(1);
      } else {
        s += " + ";
      }
    }
    if (k == 0) {
      s += coef;
    } else {
      if (coef != "1") s += (coef == "-1" ? std::string("-") : coef + "*");
      s += "z";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (&a.field() == &b.field()) return a.c_ == b.c_;
  if (a.is_zero() && b.is_zero()) return true;
  if (a.conductor() == 1 || b.conductor() == 1) {
    return a.is_rational() && b.is_rational() && a.rational_value() == b.rational_value();
  }
  int l = std::lcm(a.conductor(), b.conductor());
  return embed(a, l).c_ == embed(b, l).c_;
}

Cyclotomic embed(const Cyclotomic& a, int m) {
  int n = a.conductor();
  if (m % n != 0) {
    throw UsageError("cannot embed conductor " + std::to_string(n) + " into " + std::to_string(m));
  }
  const auto& f = CyclotomicField::get(m);
  Cyclotomic out(f, Rational());
  int step = m / n;
  for (size_t k = 0; k < a.c_.size(); ++k) {
    if (a.c_[k].is_zero()) continue;
    out += Cyclotomic(f, a.c_[k]) * Cyclotomic::root_of_unity(static_cast<int64_t>(k) * step, m);
  }
  return out;
}

}  // namespace trihopf
