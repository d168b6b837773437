#include "trihopf/recognize.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "trihopf/errors.hpp"

namespace trihopf {
namespace {

using Complex = std::complex<long double>;
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using RMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

constexpr long double kClusterTol = 1e-6L;
constexpr long double kRationalTol = 1e-7L;
constexpr size_t kMaxCombinations = 4096;

std::vector<Complex> numeric_eigenvalues(const Matrix& m, int64_t j) {
  int n = m.rows();
  CMatrix cm(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) cm(r, c) = m(r, c).to_complex(j);
  Eigen::ComplexEigenSolver<CMatrix> solver(cm, false);
  std::vector<Complex> out;
  for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

std::vector<Complex> cluster(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
    if (std::abs(a.real() - b.real()) > kClusterTol) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::vector<Complex> reps;
  for (const auto& z : v) {
    bool found = false;
    for (auto& r : reps) {
      if (std::abs(r - z) < kClusterTol * std::max<long double>(1, std::abs(z))) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(z);
  }
  return reps;
}

// Embedding representatives j in (Z/N)^* / {+-1}, starting with 1.
std::vector<int64_t> embedding_classes(int n) {
  std::vector<int64_t> out;
  std::vector<char> used(n, 0);
  for (int j = 1; j < std::max(n, 2); ++j) {
    if (std::gcd(j, n) != 1 || used[j % n]) continue;
    out.push_back(j);
    used[j % n] = 1;
    used[(n - j) % n] = 1;
  }
  if (out.empty()) out.push_back(1);
  return out;
}

// Coefficients of a field element from its images under the listed embeddings.
std::optional<Cyclotomic> solve_coefficients(const std::vector<int64_t>& emb, const std::vector<Complex>& values,
                                             int conductor) {
  const auto& f = CyclotomicField::get(conductor);
  int phi = f.degree();
  long double two_pi = 2.0L * std::acos(-1.0L);
  std::vector<Rational> coeffs;
  if (phi == 1) {
    if (std::abs(values[0].imag()) > kRationalTol * std::max<long double>(1, std::abs(values[0]))) return std::nullopt;
    auto r = rationalize(values[0].real(), kRationalTol);
    if (!r) return std::nullopt;
    coeffs.push_back(*r);
  } else {
    RMatrix a(phi, phi);
    RVector b(phi);
    for (size_t e = 0; e < emb.size(); ++e) {
      for (int k = 0; k < phi; ++k) {
        long double ang = two_pi * static_cast<long double>((emb[e] * k) % conductor) / conductor;
        a(2 * e, k) = std::cos(ang);
        a(2 * e + 1, k) = std::sin(ang);
      }
      b(2 * e) = values[e].real();
      b(2 * e + 1) = values[e].imag();
    }
    RVector x = a.fullPivLu().solve(b);
    for (int k = 0; k < phi; ++k) {
      auto r = rationalize(x(k), kRationalTol * std::max<long double>(1, std::abs(x(k))));
      if (!r) return std::nullopt;
      coeffs.push_back(*r);
    }
  }
  return Cyclotomic(f, coeffs);
}

bool is_exact_eigenvalue(const Matrix& m, const Cyclotomic& lambda) {
  Matrix s = m;
  for (int i = 0; i < m.rows(); ++i) s(i, i) -= lambda;
  return rank(s) < m.rows();
}

template <class Check>
std::vector<Cyclotomic> recognize(const std::vector<std::vector<Complex>>& per_embedding,
                                  const std::vector<int64_t>& emb, int conductor, Check exact) {
  std::vector<Cyclotomic> found;
  const auto& principal = per_embedding[0];
  for (const auto& z : principal) {
    size_t combos = 1;
    for (size_t e = 1; e < emb.size(); ++e) combos *= per_embedding[e].size();
    if (combos > kMaxCombinations) continue;
    std::vector<size_t> idx(emb.size(), 0);
    for (size_t c = 0; c < combos; ++c) {
      size_t rem = c;
      std::vector<Complex> vals{z};
      for (size_t e = 1; e < emb.size(); ++e) {
        vals.push_back(per_embedding[e][rem % per_embedding[e].size()]);
        rem /= per_embedding[e].size();
      }
      auto cand = solve_coefficients(emb, vals, conductor);
      if (!cand) continue;
      if (std::find(found.begin(), found.end(), *cand) != found.end()) break;
      if (std::abs(cand->to_complex(1) - z) > 1e-5L * std::max<long double>(1, std::abs(z))) continue;
      if (exact(*cand)) {
        found.push_back(*cand);
        break;
      }
    }
  }
  return found;
}

}  // namespace

std::optional<Rational> rationalize(long double x, long double tol, int64_t max_den) {
  long double v = x;
  // continued fraction convergents
  int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long double rem = v;
  for (int iter = 0; iter < 64; ++iter) {
    long double a = std::floor(rem);
    if (std::abs(a) > 9e15L) break;
    auto ai = static_cast<int64_t>(a);
    int64_t p2 = ai * p1 + p0;
    int64_t q2 = ai * q1 + q0;
    if (q2 > max_den || q2 <= 0) break;
    if (std::abs(static_cast<long double>(p2) / q2 - v) <= tol) return Rational(p2, q2);
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    long double frac = rem - a;
    if (frac < 1e-30L) break;
    rem = 1.0L / frac;
  }
  return std::nullopt;
}

std::vector<Cyclotomic> field_eigenvalues(const Matrix& m, int conductor) {
  if (m.rows() != m.cols()) throw UsageError("eigenvalues of non-square matrix");
  if (m.rows() == 0) return {};
  auto emb = embedding_classes(conductor);
  std::vector<std::vector<Complex>> per;
  for (auto j : emb) per.push_back(cluster(numeric_eigenvalues(m, j)));
  return recognize(per, emb, conductor, [&](const Cyclotomic& l) { return is_exact_eigenvalue(m, l); });
}

std::vector<Cyclotomic> field_roots(const Cyclotomic& a, int k, int conductor) {
  if (k < 1) throw UsageError("root order must be positive");
  auto emb = embedding_classes(conductor);
  std::vector<std::vector<Complex>> per;
  long double two_pi = 2.0L * std::acos(-1.0L);
  for (auto j : emb) {
    Complex z = a.to_complex(j);
    Complex r = std::pow(z, 1.0L / k);
    std::vector<Complex> roots;
    for (int t = 0; t < k; ++t) roots.push_back(r * std::polar(1.0L, two_pi * t / k));
    per.push_back(roots);
  }
  return recognize(per, emb, conductor, [&](const Cyclotomic& x) {
    Cyclotomic p(1);
    for (int t = 0; t < k; ++t) p *= x;
    return p == a;
  });
}

}  // namespace trihopf
