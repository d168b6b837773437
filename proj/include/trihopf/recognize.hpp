#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "trihopf/linalg.hpp"

namespace trihopf {

// Eigenvalues of m that lie in Q(zeta_N), N = conductor. Floating-point
// eigenvalues only propose candidates; each returned value is confirmed by an
// exact rank drop of m - lambda. Eigenvalues outside the field are omitted.
std::vector<Cyclotomic> field_eigenvalues(const Matrix& m, int conductor);

// Elements x of Q(zeta_N) with x^k = a (exactly verified), found the same way.
std::vector<Cyclotomic> field_roots(const Cyclotomic& a, int k, int conductor);

// Rational approximation p/q with q <= max_den within tol, if any.
std::optional<Rational> rationalize(long double x, long double tol, int64_t max_den = 1000000);

}  // namespace trihopf
