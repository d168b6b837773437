#pragma once

#include <optional>
#include <vector>

#include "trihopf/scalar.hpp"

namespace trihopf {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_columns(const std::vector<Vec>& cols, int rows);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Cyclotomic& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Cyclotomic& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
  Vec row(int i) const;
  Vec column(int j) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Cyclotomic& s) const;
  Vec apply(const Vec& v) const;
  bool is_zero() const;
  Cyclotomic trace() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int r_ = 0;
  int c_ = 0;
  Vec a_;
};

struct Echelon {
  Matrix reduced;           // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(Matrix m);
int rank(const Matrix& m);
// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);
// Some x with m x = b, if one exists.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);
// Fraction-free (Bareiss) elimination.
Cyclotomic determinant(const Matrix& m);

bool is_zero_vec(const Vec& v);
Vec zero_vec(int n);
Vec unit_vec(int n, int i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Cyclotomic& s);
// Reduced echelon basis of the span of vs.
std::vector<Vec> span_basis(const std::vector<Vec>& vs, int dim);

// Incrementally maintained subspace of K^n in reduced echelon form.
class Subspace {
 public:
  explicit Subspace(int ambient) : n_(ambient) {}
  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  // Adds v; returns true when the dimension grew.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  // v minus its component along the subspace in the echelon sense (zero on pivots).
  Vec residue(const Vec& v) const { return reduce(v); }

 private:
  Vec reduce(Vec v) const;
  int n_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

// Coordinates of vectors with respect to a fixed linearly independent family.
class CoordinateSolver {
 public:
  CoordinateSolver() = default;
  explicit CoordinateSolver(const std::vector<Vec>& basis);
  int size() const { return static_cast<int>(basis_.size()); }
  // nullopt when v is not in the span.
  std::optional<Vec> coords(const Vec& v) const;

 private:
  std::vector<Vec> basis_;
  std::vector<int> rows_;  // selected coordinates forming an invertible minor
  Matrix minor_inv_;
};

}  // namespace trihopf
