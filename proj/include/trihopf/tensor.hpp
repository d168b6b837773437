#pragma once

#include <utility>
#include <vector>

#include "trihopf/linalg.hpp"

namespace trihopf {

// sum_ij x_ij e_i (x) f_j with dense coefficient storage.
class Tensor2 {
 public:
  Tensor2() = default;
  Tensor2(int d1, int d2) : d1_(d1), d2_(d2), c_(static_cast<size_t>(d1) * d2) {}
  static Tensor2 pure(const Vec& a, const Vec& b);
  static Tensor2 from_matrix(const Matrix& m);

  int d1() const { return d1_; }
  int d2() const { return d2_; }
  Cyclotomic& operator()(int i, int j) { return c_[static_cast<size_t>(i) * d2_ + j]; }
  const Cyclotomic& operator()(int i, int j) const { return c_[static_cast<size_t>(i) * d2_ + j]; }
  std::vector<std::pair<int, int>> support() const;
  bool is_zero() const;
  int nnz() const;

  Tensor2 flip() const;
  Matrix as_matrix() const;
  // Tensor rank, i.e. the rank of the coefficient matrix.
  int rank() const;
  // Spans of the first and second legs.
  std::vector<Vec> left_legs() const;
  std::vector<Vec> right_legs() const;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  Tensor2 scaled(const Cyclotomic& s) const;
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend bool operator==(const Tensor2& a, const Tensor2& b) {
    return a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Tensor2& a, const Tensor2& b) { return !(a == b); }

  // First index (i,j) where the two tensors differ, or (-1,-1).
  std::pair<int, int> first_difference(const Tensor2& o) const;

 private:
  int d1_ = 0;
  int d2_ = 0;
  Vec c_;
};

class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int d1, int d2, int d3) : d1_(d1), d2_(d2), d3_(d3), c_(static_cast<size_t>(d1) * d2 * d3) {}

  int d1() const { return d1_; }
  int d2() const { return d2_; }
  int d3() const { return d3_; }
  Cyclotomic& operator()(int i, int j, int k) { return c_[(static_cast<size_t>(i) * d2_ + j) * d3_ + k]; }
  const Cyclotomic& operator()(int i, int j, int k) const { return c_[(static_cast<size_t>(i) * d2_ + j) * d3_ + k]; }
  struct Index {
    int i, j, k;
  };
  std::vector<Index> support() const;
  bool is_zero() const;
  Tensor3& operator+=(const Tensor3& o);
  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.d3_ == b.d3_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }
  Index first_difference(const Tensor3& o) const;

 private:
  int d1_ = 0;
  int d2_ = 0;
  int d3_ = 0;
  Vec c_;
};

// x (x) 1 and 1 (x) x style embeddings into the triple tensor power.
Tensor3 embed12(const Tensor2& x, const Vec& third);
Tensor3 embed23(const Vec& first, const Tensor2& x);
Tensor3 embed13(const Tensor2& x, const Vec& middle);

}  // namespace trihopf
