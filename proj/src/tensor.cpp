#include "trihopf/tensor.hpp"

#include "trihopf/errors.hpp"

namespace trihopf {

Tensor2 Tensor2::pure(const Vec& a, const Vec& b) {
  Tensor2 t(static_cast<int>(a.size()), static_cast<int>(b.size()));
  for (int i = 0; i < t.d1_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < t.d2_; ++j)
      if (!b[j].is_zero()) t(i, j) = a[i] * b[j];
  }
  return t;
}

Tensor2 Tensor2::from_matrix(const Matrix& m) {
  Tensor2 t(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(i, j) = m(i, j);
  return t;
}

std::vector<std::pair<int, int>> Tensor2::support() const {
  std::vector<std::pair<int, int>> s;
  for (int i = 0; i < d1_; ++i)
    for (int j = 0; j < d2_; ++j)
      if (!(*this)(i, j).is_zero()) s.emplace_back(i, j);
  return s;
}

bool Tensor2::is_zero() const { return is_zero_vec(c_); }

int Tensor2::nnz() const {
  int n = 0;
  for (const auto& x : c_) n += x.is_zero() ? 0 : 1;
  return n;
}

Tensor2 Tensor2::flip() const {
  Tensor2 t(d2_, d1_);
  for (int i = 0; i < d1_; ++i)
    for (int j = 0; j < d2_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Tensor2::as_matrix() const {
  Matrix m(d1_, d2_);
  for (int i = 0; i < d1_; ++i)
    for (int j = 0; j < d2_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

int Tensor2::rank() const { return trihopf::rank(as_matrix()); }

std::vector<Vec> Tensor2::left_legs() const {
  Matrix m = as_matrix();
  std::vector<Vec> cols;
  for (int j = 0; j < d2_; ++j) cols.push_back(m.column(j));
  return span_basis(cols, d1_);
}

std::vector<Vec> Tensor2::right_legs() const {
  Matrix m = as_matrix();
  std::vector<Vec> rows;
  for (int i = 0; i < d1_; ++i) rows.push_back(m.row(i));
  return span_basis(rows, d2_);
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  if (d1_ != o.d1_ || d2_ != o.d2_) throw UsageError("tensor shape mismatch");
  for (size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  if (d1_ != o.d1_ || d2_ != o.d2_) throw UsageError("tensor shape mismatch");
  for (size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  return *this;
}

Tensor2 Tensor2::scaled(const Cyclotomic& s) const {
  Tensor2 t = *this;
  for (auto& x : t.c_)
    if (!x.is_zero()) x *= s;
  return t;
}

std::pair<int, int> Tensor2::first_difference(const Tensor2& o) const {
  for (int i = 0; i < d1_; ++i)
    for (int j = 0; j < d2_; ++j)
      if ((*this)(i, j) != o(i, j)) return {i, j};
  return {-1, -1};
}

std::vector<Tensor3::Index> Tensor3::support() const {
  std::vector<Index> s;
  for (int i = 0; i < d1_; ++i)
    for (int j = 0; j < d2_; ++j)
      for (int k = 0; k < d3_; ++k)
        if (!(*this)(i, j, k).is_zero()) s.push_back({i, j, k});
  return s;
}

bool Tensor3::is_zero() const { return is_zero_vec(c_); }

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (d1_ != o.d1_ || d2_ != o.d2_ || d3_ != o.d3_) throw UsageError("tensor shape mismatch");
  for (size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  return *this;
}

Tensor3::Index Tensor3::first_difference(const Tensor3& o) const {
  for (int i = 0; i < d1_; ++i)
    for (int j = 0; j < d2_; ++j)
      for (int k = 0; k < d3_; ++k)
        if ((*this)(i, j, k) != o(i, j, k)) return {i, j, k};
  return {-1, -1, -1};
}

Tensor3 embed12(const Tensor2& x, const Vec& third) {
  Tensor3 t(x.d1(), x.d2(), static_cast<int>(third.size()));
  for (auto [i, j] : x.support())
    for (int k = 0; k < t.d3(); ++k)
      if (!third[k].is_zero()) t(i, j, k) = x(i, j) * third[k];
  return t;
}

Tensor3 embed23(const Vec& first, const Tensor2& x) {
  Tensor3 t(static_cast<int>(first.size()), x.d1(), x.d2());
  for (int i = 0; i < t.d1(); ++i) {
    if (first[i].is_zero()) continue;
    for (auto [j, k] : x.support()) t(i, j, k) = first[i] * x(j, k);
  }
  return t;
}

Tensor3 embed13(const Tensor2& x, const Vec& middle) {
  Tensor3 t(x.d1(), static_cast<int>(middle.size()), x.d2());
  for (auto [i, k] : x.support())
    for (int j = 0; j < t.d2(); ++j)
      if (!middle[j].is_zero()) t(i, j, k) = x(i, k) * middle[j];
  return t;
}

}  // namespace trihopf
