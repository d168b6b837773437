#include "trihopf/linalg.hpp"

#include "trihopf/errors.hpp"

namespace trihopf {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows) throw UsageError("column length mismatch");
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw UsageError("row length mismatch");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(int i) const { return Vec(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_); }

Vec Matrix::column(int j) const {
  Vec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw UsageError("matrix product shape mismatch");
  Matrix p(r_, o.c_);
  for (int i = 0; i < r_; ++i) {
    for (int k = 0; k < c_; ++k) {
      const auto& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        const auto& y = o(k, j);
        if (!y.is_zero()) p(i, j) += x * y;
      }
    }
  }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw UsageError("matrix sum shape mismatch");
  Matrix s = *this;
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw UsageError("matrix difference shape mismatch");
  Matrix s = *this;
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
  return s;
}

Matrix Matrix::scaled(const Cyclotomic& s) const {
  Matrix m = *this;
  for (auto& x : m.a_) {
    if (!x.is_zero()) x *= s;
  }
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != c_) throw UsageError("matrix-vector shape mismatch");
  Vec out(r_);
  for (int j = 0; j < c_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < r_; ++i) {
      const auto& x = (*this)(i, j);
      if (!x.is_zero()) out[i] += x * v[j];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Cyclotomic Matrix::trace() const {
  Cyclotomic t;
  for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!m(i, col).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    Cyclotomic inv = m(r, col).inv();
    for (int j = col; j < m.cols(); ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      Cyclotomic f = m(i, col);
      for (int j = col; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    e.pivots.push_back(col);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

int rank(const Matrix& m) { return static_cast<int>(row_reduce(m).pivots.size()); }

std::vector<Vec> nullspace(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Cyclotomic(1);
    for (size_t r = 0; r < e.pivots.size(); ++r) {
      const auto& x = e.reduced(static_cast<int>(r), free);
      if (!x.is_zero()) v[e.pivots[r]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw UsageError("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(static_cast<int>(r), m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw UsageError("inverse of non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Cyclotomic(1);
  }
  Echelon e = row_reduce(std::move(aug));
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Cyclotomic determinant(const Matrix& m0) {
  if (m0.rows() != m0.cols()) throw UsageError("determinant of non-square matrix");
  int n = m0.rows();
  if (n == 0) return Cyclotomic(1);
  Matrix m = m0;
  Cyclotomic prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!m(i, k).is_zero()) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return Cyclotomic::zero(m0(0, 0).conductor());
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Cyclotomic();
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec zero_vec(int n) { return Vec(n); }

Vec unit_vec(int n, int i) {
  Vec v(n);
  v[i] = Cyclotomic(1);
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw UsageError("vector length mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) {
    if (!b[i].is_zero()) r[i] += b[i];
  }
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw UsageError("vector length mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) {
    if (!b[i].is_zero()) r[i] -= b[i];
  }
  return r;
}

Vec scale(const Vec& a, const Cyclotomic& s) {
  Vec r = a;
  for (auto& x : r) {
    if (!x.is_zero()) x *= s;
  }
  return r;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vs, int dim) {
  Subspace s(dim);
  for (const auto& v : vs) s.add(v);
  return s.basis();
}

Vec Subspace::reduce(Vec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const auto& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    Cyclotomic f = c;
    for (int j = 0; j < n_; ++j) {
      if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
  }
  return v;
}

bool Subspace::add(const Vec& v0) {
  if (static_cast<int>(v0.size()) != n_) throw UsageError("subspace: vector length mismatch");
  Vec v = reduce(v0);
  int piv = -1;
  for (int j = 0; j < n_; ++j) {
    if (!v[j].is_zero()) {
      piv = j;
      break;
    }
  }
  if (piv < 0) return false;
  Cyclotomic inv = v[piv].inv();
  for (auto& x : v) {
    if (!x.is_zero()) x *= inv;
  }
  // keep rows fully reduced
  for (auto& row : rows_) {
    if (row[piv].is_zero()) continue;
    Cyclotomic f = row[piv];
    for (int j = 0; j < n_; ++j) {
      if (!v[j].is_zero()) row[j] -= f * v[j];
    }
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
  return true;
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != n_) throw UsageError("subspace: vector length mismatch");
  return is_zero_vec(reduce(v));
}

CoordinateSolver::CoordinateSolver(const std::vector<Vec>& basis) : basis_(basis) {
  int k = static_cast<int>(basis.size());
  if (k == 0) return;
  int n = static_cast<int>(basis[0].size());
  Matrix bt = Matrix::from_rows(basis, n);  // k x n
  Echelon e = row_reduce(bt);
  if (static_cast<int>(e.pivots.size()) != k) throw UsageError("coordinate basis is linearly dependent");
  rows_ = e.pivots;
  Matrix minor(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) minor(i, j) = basis[j][rows_[i]];
  auto inv = inverse(minor);
  if (!inv) throw UsageError("coordinate minor is singular");
  minor_inv_ = *inv;
}

std::optional<Vec> CoordinateSolver::coords(const Vec& v) const {
  int k = size();
  Vec sel(k);
  for (int i = 0; i < k; ++i) sel[i] = v[rows_[i]];
  Vec c = k > 0 ? minor_inv_.apply(sel) : Vec();
  Vec back(v.size());
  for (int j = 0; j < k; ++j) {
    if (c[j].is_zero()) continue;
    for (size_t i = 0; i < v.size(); ++i) {
      if (!basis_[j][i].is_zero()) back[i] += c[j] * basis_[j][i];
    }
  }
  if (back != v) return std::nullopt;
  return c;
}

}  // namespace trihopf
