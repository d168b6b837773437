#include "trihopf/errors.hpp"
#include "trihopf/kernels.hpp"

namespace trihopf::kernels::serial {

Tensor2 mul2(const StructureAlgebra& a, const StructureAlgebra& b, const Parity* pa, const Parity* pb,
             const Tensor2& x, const Tensor2& y) {
  if (x.d1() != a.dim() || y.d1() != a.dim() || x.d2() != b.dim() || y.d2() != b.dim()) {
    throw UsageError("tensor product shape mismatch");
  }
  bool signs = pa != nullptr && pb != nullptr;
  Tensor2 out(a.dim(), b.dim());
  auto sy = y.support();
  for (auto [i, j] : x.support()) {
    for (auto [k, l] : sy) {
      Cyclotomic coef = x(i, j) * y(k, l);
      if (signs && ((*pa)[k] & (*pb)[j])) coef = -coef;
      for (const auto& [m, c1] : a.product(i, k)) {
        Cyclotomic t = c1.is_one() ? coef : coef * c1;
        for (const auto& [n, c2] : b.product(j, l)) out(m, n) += c2.is_one() ? t : t * c2;
      }
    }
  }
  return out;
}

Tensor3 mul3(const StructureAlgebra& a, const Parity* p, const Tensor3& x, const Tensor3& y) {
  int d = a.dim();
  Tensor3 out(d, d, d);
  auto sy = y.support();
  for (auto ix : x.support()) {
    for (auto iy : sy) {
      Cyclotomic coef = x(ix.i, ix.j, ix.k) * y(iy.i, iy.j, iy.k);
      if (p) {
        int s = (*p)[iy.i] * ((*p)[ix.j] + (*p)[ix.k]) + (*p)[iy.j] * (*p)[ix.k];
        if (s & 1) coef = -coef;
      }
      for (const auto& [m, c1] : a.product(ix.i, iy.i)) {
        Cyclotomic t1 = coef * c1;
        for (const auto& [n, c2] : a.product(ix.j, iy.j)) {
          Cyclotomic t2 = t1 * c2;
          for (const auto& [q, c3] : a.product(ix.k, iy.k)) out(m, n, q) += t2 * c3;
        }
      }
    }
  }
  return out;
}

Tensor3 comult_left(const std::vector<Tensor2>& delta, const Tensor2& x) {
  int d = x.d1();
  Tensor3 out(d, d, x.d2());
  for (auto [i, j] : x.support())
    for (auto [p, q] : delta[i].support()) out(p, q, j) += x(i, j) * delta[i](p, q);
  return out;
}

Tensor3 comult_right(const std::vector<Tensor2>& delta, const Tensor2& x) {
  int d = x.d2();
  Tensor3 out(x.d1(), d, d);
  for (auto [i, j] : x.support())
    for (auto [p, q] : delta[j].support()) out(i, p, q) += x(i, j) * delta[j](p, q);
  return out;
}

long first_failure(long n, const std::function<bool(long)>& fails) {
  for (long i = 0; i < n; ++i)
    if (fails(i)) return i;
  return -1;
}

}  // namespace trihopf::kernels::serial
