#include <omp.h>

#include <atomic>
#include <climits>
#include <exception>

#include "trihopf/errors.hpp"
#include "trihopf/kernels.hpp"

namespace trihopf::kernels::omp {

Tensor2 mul2(const StructureAlgebra& a, const StructureAlgebra& b, const Parity* pa, const Parity* pb,
             const Tensor2& x, const Tensor2& y) {
  if (x.d1() != a.dim() || y.d1() != a.dim() || x.d2() != b.dim() || y.d2() != b.dim()) {
    throw UsageError("tensor product shape mismatch");
  }
  bool signs = pa != nullptr && pb != nullptr;
  auto sx = x.support();
  auto sy = y.support();
  Tensor2 out(a.dim(), b.dim());
#pragma omp parallel
  {
    Tensor2 local(a.dim(), b.dim());
#pragma omp for schedule(dynamic, 4) nowait
    for (long s = 0; s < static_cast<long>(sx.size()); ++s) {
      auto [i, j] = sx[s];
      for (auto [k, l] : sy) {
        Cyclotomic coef = x(i, j) * y(k, l);
        if (signs && ((*pa)[k] & (*pb)[j])) coef = -coef;
        for (const auto& [m, c1] : a.product(i, k)) {
          Cyclotomic t = c1.is_one() ? coef : coef * c1;
          for (const auto& [n, c2] : b.product(j, l)) local(m, n) += c2.is_one() ? t : t * c2;
        }
      }
    }
#pragma omp critical
    out += local;
  }
  return out;
}

Tensor3 mul3(const StructureAlgebra& a, const Parity* p, const Tensor3& x, const Tensor3& y) {
  int d = a.dim();
  auto sx = x.support();
  auto sy = y.support();
  Tensor3 out(d, d, d);
#pragma omp parallel
  {
    Tensor3 local(d, d, d);
#pragma omp for schedule(dynamic, 4) nowait
    for (long s = 0; s < static_cast<long>(sx.size()); ++s) {
      auto ix = sx[s];
      for (auto iy : sy) {
        Cyclotomic coef = x(ix.i, ix.j, ix.k) * y(iy.i, iy.j, iy.k);
        if (p) {
          int sg = (*p)[iy.i] * ((*p)[ix.j] + (*p)[ix.k]) + (*p)[iy.j] * (*p)[ix.k];
          if (sg & 1) coef = -coef;
        }
        for (const auto& [m, c1] : a.product(ix.i, iy.i)) {
          Cyclotomic t1 = coef * c1;
          for (const auto& [n, c2] : a.product(ix.j, iy.j)) {
            Cyclotomic t2 = t1 * c2;
            for (const auto& [q, c3] : a.product(ix.k, iy.k)) local(m, n, q) += t2 * c3;
          }
        }
      }
    }
#pragma omp critical
    out += local;
  }
  return out;
}

Tensor3 comult_left(const std::vector<Tensor2>& delta, const Tensor2& x) {
  int d = x.d1();
  Tensor3 out(d, d, x.d2());
  // each output slice (.,.,j) is written by exactly one j
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < x.d2(); ++j)
    for (int i = 0; i < d; ++i) {
      if (x(i, j).is_zero()) continue;
      for (auto [p, q] : delta[i].support()) out(p, q, j) += x(i, j) * delta[i](p, q);
    }
  return out;
}

Tensor3 comult_right(const std::vector<Tensor2>& delta, const Tensor2& x) {
  int d = x.d2();
  Tensor3 out(x.d1(), d, d);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < x.d1(); ++i)
    for (int j = 0; j < d; ++j) {
      if (x(i, j).is_zero()) continue;
      for (auto [p, q] : delta[j].support()) out(i, p, q) += x(i, j) * delta[j](p, q);
    }
  return out;
}

long first_failure(long n, const std::function<bool(long)>& fails) {
  std::atomic<long> best{LONG_MAX};
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    if (i >= best.load(std::memory_order_relaxed)) continue;
    bool bad = false;
    try {
      bad = fails(i);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
    if (bad) {
      long cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  if (error) std::rethrow_exception(error);
  long b = best.load();
  return b == LONG_MAX ? -1 : b;
}

}  // namespace trihopf::kernels::omp

namespace trihopf {
namespace {
std::atomic<int> g_exec{static_cast<int>(Exec::parallel)};
}

Exec default_exec() { return static_cast<Exec>(g_exec.load()); }
void set_default_exec(Exec ex) { g_exec.store(static_cast<int>(ex)); }

namespace kernels {

Tensor2 mul2(Exec ex, const StructureAlgebra& a, const StructureAlgebra& b, const Parity* pa, const Parity* pb,
             const Tensor2& x, const Tensor2& y) {
  return ex == Exec::serial ? serial::mul2(a, b, pa, pb, x, y) : omp::mul2(a, b, pa, pb, x, y);
}

Tensor3 mul3(Exec ex, const StructureAlgebra& a, const Parity* p, const Tensor3& x, const Tensor3& y) {
  return ex == Exec::serial ? serial::mul3(a, p, x, y) : omp::mul3(a, p, x, y);
}

Tensor3 comult_left(Exec ex, const std::vector<Tensor2>& delta, const Tensor2& x) {
  return ex == Exec::serial ? serial::comult_left(delta, x) : omp::comult_left(delta, x);
}

Tensor3 comult_right(Exec ex, const std::vector<Tensor2>& delta, const Tensor2& x) {
  return ex == Exec::serial ? serial::comult_right(delta, x) : omp::comult_right(delta, x);
}

long first_failure(Exec ex, long n, const std::function<bool(long)>& fails) {
  return ex == Exec::serial ? serial::first_failure(n, fails) : omp::first_failure(n, fails);
}

}  // namespace kernels
}  // namespace trihopf
