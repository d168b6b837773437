#pragma once

#include <functional>
#include <vector>

#include "trihopf/algebra.hpp"
#include "trihopf/tensor.hpp"

namespace trihopf {

using Parity = std::vector<int>;  // 0 even, 1 odd, per basis element

enum class Exec { serial, parallel };

namespace kernels {

// Product in A (x) B; with parities the Koszul sign (-1)^{p(a')p(b)} applies to
// (a (x) b)(a' (x) b').
Tensor2 mul2(Exec ex, const StructureAlgebra& a, const StructureAlgebra& b, const Parity* pa, const Parity* pb,
             const Tensor2& x, const Tensor2& y);
// Product in A (x) A (x) A with Koszul signs when p is given.
Tensor3 mul3(Exec ex, const StructureAlgebra& a, const Parity* p, const Tensor3& x, const Tensor3& y);
// (Delta (x) id)(x) and (id (x) Delta)(x) for Delta given on basis elements.
Tensor3 comult_left(Exec ex, const std::vector<Tensor2>& delta, const Tensor2& x);
Tensor3 comult_right(Exec ex, const std::vector<Tensor2>& delta, const Tensor2& x);
// Smallest i in [0,n) with fails(i) true, or -1. The parallel version
// evaluates all indices concurrently and still reports the smallest.
long first_failure(Exec ex, long n, const std::function<bool(long)>& fails);

namespace serial {
Tensor2 mul2(const StructureAlgebra& a, const StructureAlgebra& b, const Parity* pa, const Parity* pb,
             const Tensor2& x, const Tensor2& y);
Tensor3 mul3(const StructureAlgebra& a, const Parity* p, const Tensor3& x, const Tensor3& y);
Tensor3 comult_left(const std::vector<Tensor2>& delta, const Tensor2& x);
Tensor3 comult_right(const std::vector<Tensor2>& delta, const Tensor2& x);
long first_failure(long n, const std::function<bool(long)>& fails);
}  // namespace serial

namespace omp {
Tensor2 mul2(const StructureAlgebra& a, const StructureAlgebra& b, const Parity* pa, const Parity* pb,
             const Tensor2& x, const Tensor2& y);
Tensor3 mul3(const StructureAlgebra& a, const Parity* p, const Tensor3& x, const Tensor3& y);
Tensor3 comult_left(const std::vector<Tensor2>& delta, const Tensor2& x);
Tensor3 comult_right(const std::vector<Tensor2>& delta, const Tensor2& x);
long first_failure(long n, const std::function<bool(long)>& fails);
}  // namespace omp

}  // namespace kernels

// Execution policy used by library entry points that do not take one.
Exec default_exec();
void set_default_exec(Exec ex);

}  // namespace trihopf
