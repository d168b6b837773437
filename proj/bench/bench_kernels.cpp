// Serial reference kernels against their OpenMP versions on gallery-sized inputs.
// Both paths return identical results; each run checks that before timing.

#include <benchmark/benchmark.h>

#include <iostream>

#include "trihopf/gallery.hpp"
#include "trihopf/onecocycle.hpp"

using namespace trihopf;

namespace {

struct Inputs {
  CocycleTwist ct36;           // host k[G~] of order 36 and Jbar
  HopfPresentation a36, p3;    // twisted Hopf algebras
  Tensor2 r36;
  Tensor3 j3;                  // (Delta x id)(Jbar) in the host
};

const Inputs& inputs() {
  static Inputs in = [] {
    Inputs x;
    x.ct36 = jbar(s3_on_z6_datum());
    GalleryObject g = build_gallery("dim36");
    x.a36 = g.hopf;
    x.r36 = *g.r;
    x.p3 = build_gallery("cotriangular_p3").hopf;
    x.j3 = kernels::serial::comult_left(x.ct36.host.comult, x.ct36.twist.j);
    return x;
  }();
  return in;
}

const char* exec_name(Exec ex) { return ex == Exec::serial ? "serial" : "omp"; }

void bm_mul2(benchmark::State& st, Exec ex) {
  const auto& in = inputs();
  const auto& a = in.ct36.host.algebra;
  for (auto _ : st) benchmark::DoNotOptimize(kernels::mul2(ex, a, a, nullptr, nullptr, in.ct36.twist.j, in.ct36.twist.inverse));
}

void bm_mul3(benchmark::State& st, Exec ex) {
  const auto& in = inputs();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::mul3(ex, in.ct36.host.algebra, nullptr, in.j3, in.j3));
}

void bm_comult_left(benchmark::State& st, Exec ex) {
  const auto& in = inputs();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::comult_left(ex, in.a36.comult, in.r36));
}

void bm_comult_right(benchmark::State& st, Exec ex) {
  const auto& in = inputs();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::comult_right(ex, in.a36.comult, in.r36));
}

void bm_verify_hopf_36(benchmark::State& st, Exec ex) {
  const auto& in = inputs();
  for (auto _ : st) benchmark::DoNotOptimize(verify_hopf(in.a36, ex).passed());
}

void bm_verify_hopf_p3(benchmark::State& st, Exec ex) {
  const auto& in = inputs();
  for (auto _ : st) benchmark::DoNotOptimize(verify_hopf(in.p3, ex).passed());
}

void bm_verify_qt_36(benchmark::State& st, Exec ex) {
  const auto& in = inputs();
  for (auto _ : st) benchmark::DoNotOptimize(verify_quasitriangular(in.a36, in.r36, ex).passed());
}

bool paths_agree() {
  const auto& in = inputs();
  const auto& a = in.ct36.host.algebra;
  const auto& j = in.ct36.twist;
  return kernels::serial::mul2(a, a, nullptr, nullptr, j.j, j.inverse) ==
             kernels::omp::mul2(a, a, nullptr, nullptr, j.j, j.inverse) &&
         kernels::serial::mul3(a, nullptr, in.j3, in.j3) == kernels::omp::mul3(a, nullptr, in.j3, in.j3) &&
         kernels::serial::comult_left(in.a36.comult, in.r36) == kernels::omp::comult_left(in.a36.comult, in.r36) &&
         kernels::serial::comult_right(in.a36.comult, in.r36) == kernels::omp::comult_right(in.a36.comult, in.r36);
}

}  // namespace

int main(int argc, char** argv) {
  if (!paths_agree()) {
    std::cerr << "serial and OpenMP kernels disagree\n";
    return 1;
  }
  const std::pair<const char*, void (*)(benchmark::State&, Exec)> cases[] = {
      {"mul2/jbar*jbar_inv/36", bm_mul2},        {"mul3/delta_jbar/36", bm_mul3},
      {"comult_left/r/36", bm_comult_left},       {"comult_right/r/36", bm_comult_right},
      {"verify_hopf/dim36", bm_verify_hopf_36},   {"verify_hopf/p3", bm_verify_hopf_p3},
      {"verify_quasitriangular/dim36", bm_verify_qt_36},
  };
  for (const auto& [name, fn] : cases)
    for (Exec ex : {Exec::serial, Exec::parallel})
      benchmark::RegisterBenchmark((std::string(name) + "/" + exec_name(ex)).c_str(), fn, ex)
          ->Unit(benchmark::kMillisecond);
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
