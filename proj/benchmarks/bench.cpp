// bench.cpp — micro-benchmarks for the hot paths: affine length by both
// routes, orbit enumeration, scheme verification, the Killing transfer
// check, and Smith normal form.

#include <benchmark/benchmark.h>

#include "weylkit/json_io.hpp"

using namespace weylkit;

namespace {

Coweight scaled_rho_coweight(const RootSystem& rs, long k) {
  Vec coeffs(static_cast<std::size_t>(rs.rank), Rat(k));
  return Coweight{coeffs};
}

void BM_affine_length_closed(benchmark::State& state) {
  const RootSystem rs = build_root_system(Type::C, 3);
  const AffineWeylElement t =
      affine_translation(rs, scaled_rho_coweight(rs, state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(inversion_count(rs, t));
  }
}
BENCHMARK(BM_affine_length_closed)->Arg(1)->Arg(4);

void BM_affine_length_word(benchmark::State& state) {
  const RootSystem rs = build_root_system(Type::C, 3);
  const AffineWeylElement t =
      affine_translation(rs, scaled_rho_coweight(rs, state.range(0)));
  const long budget = inversion_count(rs, t) + 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(affine_length_via_word(rs, t, budget));
  }
}
BENCHMARK(BM_affine_length_word)->Arg(1)->Arg(4);

void BM_weyl_orbit_regular(benchmark::State& state) {
  const RootSystem rs =
      build_root_system(Type::B, static_cast<int>(state.range(0)));
  const Vec rho2 = vec_scale(Rat(2), rs.rho);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weyl_orbit(rs, rho2));
  }
}
BENCHMARK(BM_weyl_orbit_regular)->Arg(3)->Arg(4);

void BM_verify_preset(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  const RootSystem rs = build_root_system(Type::C, rank);
  const PresetResult pr = preset(PresetFamily::Cl, rank, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify(rs, pr.scheme, DegreeMode::Exact));
  }
}
BENCHMARK(BM_verify_preset)->Arg(3)->Arg(6);

void BM_lr_transfer_check(benchmark::State& state) {
  const RootSystem rs =
      build_root_system(Type::C, static_cast<int>(state.range(0)));
  Vec z(static_cast<std::size_t>(rs.rank));
  for (std::size_t i = 0; i < z.size(); ++i) {
    z[i] = Rat(static_cast<long>(2 * i + 1), 3);
    z[i].canonicalize();
  }
  const TorusPoint point{z};
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_lr_transpose(rs, point));
  }
}
BENCHMARK(BM_lr_transfer_check)->Arg(2)->Arg(3);

void BM_smith_normal_form(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ZMat a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  // Deterministic mildly non-trivial integer matrix.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          (i * 7 + j * 3) % 11 - 5;
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(a));
  }
}
BENCHMARK(BM_smith_normal_form)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
