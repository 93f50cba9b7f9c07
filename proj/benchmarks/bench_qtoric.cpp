#include "qtoric/cohomology.hpp"
#include "qtoric/moment_angle.hpp"
#include "qtoric/polytope.hpp"
#include "qtoric/quasitoric.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qtoric;

namespace {

HPolytope cube(int n) {
  HalfSpace lo{{Rat(1)}, Rat(0)};
  HalfSpace hi{{Rat(-1)}, Rat(1)};
  HPolytope seg = vertices_from_halfspaces({lo, hi});
  HPolytope out = seg;
  for (int i = 1; i < n; ++i) out = product(out, seg);
  return out;
}

void bm_vertex_enumeration_cube4(benchmark::State& state) {
  HPolytope c = cube(4);
  std::vector<HalfSpace> hs = c.halfspaces;
  for (auto _ : state) {
    HPolytope p = vertices_from_halfspaces(hs);
    benchmark::DoNotOptimize(p.num_vertices());
  }
}
BENCHMARK(bm_vertex_enumeration_cube4);

void bm_hexagon_characteristic_numbers(benchmark::State& state) {
  OmniQT hex = box_sum(cp(2), cp(2));
  for (auto _ : state) {
    RingPresentation r = ring_presentation(hex);
    Rat c2 = chern_number(r, {2});
    benchmark::DoNotOptimize(c2);
  }
}
BENCHMARK(bm_hexagon_characteristic_numbers);

void bm_box_sum_chain(benchmark::State& state) {
  for (auto _ : state) {
    OmniQT m = add_cobordism(add_cobordism(cp(2), cp(2)), b_rs(1, 2));
    benchmark::DoNotOptimize(m.num_vertices());
  }
}
BENCHMARK(bm_box_sum_chain);

void bm_graded_basis_top_degree(benchmark::State& state) {
  RingPresentation r = ring_presentation(b_rs(2, 3));
  for (auto _ : state) {
    GradedPiece piece(r, r.dim);
    benchmark::DoNotOptimize(piece.quotient_dim());
  }
}
BENCHMARK(bm_graded_basis_top_degree);

void bm_quadric_sampling(benchmark::State& state) {
  HPolytope p = cube(3);
  QuadraticSystem sys = quadratic_system(p);
  std::mt19937 rng(0);
  std::uniform_real_distribution<double> angle(0.0, 6.2831853);
  for (auto _ : state) {
    QVec x = sample_interior_point(p, rng);
    std::vector<double> angles(static_cast<std::size_t>(p.num_facets()));
    for (double& a : angles) a = angle(rng);
    auto z = sample_point(p, x, angles);
    benchmark::DoNotOptimize(max_residual(sys, z));
  }
}
BENCHMARK(bm_quadric_sampling);

}  // namespace

BENCHMARK_MAIN();
