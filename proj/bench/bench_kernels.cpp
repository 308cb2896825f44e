// Times the OpenMP kernels against their serial reference paths and checks
// that both produce identical results.  Build and run:
//   cmake --build build --target bench_kernels && ./build/bench/bench_kernels

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ssp/finite_geometry.hpp"
#include "ssp/padic.hpp"

using namespace ssp;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-34s serial %8.3fs   openmp %8.3fs   speedup %5.2fx   %s\n", name,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              equal ? "results equal" : "RESULTS DIFFER");
}

void bench_oracle() {
  std::vector<long> grid;
  for (long v : {1L, 2L, 3L, 5L, 7L, 14L}) {
    grid.push_back(v);
    grid.push_back(-v);
  }
  std::vector<int> serial_out, parallel_out;
  auto run = [&](ExecPolicy policy, std::vector<int>& out) {
    out.clear();
    for (int rep = 0; rep < 4; ++rep)
      for (long a : grid)
        for (long b : grid)
          out.push_back(solvable_oracle(Rat(a), Rat(b), Int(7), 3, policy));
  };
  auto t0 = Clock::now();
  run(ExecPolicy::serial, serial_out);
  double ts = seconds_since(t0);
  t0 = Clock::now();
  run(ExecPolicy::parallel, parallel_out);
  double tp = seconds_since(t0);
  report("solvable_oracle grid (p=7, d=3)", ts, tp, serial_out == parallel_out);
}

void bench_isotropic() {
  FiniteQuadSpace space(6, SpaceKind::split, 5);
  FiniteField F(5, 1);
  auto t0 = Clock::now();
  std::vector<Subspace> serial = enumerate_isotropic(space, 3, F, ExecPolicy::serial);
  double ts = seconds_since(t0);
  t0 = Clock::now();
  std::vector<Subspace> parallel =
      enumerate_isotropic(space, 3, F, ExecPolicy::parallel);
  double tp = seconds_since(t0);
  report("lagrangians of split dim 6, q=5", ts, tp, serial == parallel);
}

void bench_s_lambda() {
  auto t0 = Clock::now();
  std::vector<Subspace> serial =
      s_lambda_points(4, SpaceKind::nonsplit, 3, 2, ExecPolicy::serial);
  double ts = seconds_since(t0);
  t0 = Clock::now();
  std::vector<Subspace> parallel =
      s_lambda_points(4, SpaceKind::nonsplit, 3, 2, ExecPolicy::parallel);
  double tp = seconds_since(t0);
  report("s_lambda points (t=4, p=3, k=2)", ts, tp, serial == parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp; both columns run the serial path\n");
#endif
  bench_oracle();
  bench_isotropic();
  bench_s_lambda();
  return 0;
}
