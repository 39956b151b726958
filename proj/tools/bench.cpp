// Timing harness: parallel bondage scan against the serial reference, and
// the profile sweep against the branch-and-bound oracle on shared instances.
// Results must agree; mismatches abort.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "meshdom/bondage.hpp"
#include "meshdom/oracle.hpp"
#include "meshdom/profile_dp.hpp"

using namespace meshdom;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
  return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

void bench_bondage(int n, int m, int jobs) {
  GridSpec spec(n, m);

  BondageOptions serial;
  serial.jobs = 1;
  auto t0 = clk::now();
  BondageResult rs = bondage(spec, serial);
  double serial_ms = ms_since(t0);

  BondageOptions parallel = serial;
  parallel.jobs = jobs;
  t0 = clk::now();
  BondageResult rp = bondage(spec, parallel);
  double parallel_ms = ms_since(t0);

  if (rs.exact != rp.exact || rs.b != rp.b || rs.witness != rp.witness) {
    std::fprintf(stderr, "parallel scan diverged from serial reference on %dx%d\n", n, m);
    std::exit(1);
  }
  std::printf("bondage %2dx%d  b=%d  serial %8.1f ms  parallel(%d) %8.1f ms  speedup %.2fx\n",
              n, m, rs.b, serial_ms, jobs, parallel_ms, serial_ms / parallel_ms);
}

void bench_gamma(int n, int m) {
  GridSpec spec(n, m);
  auto t0 = clk::now();
  int dp = gamma_grid(spec);
  double dp_ms = ms_since(t0);

  t0 = clk::now();
  int oracle = gamma_oracle(realize(spec)).gamma;
  double oracle_ms = ms_since(t0);

  if (dp != oracle) {
    std::fprintf(stderr, "sweep and oracle disagree on %dx%d: %d vs %d\n", n, m, dp, oracle);
    std::exit(1);
  }
  std::printf("gamma   %2dx%d  gamma=%d  sweep %8.3f ms  oracle %8.1f ms\n",
              n, m, dp, dp_ms, oracle_ms);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  int jobs = 2;
#ifdef _OPENMP
  jobs = omp_get_max_threads();
#endif

  std::printf("== gamma: profile sweep vs oracle ==\n");
  bench_gamma(5, 4);
  bench_gamma(8, 3);
  if (!quick) {
    bench_gamma(10, 3);
    bench_gamma(7, 4);
  }

  std::printf("== bondage: serial reference vs parallel scan (%d threads) ==\n", jobs);
  bench_bondage(6, 3, jobs);
  bench_bondage(6, 4, jobs);
  if (!quick) {
    bench_bondage(5, 4, jobs);
    bench_bondage(9, 4, jobs);
  }
  return 0;
}
