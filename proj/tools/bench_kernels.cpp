#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "modlie/fp_matrix.hpp"
#include "modlie/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace modlie;

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, u32 reps) {
  double best = 1e18;
  for (u32 r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    fn();
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    best = std::min(best, ms);
  }
  return best;
}

FpMat random_matrix(const PrimeField& F, u32 n, std::mt19937_64& rng) {
  FpMat M(F, n, n);
  for (auto& x : M.a) x = static_cast<u32>(rng() % F.p);
  return M;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel timings"};
  std::vector<u32> sizes{64, 128, 256, 384};
  u32 reps = 3;
  bool skip_sweep = false;
  app.add_option("--sizes", sizes, "matrix sizes to time");
  app.add_option("--reps", reps, "repetitions, best-of");
  app.add_flag("--skip-sweep", skip_sweep, "skip the automorphism sweep timing");
  CLI11_PARSE(app, argc, argv);

  PrimeField F(5);
  std::mt19937_64 rng(42);

#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::cout << "threads: " << threads << "\n\n";

  std::cout << "matmul over F_5 (best of " << reps << ")\n";
  std::cout << std::setw(6) << "n" << std::setw(12) << "serial ms" << std::setw(12)
            << "openmp ms" << std::setw(10) << "speedup" << "\n";
  for (u32 n : sizes) {
    FpMat A = random_matrix(F, n, rng), B = random_matrix(F, n, rng);
    FpMat ref = mat_mul_serial(A, B);
    if (!(mat_mul_parallel(A, B) == ref)) {
      std::cerr << "kernel mismatch at n=" << n << "\n";
      return 1;
    }
    double ts = time_ms([&] { mat_mul_serial(A, B); }, reps);
    double tp = time_ms([&] { mat_mul_parallel(A, B); }, reps);
    std::cout << std::setw(6) << n << std::setw(12) << std::fixed << std::setprecision(2)
              << ts << std::setw(12) << tp << std::setw(10) << std::setprecision(2)
              << (tp > 0 ? ts / tp : 0.0) << "\n";
  }

  if (!skip_sweep) {
    // the automorphism sweep parallelizes over the 480 lifts
    std::cout << "\nweyl sweep (480 lifts of W(2;1))\n";
#ifdef _OPENMP
    omp_set_num_threads(1);
    SuiteReport serial = run_suite("weyl");
    omp_set_num_threads(threads);
    SuiteReport parallel = run_suite("weyl");
    std::cout << "  serial   " << std::fixed << std::setprecision(0) << serial.wall_ms
              << " ms (" << (serial.ok() ? "ok" : "FAIL") << ")\n";
    std::cout << "  openmp   " << parallel.wall_ms << " ms ("
              << (parallel.ok() ? "ok" : "FAIL") << ")\n";
    std::cout << "  speedup  " << std::setprecision(2)
              << (parallel.wall_ms > 0 ? serial.wall_ms / parallel.wall_ms : 0.0) << "\n";
#else
    SuiteReport rep = run_suite("weyl");
    std::cout << "  (no OpenMP) " << std::fixed << std::setprecision(0) << rep.wall_ms
              << " ms (" << (rep.ok() ? "ok" : "FAIL") << ")\n";
#endif
  }
  return 0;
}
