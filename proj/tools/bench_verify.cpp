// Times the exhaustive plan verifier: serial reference vs the OpenMP scenario
// sweep, on full-capacity designs of growing size. Both paths must produce
// identical reports; the run aborts if they ever disagree.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "coinweigh/oracle.hpp"

using namespace coinweigh;

namespace {

double time_ms(const WeighingPlan& plan, VerificationReport (*verify)(const WeighingPlan&),
               int repeat, VerificationReport& out) {
  double best = 0.0;
  for (int i = 0; i < repeat; ++i) {
    const auto start = std::chrono::steady_clock::now();
    out = verify(plan);
    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    if (i == 0 || ms < best) best = ms;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark the serial and parallel plan verifiers"};
  int min_rows = 6;
  int max_rows = 9;
  int repeat = 3;
  app.add_option("--min-rows", min_rows, "Smallest weighing count");
  app.add_option("--max-rows", max_rows, "Largest weighing count");
  app.add_option("--repeat", repeat, "Timing repetitions (best of)");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled, parallel path runs serially\n");
#endif
  std::printf("%5s %8s %10s %12s %12s %9s\n", "rows", "coins", "scenarios", "serial ms",
              "parallel ms", "speedup");

  for (int rows = min_rows; rows <= max_rows; ++rows) {
    const int coins = static_cast<int>(balanced_capacity(rows));
    const WeighingPlan plan = build_plan(coins);

    VerificationReport serial_report;
    VerificationReport parallel_report;
    const double serial_ms = time_ms(plan, &verify_plan_serial, repeat, serial_report);
    const double parallel_ms = time_ms(plan, &verify_plan, repeat, parallel_report);

    if (!(serial_report == parallel_report)) {
      std::fprintf(stderr, "FAIL: serial and parallel reports differ at %d rows\n", rows);
      return 1;
    }
    if (!serial_report.pass) {
      std::fprintf(stderr, "FAIL: plan with %d rows did not verify\n", rows);
      return 1;
    }

    std::printf("%5d %8d %10zu %12.2f %12.2f %8.2fx\n", rows, coins, serial_report.scenario_count,
                serial_ms, parallel_ms, serial_ms / parallel_ms);
  }
  return 0;
}
