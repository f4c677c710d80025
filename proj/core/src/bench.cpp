#include "dqlab/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "dqlab/error.hpp"
#include "dqlab/graph.hpp"

namespace dqlab {

const char* backend_name(Backend b) { return b == Backend::baseline ? "baseline" : "adjoint"; }

namespace {

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return (v.size() % 2 == 1) ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
  if (opts.trials < 1) fail(Errc::invalid_argument, "bench: trials >= 1 required");
  if (opts.cases.empty()) fail(Errc::invalid_argument, "bench: no (n, s) cases given");
  if (opts.backends.empty()) fail(Errc::invalid_argument, "bench: no backends given");

  std::vector<BenchRow> rows;
  for (std::size_t ci = 0; ci < opts.cases.size(); ++ci) {
    const BenchCase& bc = opts.cases[ci];
    struct Acc {
      std::vector<double> e_lambda, iters, times, flops;
      int failed = 0;
    };
    std::vector<Acc> acc(opts.backends.size());

    for (int trial = 0; trial < opts.trials; ++trial) {
      // One stream per (case, trial); graph, q and v0 resample every trial.
      Rng rng = Rng::for_trial(opts.seed, ci * static_cast<std::uint64_t>(opts.trials) + trial);
      const FormationGraph g = random_graph(bc.n, bc.s, rng);
      const DQMatrix L = laplacian(g);
      const DQVector v0 = random_unit_vector(bc.n, rng);

      for (std::size_t bi = 0; bi < opts.backends.size(); ++bi) {
        const auto t0 = std::chrono::steady_clock::now();
        const EigenPair pair = rqi_from(L, v0, opts.rqi, opts.backends[bi]);
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!pair.converged) {
          ++acc[bi].failed;
          continue;
        }
        // Reported residual is recomputed from the returned pair, never
        // trusted from the solver loop.
        acc[bi].e_lambda.push_back(eigen_residual(L, pair.lambda, pair.vector));
        acc[bi].iters.push_back(static_cast<double>(pair.iterations));
        acc[bi].times.push_back(dt);
        acc[bi].flops.push_back(static_cast<double>(pair.flops.total()));
      }
    }

    for (std::size_t bi = 0; bi < opts.backends.size(); ++bi) {
      BenchRow row;
      row.n = bc.n;
      row.s = bc.s;
      row.backend = opts.backends[bi];
      row.e_lambda_mean = mean_of(acc[bi].e_lambda);
      row.iters_mean = mean_of(acc[bi].iters);
      row.time_mean_s = mean_of(acc[bi].times);
      row.time_median_s = median_of(acc[bi].times);
      row.flops_mean = mean_of(acc[bi].flops);
      row.trials = opts.trials;
      row.seed = opts.seed;
      row.failed = acc[bi].failed;
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<BenchCase> table1_cases() {
  return {{10, 0.10}, {10, 0.20}, {10, 0.30}, {10, 0.40},  {10, 0.50},  {10, 0.60},
          {100, 0.05}, {100, 0.08}, {100, 0.10}, {100, 0.15}, {100, 0.18}, {100, 0.20}};
}

std::string bench_csv_header() {
  return "n,s,backend,e_lambda_mean,iters_mean,time_mean_s,flops_mean,trials,seed";
}

std::string bench_csv_row(const BenchRow& row) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%d,%g,%s,%.6e,%.4f,%.6e,%.6e,%d,%llu", row.n, row.s,
                backend_name(row.backend), row.e_lambda_mean, row.iters_mean, row.time_mean_s,
                row.flops_mean, row.trials, static_cast<unsigned long long>(row.seed));
  return buf;
}

nlohmann::json bench_row_json(const BenchRow& row) {
  return nlohmann::json{{"n", row.n},
                        {"s", row.s},
                        {"backend", backend_name(row.backend)},
                        {"e_lambda_mean", row.e_lambda_mean},
                        {"iters_mean", row.iters_mean},
                        {"time_mean_s", row.time_mean_s},
                        {"time_median_s", row.time_median_s},
                        {"flops_mean", row.flops_mean},
                        {"trials", row.trials},
                        {"seed", row.seed},
                        {"failed", row.failed}};
}

}  // namespace dqlab
