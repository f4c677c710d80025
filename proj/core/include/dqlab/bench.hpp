#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dqlab/eigen.hpp"

namespace dqlab {

struct BenchCase {
  int n = 10;
  double s = 0.1;
};

struct BenchOptions {
  std::vector<BenchCase> cases;
  std::vector<Backend> backends{Backend::baseline, Backend::adjoint};
  int trials = 100;
  std::uint64_t seed = 1;
  RqiConfig rqi;  // seed field unused here; per-trial streams come from `seed`
};

// One aggregated row per (n, s, backend). Means are over converged trials
// only; failures are tallied separately.
struct BenchRow {
  int n = 0;
  double s = 0.0;
  Backend backend = Backend::adjoint;
  double e_lambda_mean = 0.0;
  double iters_mean = 0.0;
  double time_mean_s = 0.0;
  double time_median_s = 0.0;
  double flops_mean = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  int failed = 0;
};

const char* backend_name(Backend b);

std::vector<BenchRow> run_bench(const BenchOptions& opts);

// The (n, s) grid of the Laplacian experiments: n=10 with s in 10..60% and
// n=100 with s in {5, 8, 10, 15, 18, 20}%.
std::vector<BenchCase> table1_cases();

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);
nlohmann::json bench_row_json(const BenchRow& row);

}  // namespace dqlab
