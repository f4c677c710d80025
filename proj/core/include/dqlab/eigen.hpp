#pragma once

#include <cstdint>

#include "dqlab/flops.hpp"
#include "dqlab/linalg.hpp"
#include "dqlab/rng.hpp"

namespace dqlab {

enum class Backend { baseline, adjoint };

struct RqiConfig {
  int k_max = 50;
  double delta = 1e-7;
  int power_iters = 20;
  std::uint64_t seed = 0;
};

struct EigenPair {
  DualNumber lambda;
  DQVector vector;
  double residual = 0.0;  // ||Q v - v lambda||_2R, recomputed at output
  int iterations = 0;
  int power_iters = 0;
  bool converged = false;
  FlopCounts flops;                      // accumulated over the per-iteration solves
  std::vector<double> residual_history;  // one entry per RQI iteration
};

// v^* Q v reduced to a dual number. The quaternion residue must vanish for
// Hermitian input; a residue above 1e-8 (relative) is a hard error, anything
// smaller is discarded.
DualNumber rayleigh_quotient(const DQMatrix& Q, const DQVector& v);

double eigen_residual(const DQMatrix& Q, DualNumber lambda, const DQVector& v);

// Random unit start vector: all eight components of every entry i.i.d.
// standard normal, then normalized in the dual 2-norm.
DQVector random_unit_vector(std::size_t n, Rng& rng);

// v <- Q v / ||Q v||_2, `iters` times.
DQVector power_preprocess(const DQMatrix& Q, const DQVector& v0, int iters);

// Rayleigh quotient iteration from a caller-supplied unit start vector.
EigenPair rqi_from(const DQMatrix& Q, const DQVector& v0, const RqiConfig& config,
                   Backend backend);

// Full pipeline: seeded random start, power preprocessing, then RQI.
EigenPair rqi(const DQMatrix& Q, const RqiConfig& config, Backend backend);

// Unique dual complex representative of the right-eigenvalue similarity
// class: imaginary part of the standard part positive, or zero with
// nonnegative imaginary dual part.
DualComplex standardize_right_eigenvalue(const DualQuaternion& lam);

}  // namespace dqlab
