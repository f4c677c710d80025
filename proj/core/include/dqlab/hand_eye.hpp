#pragma once

#include <array>
#include <utility>
#include <vector>

#include "dqlab/scalars.hpp"

namespace dqlab {

// Rigid-body pose: row-major rotation matrix plus translation.
struct Pose {
  std::array<double, 9> R{1, 0, 0, 0, 1, 0, 0, 0, 1};
  std::array<double, 3> t{0, 0, 0};
};

void validate_pose(const Pose& pose, double tol = 1e-8);

// Scalar similarity standard form: a = q * lambda * q^conj with unit q and
// dual complex lambda. The standard-part eigenvalue branch with nonnegative
// imaginary part is selected (ties break on the dual part).
struct Diagonalization {
  DualQuaternion q;
  DualComplex lambda;
};

Diagonalization diagonalize(const DualQuaternion& a);

// Both solutions of the two-equation a q = q b, c q = q d problem; they
// differ only by global sign.
struct AxxbSolution {
  DualQuaternion q_plus;
  DualQuaternion q_minus;
  double residual_ab = 0.0;
  double residual_cd = 0.0;
};

// `inconsistency_tol` is relative to the largest input magnitude; the default
// admits measurement sets quoted to a few decimals while still rejecting data
// with no common motion. Residuals are always reported for callers that want
// a stricter judgment.
AxxbSolution axxb_solve(const DualQuaternion& a, const DualQuaternion& b, const DualQuaternion& c,
                        const DualQuaternion& d, double inconsistency_tol = 2e-3);

// Solution family of a single a q = p b equation, parametrized by a unit
// dual quaternion m.
struct AxybFamily {
  DualQuaternion x, y;      // frames: a = x lambda x^*, b = y mu y^*
  DualComplex lambda, mu;
  DualQuaternion g_lambda;  // unit dual complex factor on the q side
  DualQuaternion g_mu;      // unit dual complex factor on the p side

  std::pair<DualQuaternion, DualQuaternion> apply(const DualQuaternion& m) const;
};

AxybFamily axyb_family(const DualQuaternion& a, const DualQuaternion& b);

struct AxybSolution {
  DualQuaternion q;
  DualQuaternion p;
  DualQuaternion m;
  double max_residual = 0.0;
};

// Closed-form a^(k) q = p b^(k): the first pair fixes the family, the
// remaining pairs are reduced to an AX=XB problem in m. Two supplementary
// pairs (three total) pin m up to sign; with a single supplementary pair the
// reduced problem is degenerate and errors.
AxybSolution axyb_solve(const std::vector<std::pair<DualQuaternion, DualQuaternion>>& pairs);

DualQuaternion pose_to_dq(const Pose& pose);
Pose dq_to_pose(const DualQuaternion& q, double unit_tol = 1e-8);

}  // namespace dqlab
