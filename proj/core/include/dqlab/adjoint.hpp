#pragma once

#include "dqlab/linalg.hpp"

namespace dqlab {

// Dual complex adjoint of a dual quaternion matrix: with each quaternion part
// split as P1 + P2 j, the 2m x 2n payload carries the block form
//   [[P1, P2], [-conj(P2), conj(P1)]]
// in both the standard and dual slots. Membership in the adjoint image is a
// checkable pattern, not an assumption.
struct AdjointMatrix {
  DCMatrix payload;

  std::size_t dq_rows() const { return payload.rows / 2; }
  std::size_t dq_cols() const { return payload.cols / 2; }
};

// Real dual representation (4m x 4n) used by the baseline solver: the block
// pattern encoding left quaternion multiplication as a real-linear action.
struct DualRepMatrix {
  std::size_t rows = 0, cols = 0;  // 4m x 4n
  std::vector<double> st, du;      // row-major

  double& st_at(std::size_t i, std::size_t j) { return st[i * cols + j]; }
  double& du_at(std::size_t i, std::size_t j) { return du[i * cols + j]; }
  double st_at(std::size_t i, std::size_t j) const { return st[i * cols + j]; }
  double du_at(std::size_t i, std::size_t j) const { return du[i * cols + j]; }
};

struct DualRepVector {
  std::vector<double> st, du;  // length 4n
};

AdjointMatrix adjoint(const DQMatrix& Q);

// How far a dual complex matrix sits from the adjoint block pattern, per part.
double adjoint_pattern_residual(const DCMatrix& M);

// Inverse of the adjoint map; rejects payloads outside the image.
DQMatrix adjoint_inv(const DCMatrix& M, double pattern_tol = 1e-10);
inline DQMatrix adjoint_inv(const AdjointMatrix& M, double pattern_tol = 1e-10) {
  return adjoint_inv(M.payload, pattern_tol);
}

// Vector mappings: J(v) = [F(v) G(v)] columnwise.
DCVector fmap(const DQVector& v);
DCVector gmap(const DQVector& v);
DQVector fmap_inv(const DCVector& u);

DualRepMatrix dual_representation(const DQMatrix& Q);
DualRepVector dual_rep_col(const DQVector& x);
DQVector dual_rep_col_inv(const DualRepVector& v);

}  // namespace dqlab
