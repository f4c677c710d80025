#include "dqlab/adjoint.hpp"

#include <cmath>

#include "dqlab/error.hpp"

namespace dqlab {

namespace {

// Fill one 2m x 2n part of the payload from one quaternion part of Q.
void fill_adjoint_part(const DQMatrix& Q, bool dual_part, std::vector<Complex>& out,
                       std::size_t out_cols) {
  const std::size_t m = Q.rows(), n = Q.cols();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Quaternion& q = dual_part ? Q.at(i, j).du : Q.at(i, j).st;
      const Complex p1 = q.c1(), p2 = q.c2();
      out[i * out_cols + j] = p1;
      out[i * out_cols + (n + j)] = p2;
      out[(m + i) * out_cols + j] = -std::conj(p2);
      out[(m + i) * out_cols + (n + j)] = std::conj(p1);
    }
  }
}

double part_pattern_residual(const std::vector<Complex>& a, std::size_t rows, std::size_t cols) {
  const std::size_t m = rows / 2, n = cols / 2;
  double r = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // lower-left + conj(upper-right) and lower-right - conj(upper-left)
      r += std::abs(a[(m + i) * cols + j] + std::conj(a[i * cols + (n + j)]));
      r += std::abs(a[(m + i) * cols + (n + j)] - std::conj(a[i * cols + j]));
    }
  }
  return r;
}

}  // namespace

AdjointMatrix adjoint(const DQMatrix& Q) {
  AdjointMatrix M;
  M.payload = DCMatrix(2 * Q.rows(), 2 * Q.cols());
  fill_adjoint_part(Q, false, M.payload.st, M.payload.cols);
  fill_adjoint_part(Q, true, M.payload.du, M.payload.cols);
  return M;
}

double adjoint_pattern_residual(const DCMatrix& M) {
  if (M.rows % 2 != 0 || M.cols % 2 != 0) {
    fail(Errc::dimension_mismatch, "adjoint payload must have even dimensions");
  }
  return part_pattern_residual(M.st, M.rows, M.cols) +
         part_pattern_residual(M.du, M.rows, M.cols);
}

DQMatrix adjoint_inv(const DCMatrix& M, double pattern_tol) {
  const double res = adjoint_pattern_residual(M);
  if (res > pattern_tol) {
    fail(Errc::not_in_adjoint_image,
         "matrix violates the adjoint block pattern (residual " + std::to_string(res) + ")");
  }
  const std::size_t m = M.rows / 2, n = M.cols / 2;
  DQMatrix Q(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Q.at(i, j) = DualQuaternion{
          Quaternion::from_split(M.st_at(i, j), M.st_at(i, n + j)),
          Quaternion::from_split(M.du_at(i, j), M.du_at(i, n + j))};
    }
  }
  return Q;
}

DCVector fmap(const DQVector& v) {
  const std::size_t n = v.size();
  DCVector u(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const DqSplit s = dq_split(v[i]);
    u.st[i] = s.a1;
    u.st[n + i] = -std::conj(s.a2);
    u.du[i] = s.a3;
    u.du[n + i] = -std::conj(s.a4);
  }
  return u;
}

DCVector gmap(const DQVector& v) {
  const std::size_t n = v.size();
  DCVector u(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const DqSplit s = dq_split(v[i]);
    u.st[i] = s.a2;
    u.st[n + i] = std::conj(s.a1);
    u.du[i] = s.a4;
    u.du[n + i] = std::conj(s.a3);
  }
  return u;
}

DQVector fmap_inv(const DCVector& u) {
  if (u.size() % 2 != 0) fail(Errc::dimension_mismatch, "fmap_inv: odd-length input");
  const std::size_t n = u.size() / 2;
  DQVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = dq_from_split({u.st[i], -std::conj(u.st[n + i]), u.du[i], -std::conj(u.du[n + i])});
  }
  return v;
}

namespace {

// 4x4 sign/source pattern of the dual representation blocks: row r, column c
// of the block grid selects component `comp[r][c]` with sign `sgn[r][c]`.
constexpr int kComp[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr double kSign[4][4] = {{+1, +1, +1, +1}, {-1, +1, -1, +1}, {-1, +1, +1, -1}, {-1, -1, +1, +1}};

double quat_component(const Quaternion& q, int c) {
  switch (c) {
    case 0: return q.w;
    case 1: return q.x;
    case 2: return q.y;
    default: return q.z;
  }
}

}  // namespace

DualRepMatrix dual_representation(const DQMatrix& Q) {
  const std::size_t m = Q.rows(), n = Q.cols();
  DualRepMatrix R;
  R.rows = 4 * m;
  R.cols = 4 * n;
  R.st.assign(R.rows * R.cols, 0.0);
  R.du.assign(R.rows * R.cols, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const DualQuaternion& q = Q.at(i, j);
      for (int br = 0; br < 4; ++br) {
        for (int bc = 0; bc < 4; ++bc) {
          const double s = kSign[br][bc];
          const int c = kComp[br][bc];
          R.st_at(br * m + i, bc * n + j) = s * quat_component(q.st, c);
          R.du_at(br * m + i, bc * n + j) = s * quat_component(q.du, c);
        }
      }
    }
  }
  return R;
}

DualRepVector dual_rep_col(const DQVector& x) {
  const std::size_t n = x.size();
  DualRepVector v;
  v.st.assign(4 * n, 0.0);
  v.du.assign(4 * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    // First block-column of the dual representation: [Q0; -Q1; -Q2; -Q3].
    const double sst[4] = {x[i].st.w, -x[i].st.x, -x[i].st.y, -x[i].st.z};
    const double sdu[4] = {x[i].du.w, -x[i].du.x, -x[i].du.y, -x[i].du.z};
    for (int b = 0; b < 4; ++b) {
      v.st[b * n + i] = sst[b];
      v.du[b * n + i] = sdu[b];
    }
  }
  return v;
}

DQVector dual_rep_col_inv(const DualRepVector& v) {
  if (v.st.size() % 4 != 0 || v.st.size() != v.du.size()) {
    fail(Errc::dimension_mismatch, "dual_rep_col_inv: length must be a multiple of 4");
  }
  const std::size_t n = v.st.size() / 4;
  DQVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = DualQuaternion{
        Quaternion{v.st[i], -v.st[n + i], -v.st[2 * n + i], -v.st[3 * n + i]},
        Quaternion{v.du[i], -v.du[n + i], -v.du[2 * n + i], -v.du[3 * n + i]}};
  }
  return x;
}

}  // namespace dqlab
