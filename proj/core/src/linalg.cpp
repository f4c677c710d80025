#include "dqlab/linalg.hpp"

#include <cmath>

#include "dqlab/error.hpp"

namespace dqlab {

bool DQVector::appreciable() const {
  double n2 = 0.0;
  for (const auto& q : e_) n2 += quat_norm2(q.st);
  return std::sqrt(n2) > kAppreciableTol;
}

DQMatrix DQMatrix::identity(std::size_t n) {
  DQMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = DualQuaternion::identity();
  return I;
}

DQVector dq_matvec(const DQMatrix& Q, const DQVector& v) {
  if (Q.cols() != v.size()) fail(Errc::dimension_mismatch, "matvec: shape mismatch");
  DQVector r(Q.rows());
  for (std::size_t i = 0; i < Q.rows(); ++i) {
    DualQuaternion acc;
    for (std::size_t j = 0; j < Q.cols(); ++j) acc = acc + Q.at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

DQMatrix dq_matmul(const DQMatrix& A, const DQMatrix& B) {
  if (A.cols() != B.rows()) fail(Errc::dimension_mismatch, "matmul: shape mismatch");
  DQMatrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const DualQuaternion& a = A.at(i, k);
      for (std::size_t j = 0; j < B.cols(); ++j) {
        C.at(i, j) = C.at(i, j) + a * B.at(k, j);
      }
    }
  }
  return C;
}

DQMatrix dq_add(const DQMatrix& A, const DQMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    fail(Errc::dimension_mismatch, "add: shape mismatch");
  }
  DQMatrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = A.at(i, j) + B.at(i, j);
  return C;
}

DQMatrix dq_sub(const DQMatrix& A, const DQMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    fail(Errc::dimension_mismatch, "sub: shape mismatch");
  }
  DQMatrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = A.at(i, j) - B.at(i, j);
  return C;
}

DQMatrix dq_conj_transpose(const DQMatrix& Q) {
  DQMatrix C(Q.cols(), Q.rows());
  for (std::size_t i = 0; i < Q.rows(); ++i)
    for (std::size_t j = 0; j < Q.cols(); ++j) C.at(j, i) = dq_conj(Q.at(i, j));
  return C;
}

DQVector dq_vec_add(const DQVector& a, const DQVector& b) {
  if (a.size() != b.size()) fail(Errc::dimension_mismatch, "vec add: length mismatch");
  DQVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

DQVector dq_vec_sub(const DQVector& a, const DQVector& b) {
  if (a.size() != b.size()) fail(Errc::dimension_mismatch, "vec sub: length mismatch");
  DQVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

DQVector scale_vec(const DQVector& x, const DualQuaternion& s, Side side) {
  DQVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    r[i] = (side == Side::right) ? x[i] * s : s * x[i];
  }
  return r;
}

DQVector scale_vec(const DQVector& x, DualNumber s) {
  DQVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * s;
  return r;
}

namespace {

// Sum of |x_i|^2 as a dual number: |x_st|^2 + 2 sc(x_st^* x_du) eps summed
// entrywise. Entries with zero standard part contribute nothing, matching the
// entrywise absolute value definition.
DualNumber sum_abs_squares(const DQVector& x) {
  double a = 0.0, b = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    a += quat_norm2(x[i].st);
    b += 2.0 * quat_sc(quat_conj(x[i].st) * x[i].du);
  }
  return {a, b};
}

double frob_norm_quat_part(const DQMatrix& Q, bool dual_part) {
  double a = 0.0;
  for (const auto& q : Q.entries()) a += quat_norm2(dual_part ? q.du : q.st);
  return std::sqrt(a);
}

}  // namespace

DualNumber vec_norm_two(const DQVector& x) {
  const DualNumber s2 = sum_abs_squares(x);
  if (std::sqrt(s2.st) > kAppreciableTol) return dual_sqrt(s2);
  double ndu = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) ndu += quat_norm2(x[i].du);
  return {0.0, std::sqrt(ndu)};
}

double vec_norm_twoR(const DQVector& x) {
  double a = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) a += quat_norm2(x[i].st) + quat_norm2(x[i].du);
  return std::sqrt(a);
}

DualNumber mat_norm_F(const DQMatrix& Q) {
  const double nst = frob_norm_quat_part(Q, false);
  if (nst > kAppreciableTol) {
    double tr = 0.0;  // sc(tr(Q_st^* Q_du)) = sum of 4-component dot products
    for (const auto& q : Q.entries()) tr += quat_sc(quat_conj(q.st) * q.du);
    return {nst, tr / nst};
  }
  return {0.0, frob_norm_quat_part(Q, true)};
}

double mat_norm_FR(const DQMatrix& Q) {
  double a = 0.0;
  for (const auto& q : Q.entries()) a += quat_norm2(q.st) + quat_norm2(q.du);
  return std::sqrt(a);
}

double default_structure_tol(const DQMatrix& Q) {
  const double n = mat_norm_FR(Q);
  return 1e-10 * (n > 1.0 ? n : 1.0);
}

bool is_hermitian(const DQMatrix& Q, double tol) {
  if (Q.rows() != Q.cols()) fail(Errc::dimension_mismatch, "is_hermitian: non-square input");
  if (tol < 0.0) tol = default_structure_tol(Q);
  double dev2 = 0.0;
  for (std::size_t i = 0; i < Q.rows(); ++i) {
    for (std::size_t j = 0; j < Q.cols(); ++j) {
      const DualQuaternion d = Q.at(i, j) - dq_conj(Q.at(j, i));
      dev2 += quat_norm2(d.st) + quat_norm2(d.du);
    }
  }
  return std::sqrt(dev2) <= tol;
}

bool is_unitary(const DQMatrix& U, double tol) {
  if (U.rows() != U.cols()) fail(Errc::dimension_mismatch, "is_unitary: non-square input");
  if (tol < 0.0) tol = default_structure_tol(U);
  const DQMatrix I = DQMatrix::identity(U.rows());
  const DQMatrix Uh = dq_conj_transpose(U);
  const DQMatrix d1 = dq_sub(dq_matmul(Uh, U), I);
  const DQMatrix d2 = dq_sub(dq_matmul(U, Uh), I);
  return mat_norm_FR(d1) <= tol && mat_norm_FR(d2) <= tol;
}

DualQuaternion dq_dot(const DQVector& x, const DQVector& y) {
  if (x.size() != y.size()) fail(Errc::dimension_mismatch, "dot: length mismatch");
  DualQuaternion acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc = acc + dq_conj(x[i]) * y[i];
  return acc;
}

double dc_norm_2R(const DCVector& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) a += std::norm(v.st[i]) + std::norm(v.du[i]);
  return std::sqrt(a);
}

}  // namespace dqlab
