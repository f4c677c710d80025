#pragma once

#include <cstddef>
#include <vector>

#include "dqlab/scalars.hpp"

namespace dqlab {

// Dense column vector over dual quaternions.
class DQVector {
 public:
  DQVector() = default;
  explicit DQVector(std::size_t n) : e_(n) {}
  explicit DQVector(std::vector<DualQuaternion> e) : e_(std::move(e)) {}

  std::size_t size() const { return e_.size(); }
  DualQuaternion& operator[](std::size_t i) { return e_[i]; }
  const DualQuaternion& operator[](std::size_t i) const { return e_[i]; }
  const std::vector<DualQuaternion>& entries() const { return e_; }

  bool appreciable() const;

 private:
  std::vector<DualQuaternion> e_;
};

// Dense row-major matrix over dual quaternions.
class DQMatrix {
 public:
  DQMatrix() = default;
  DQMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static DQMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  DualQuaternion& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const DualQuaternion& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  const std::vector<DualQuaternion>& entries() const { return e_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<DualQuaternion> e_;
};

// Dual complex matrix: a pair of complex matrices sharing one shape.
struct DCMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Complex> st, du;  // row-major

  DCMatrix() = default;
  DCMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), st(r * c), du(r * c) {}

  Complex& st_at(std::size_t i, std::size_t j) { return st[i * cols + j]; }
  Complex& du_at(std::size_t i, std::size_t j) { return du[i * cols + j]; }
  Complex st_at(std::size_t i, std::size_t j) const { return st[i * cols + j]; }
  Complex du_at(std::size_t i, std::size_t j) const { return du[i * cols + j]; }
};

struct DCVector {
  std::vector<Complex> st, du;

  DCVector() = default;
  explicit DCVector(std::size_t n) : st(n), du(n) {}
  std::size_t size() const { return st.size(); }
};

enum class Side { left, right };
enum class VecNorm { two, twoR };
enum class MatNorm { F, FR };

// Arithmetic. Factor order is preserved entrywise; nothing here commutes.
DQVector dq_matvec(const DQMatrix& Q, const DQVector& v);
DQMatrix dq_matmul(const DQMatrix& A, const DQMatrix& B);
DQMatrix dq_add(const DQMatrix& A, const DQMatrix& B);
DQMatrix dq_sub(const DQMatrix& A, const DQMatrix& B);
DQMatrix dq_conj_transpose(const DQMatrix& Q);
DQVector dq_vec_add(const DQVector& a, const DQVector& b);
DQVector dq_vec_sub(const DQVector& a, const DQVector& b);

// Entrywise scalar product, preserving the requested side.
DQVector scale_vec(const DQVector& x, const DualQuaternion& s, Side side);
DQVector scale_vec(const DQVector& x, DualNumber s);

// Vector norms: the 2-norm is dual valued (with the zero-standard branch
// giving |x_du| eps); the 2R-norm is the flat real one.
DualNumber vec_norm_two(const DQVector& x);
double vec_norm_twoR(const DQVector& x);

// Matrix norms; same branch structure as the vector case.
DualNumber mat_norm_F(const DQMatrix& Q);
double mat_norm_FR(const DQMatrix& Q);

// Scale-aware default tolerance for the structural predicates.
double default_structure_tol(const DQMatrix& Q);
bool is_hermitian(const DQMatrix& Q, double tol = -1.0);
bool is_unitary(const DQMatrix& U, double tol = -1.0);

// x^* y reduced to a full dual quaternion (callers decide what to do with
// non-scalar residue).
DualQuaternion dq_dot(const DQVector& x, const DQVector& y);

double dc_norm_2R(const DCVector& v);

}  // namespace dqlab
