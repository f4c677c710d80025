#pragma once

#include <vector>

#include "dqlab/flops.hpp"
#include "dqlab/linalg.hpp"

namespace dqlab {

enum class Factorization { lu, cholesky };

// Outcome of one dual quaternion linear solve, with the real-flop tallies the
// operation-count comparisons are built on.
struct SolveReport {
  DQVector solution;
  FlopCounts flops;
  Factorization factorization = Factorization::lu;
  double wall_time_s = 0.0;
  double residual = 0.0;  // ||Q x - y||_2R / max(||y||_2R, 1e-300)
};

// Dense complex LU with partial row pivoting. Row-major packed storage; flop
// tallies go to the active FlopScope.
class ComplexLU {
 public:
  static ComplexLU factor(std::vector<Complex> a, std::size_t n);
  void solve_in_place(std::vector<Complex>& b) const;
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<Complex> lu_;
  std::vector<int> perm_;
};

// Dense complex Cholesky (L L^*) for Hermitian positive definite input.
class ComplexCholesky {
 public:
  static ComplexCholesky factor(std::vector<Complex> a, std::size_t n);
  void solve_in_place(std::vector<Complex>& b) const;
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<Complex> l_;
};

// Dense real LU with partial row pivoting, for the dual-representation route.
class RealLU {
 public:
  static RealLU factor(std::vector<double> a, std::size_t n);
  void solve_in_place(std::vector<double>& b) const;
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> lu_;
  std::vector<int> perm_;
};

// Solve the dual complex system P x = y using one factorization of P_st:
// P_st x_st = y_st, then P_st x_du = y_du - P_du x_st.
DCVector solve_dc(const DCMatrix& P, const DCVector& y, Factorization method = Factorization::lu);

// Adjoint route: x = F^{-1}( solve_dc(J(Q), F(y)) ).
SolveReport solve_dq_adjoint(const DQMatrix& Q, const DQVector& y,
                             Factorization method = Factorization::lu);

// Baseline route through the 4n x 4n real dual representation.
SolveReport solve_dq_baseline(const DQMatrix& Q, const DQVector& y);

}  // namespace dqlab
