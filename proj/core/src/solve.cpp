#include "dqlab/solve.hpp"

#include <chrono>
#include <cmath>

#include "dqlab/adjoint.hpp"
#include "dqlab/error.hpp"
#include "complex_kernels.hpp"

namespace dqlab {

namespace {

constexpr double kPivotRel = 1e-13;

double max_abs(const std::vector<Complex>& a) {
  double m = 0.0;
  for (const Complex& v : a) m = std::max(m, std::abs(v));
  return m;
}

double max_abs(const std::vector<double>& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

double relative_residual(const DQMatrix& Q, const DQVector& x, const DQVector& y) {
  const DQVector r = dq_vec_sub(dq_matvec(Q, x), y);
  const double ny = vec_norm_twoR(y);
  return vec_norm_twoR(r) / (ny > 1e-300 ? ny : 1e-300);
}

void require_square_system(std::size_t rows, std::size_t cols, std::size_t rhs) {
  if (rows != cols) fail(Errc::dimension_mismatch, "solver: matrix must be square");
  if (cols != rhs) fail(Errc::dimension_mismatch, "solver: rhs length mismatch");
}

}  // namespace

ComplexLU ComplexLU::factor(std::vector<Complex> a, std::size_t n) {
  flops::tally_factorization();
  const double scale = max_abs(a);
  if (scale == 0.0) fail(Errc::singular, "LU: zero matrix");
  std::vector<int> perm(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = std::abs(a[i * n + k]);
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    if (best < kPivotRel * scale) fail(Errc::singular, "LU: pivot below singularity threshold");
    perm[k] = static_cast<int>(piv);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
    }
    const Complex akk = a[k * n + k];
    const std::size_t tail = n - k - 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex m = detail::cdiv(a[i * n + k], akk);
      a[i * n + k] = m;
      const Complex* row_k = &a[k * n];
      Complex* row_i = &a[i * n];
      for (std::size_t j = k + 1; j < n; ++j) row_i[j] -= detail::cmul(m, row_k[j]);
    }
    flops::tally_cdiv(tail);
    flops::tally_cmul(tail * tail);
    flops::tally_cadd(tail * tail);
  }
  ComplexLU f;
  f.n_ = n;
  f.lu_ = std::move(a);
  f.perm_ = std::move(perm);
  return f;
}

void ComplexLU::solve_in_place(std::vector<Complex>& b) const {
  const std::size_t n = n_;
  if (b.size() != n) fail(Errc::dimension_mismatch, "LU solve: rhs length mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    if (perm_[k] != static_cast<int>(k)) std::swap(b[k], b[perm_[k]]);
  }
  for (std::size_t i = 1; i < n; ++i) {  // unit lower triangle
    Complex s = b[i];
    for (std::size_t j = 0; j < i; ++j) s -= detail::cmul(lu_[i * n + j], b[j]);
    b[i] = s;
    flops::tally_cmul(i);
    flops::tally_cadd(i);
  }
  for (std::size_t ii = n; ii-- > 0;) {
    Complex s = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= detail::cmul(lu_[ii * n + j], b[j]);
    b[ii] = detail::cdiv(s, lu_[ii * n + ii]);
    flops::tally_cmul(n - ii - 1);
    flops::tally_cadd(n - ii - 1);
    flops::tally_cdiv(1);
  }
}

ComplexCholesky ComplexCholesky::factor(std::vector<Complex> a, std::size_t n) {
  flops::tally_factorization();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(a[i * n + i]));
  if (scale == 0.0) fail(Errc::not_positive_definite, "Cholesky: zero diagonal");
  std::vector<Complex> l(n * n, Complex{});
  for (std::size_t j = 0; j < n; ++j) {
    Complex d = a[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= detail::cmul(l[j * n + k], std::conj(l[j * n + k]));
    flops::tally_cmul(j);
    flops::tally_cadd(j);
    if (!(d.real() > kPivotRel * scale)) {
      fail(Errc::not_positive_definite, "Cholesky: non-positive pivot");
    }
    const double ljj = std::sqrt(d.real());
    flops::tally_real(0, 0, 0, 1);
    l[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s = a[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= detail::cmul(l[i * n + k], std::conj(l[j * n + k]));
      l[i * n + j] = s / ljj;  // complex over real: two real divisions
    }
    const std::size_t tail = n - j - 1;
    flops::tally_cmul(tail * j);
    flops::tally_cadd(tail * j);
    flops::tally_real(0, 0, 2 * tail);
  }
  ComplexCholesky f;
  f.n_ = n;
  f.l_ = std::move(l);
  return f;
}

void ComplexCholesky::solve_in_place(std::vector<Complex>& b) const {
  const std::size_t n = n_;
  if (b.size() != n) fail(Errc::dimension_mismatch, "Cholesky solve: rhs length mismatch");
  for (std::size_t i = 0; i < n; ++i) {  // L y = b
    Complex s = b[i];
    for (std::size_t j = 0; j < i; ++j) s -= detail::cmul(l_[i * n + j], b[j]);
    b[i] = s / l_[i * n + i].real();
    flops::tally_cmul(i);
    flops::tally_cadd(i);
    flops::tally_real(0, 0, 2);
  }
  for (std::size_t ii = n; ii-- > 0;) {  // L^* x = y
    Complex s = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= detail::cmul(std::conj(l_[j * n + ii]), b[j]);
    b[ii] = s / l_[ii * n + ii].real();
    flops::tally_cmul(n - ii - 1);
    flops::tally_cadd(n - ii - 1);
    flops::tally_real(0, 0, 2);
  }
}

RealLU RealLU::factor(std::vector<double> a, std::size_t n) {
  flops::tally_factorization();
  const double scale = max_abs(a);
  if (scale == 0.0) fail(Errc::singular, "LU: zero matrix");
  std::vector<int> perm(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = std::abs(a[i * n + k]);
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    if (best < kPivotRel * scale) fail(Errc::singular, "LU: pivot below singularity threshold");
    perm[k] = static_cast<int>(piv);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
    }
    const double akk = a[k * n + k];
    const std::size_t tail = n - k - 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = a[i * n + k] / akk;
      a[i * n + k] = m;
      const double* __restrict row_k = &a[k * n];
      double* __restrict row_i = &a[i * n];
      for (std::size_t j = k + 1; j < n; ++j) row_i[j] -= m * row_k[j];
    }
    flops::tally_real(tail * tail, tail * tail, tail);
  }
  RealLU f;
  f.n_ = n;
  f.lu_ = std::move(a);
  f.perm_ = std::move(perm);
  return f;
}

void RealLU::solve_in_place(std::vector<double>& b) const {
  const std::size_t n = n_;
  if (b.size() != n) fail(Errc::dimension_mismatch, "LU solve: rhs length mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    if (perm_[k] != static_cast<int>(k)) std::swap(b[k], b[perm_[k]]);
  }
  for (std::size_t i = 1; i < n; ++i) {
    double s = b[i];
    for (std::size_t j = 0; j < i; ++j) s -= lu_[i * n + j] * b[j];
    b[i] = s;
    flops::tally_real(i, i);
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= lu_[ii * n + j] * b[j];
    b[ii] = s / lu_[ii * n + ii];
    flops::tally_real(n - ii - 1, n - ii - 1, 1);
  }
}

DCVector solve_dc(const DCMatrix& P, const DCVector& y, Factorization method) {
  require_square_system(P.rows, P.cols, y.size());
  const std::size_t n = P.rows;
  DCVector x(n);

  // One factorization of the standard part serves both stages.
  x.st = y.st;
  std::vector<Complex> rhs_du = y.du;
  auto finish = [&](auto const& fac) {
    fac.solve_in_place(x.st);
    // rhs_du -= P_du * x_st
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc{};
      const Complex* row = &P.du[i * n];
      for (std::size_t j = 0; j < n; ++j) acc += detail::cmul(row[j], x.st[j]);
      rhs_du[i] -= acc;
    }
    flops::tally_cmul(n * n);
    flops::tally_cadd(n * n);
    x.du = std::move(rhs_du);
    fac.solve_in_place(x.du);
  };
  if (method == Factorization::cholesky) {
    finish(ComplexCholesky::factor(P.st, n));
  } else {
    finish(ComplexLU::factor(P.st, n));
  }
  return x;
}

SolveReport solve_dq_adjoint(const DQMatrix& Q, const DQVector& y, Factorization method) {
  require_square_system(Q.rows(), Q.cols(), y.size());
  SolveReport rep;
  rep.factorization = method;
  const AdjointMatrix J = adjoint(Q);
  const DCVector fy = fmap(y);
  const auto t0 = std::chrono::steady_clock::now();
  {
    FlopScope scope;
    const DCVector fx = solve_dc(J.payload, fy, method);
    rep.solution = fmap_inv(fx);
    rep.flops = scope.counts();
  }
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.residual = relative_residual(Q, rep.solution, y);
  return rep;
}

SolveReport solve_dq_baseline(const DQMatrix& Q, const DQVector& y) {
  require_square_system(Q.rows(), Q.cols(), y.size());
  SolveReport rep;
  rep.factorization = Factorization::lu;
  const DualRepMatrix R = dual_representation(Q);
  const DualRepVector v = dual_rep_col(y);
  const std::size_t m = R.rows;
  const auto t0 = std::chrono::steady_clock::now();
  {
    FlopScope scope;
    const RealLU lu = RealLU::factor(R.st, m);
    std::vector<double> x1 = v.st;
    lu.solve_in_place(x1);
    std::vector<double> rhs = v.du;
    for (std::size_t i = 0; i < m; ++i) {
      double acc = 0.0;
      const double* __restrict row = &R.du[i * m];
      for (std::size_t j = 0; j < m; ++j) acc += row[j] * x1[j];
      rhs[i] -= acc;
    }
    flops::tally_real(m * m, m * m);
    std::vector<double> x2 = std::move(rhs);
    lu.solve_in_place(x2);
    DualRepVector out;
    out.st = std::move(x1);
    out.du = std::move(x2);
    rep.solution = dual_rep_col_inv(out);
    rep.flops = scope.counts();
  }
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.residual = relative_residual(Q, rep.solution, y);
  return rep;
}

}  // namespace dqlab
