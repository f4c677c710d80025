#include "dqlab/eigen.hpp"

#include <cmath>

#include "dqlab/adjoint.hpp"
#include "dqlab/error.hpp"
#include "dqlab/hand_eye.hpp"
#include "dqlab/solve.hpp"
#include "complex_kernels.hpp"

namespace dqlab {

namespace {

DQVector normalize_two(const DQVector& v) {
  const DualNumber nrm = vec_norm_two(v);
  if (!nrm.appreciable()) {
    fail(Errc::degenerate_start, "cannot normalize a non-appreciable vector");
  }
  return scale_vec(v, dual_div(DualNumber{1.0}, nrm));
}

// Shifted two-stage solve on the adjoint side, counted.
struct AdjointBackend {
  DCMatrix P;  // J(Q)
  std::size_t m;

  explicit AdjointBackend(const DQMatrix& Q) : P(adjoint(Q).payload), m(P.rows) {}

  DQVector solve(DualNumber lambda, const DQVector& v) const {
    const DCVector x = fmap(v);
    std::vector<Complex> A = P.st;
    for (std::size_t i = 0; i < m; ++i) A[i * m + i] -= lambda.st;
    flops::tally_cadd(m);
    const ComplexLU lu = ComplexLU::factor(std::move(A), m);
    DCVector y(m);
    y.st = x.st;
    lu.solve_in_place(y.st);
    // rhs_du = x_du - (P_du - lambda_du I) y_st
    y.du = x.du;
    for (std::size_t i = 0; i < m; ++i) {
      Complex acc{};
      const Complex* row = &P.du[i * m];
      for (std::size_t j = 0; j < m; ++j) acc += detail::cmul(row[j], y.st[j]);
      y.du[i] -= acc - lambda.du * y.st[i];
    }
    flops::tally_cmul(m * m + m);
    flops::tally_cadd(m * m + m);
    lu.solve_in_place(y.du);
    return fmap_inv(y);
  }
};

// Shifted two-stage solve through the real dual representation, counted.
struct BaselineBackend {
  DualRepMatrix R;
  std::size_t m;

  explicit BaselineBackend(const DQMatrix& Q) : R(dual_representation(Q)), m(R.rows) {}

  DQVector solve(DualNumber lambda, const DQVector& v) const {
    const DualRepVector x = dual_rep_col(v);
    std::vector<double> A = R.st;
    for (std::size_t i = 0; i < m; ++i) A[i * m + i] -= lambda.st;
    flops::tally_real(m, 0);
    const RealLU lu = RealLU::factor(std::move(A), m);
    std::vector<double> y1 = x.st;
    lu.solve_in_place(y1);
    std::vector<double> rhs = x.du;
    for (std::size_t i = 0; i < m; ++i) {
      double acc = 0.0;
      const double* row = &R.du[i * m];
      for (std::size_t j = 0; j < m; ++j) acc += row[j] * y1[j];
      rhs[i] -= acc - lambda.du * y1[i];
    }
    flops::tally_real(m * m + m, m * m + m);
    lu.solve_in_place(rhs);
    DualRepVector out;
    out.st = std::move(y1);
    out.du = std::move(rhs);
    return dual_rep_col_inv(out);
  }
};

}  // namespace

DualNumber rayleigh_quotient(const DQMatrix& Q, const DQVector& v) {
  const DualQuaternion r = dq_dot(v, dq_matvec(Q, v));
  const double residue =
      std::sqrt(r.st.x * r.st.x + r.st.y * r.st.y + r.st.z * r.st.z + r.du.x * r.du.x +
                r.du.y * r.du.y + r.du.z * r.du.z);
  const double scale = std::max(1.0, dq_mag2(r));
  if (residue > 1e-8 * scale) {
    fail(Errc::hermitian_violation, "rayleigh quotient has a non-scalar quaternion residue");
  }
  return {r.st.w, r.du.w};
}

double eigen_residual(const DQMatrix& Q, DualNumber lambda, const DQVector& v) {
  DQVector r = dq_matvec(Q, v);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - v[i] * lambda;
  return vec_norm_twoR(r);
}

DQVector random_unit_vector(std::size_t n, Rng& rng) {
  DQVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = DualQuaternion{Quaternion{rng.normal(), rng.normal(), rng.normal(), rng.normal()},
                          Quaternion{rng.normal(), rng.normal(), rng.normal(), rng.normal()}};
  }
  return normalize_two(v);
}

DQVector power_preprocess(const DQMatrix& Q, const DQVector& v0, int iters) {
  if (!v0.appreciable()) fail(Errc::degenerate_start, "power method: start vector not appreciable");
  DQVector v = normalize_two(v0);
  for (int it = 0; it < iters; ++it) {
    DQVector w = dq_matvec(Q, v);
    if (!w.appreciable()) {
      fail(Errc::degenerate_start, "power method: iterate vanished (start in the kernel)");
    }
    v = normalize_two(w);
  }
  return v;
}

namespace {

template <typename BackendImpl>
EigenPair rqi_loop(const DQMatrix& Q, const DQVector& v0, const RqiConfig& cfg,
                   const BackendImpl& backend) {
  const double norm_fr = mat_norm_FR(Q);
  const double stop = cfg.delta * norm_fr;

  EigenPair out;
  out.power_iters = cfg.power_iters;
  DQVector v = v0;
  DualNumber lambda = rayleigh_quotient(Q, v);
  double res = eigen_residual(Q, lambda, v);
  DQVector best_v = v;
  DualNumber best_lambda = lambda;
  double best_res = res;

  FlopCounts flops_total;
  for (int k = 1; k <= cfg.k_max; ++k) {
    DQVector u;
    bool singular = false;
    {
      FlopScope scope;
      try {
        u = backend.solve(lambda, v);
      } catch (const Error& e) {
        if (e.code() != Errc::singular) throw;
        singular = true;
      }
      flops_total += scope.counts();
    }
    if (singular) {
      // The shift collided with an exact eigenvalue. If the current iterate
      // is already essentially converged, accept it; otherwise report the
      // best iterate without claiming convergence.
      out.iterations = k;
      out.converged = (res <= 10.0 * stop);
      break;
    }
    v = normalize_two(u);
    lambda = rayleigh_quotient(Q, v);
    res = eigen_residual(Q, lambda, v);
    out.iterations = k;
    out.residual_history.push_back(res);
    if (res < best_res) {
      best_v = v;
      best_lambda = lambda;
      best_res = res;
    }
    if (res <= stop) {
      out.converged = true;
      break;
    }
  }

  out.vector = best_v;
  out.lambda = best_lambda;
  out.residual = eigen_residual(Q, best_lambda, best_v);
  out.flops = flops_total;
  return out;
}

}  // namespace

EigenPair rqi_from(const DQMatrix& Q, const DQVector& v0, const RqiConfig& cfg, Backend backend) {
  if (cfg.k_max < 1 || cfg.delta <= 0.0 || cfg.power_iters < 0) {
    fail(Errc::invalid_argument, "rqi: k_max >= 1, delta > 0, power_iters >= 0 required");
  }
  if (!is_hermitian(Q)) fail(Errc::hermitian_violation, "rqi requires a Hermitian matrix");
  const DQVector v = power_preprocess(Q, v0, cfg.power_iters);
  if (backend == Backend::adjoint) {
    return rqi_loop(Q, v, cfg, AdjointBackend(Q));
  }
  return rqi_loop(Q, v, cfg, BaselineBackend(Q));
}

EigenPair rqi(const DQMatrix& Q, const RqiConfig& cfg, Backend backend) {
  Rng rng(cfg.seed);
  return rqi_from(Q, random_unit_vector(Q.rows(), rng), cfg, backend);
}

DualComplex standardize_right_eigenvalue(const DualQuaternion& lam) {
  DualComplex v = diagonalize(lam).lambda;
  const double tol = 1e-10 * (1.0 + std::abs(v.st));
  if (v.st.imag() > tol) return v;
  if (v.st.imag() < -tol) return v.conj();
  // Real standard part: the sign rule falls to the dual part.
  if (v.du.imag() < 0.0) return v.conj();
  return v;
}

}  // namespace dqlab
