#include "dqlab/hand_eye.hpp"

#include <algorithm>
#include <cmath>

#include "dqlab/error.hpp"

namespace dqlab {

namespace {

constexpr Quaternion kJ{0, 0, 1, 0};

struct Mat2 {
  Complex a, b, c, d;  // [[a, b], [c, d]]
};

Mat2 adjoint2(Complex a1, Complex a2) { return {a1, a2, -std::conj(a2), std::conj(a1)}; }

Mat2 mul(const Mat2& p, const Mat2& q) {
  return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c,
          p.c * q.b + p.d * q.d};
}

Mat2 conj_transpose(const Mat2& m) {
  return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

// Eigenpair of a 2x2 quaternion-adjoint-structured matrix [[a1, a2],
// [-conj(a2), conj(a1)]]. Eigenvalues are w +- |vec| i; the branch with
// nonnegative imaginary part is returned, with a deterministic phase
// (largest entry real positive). Scalar matrices get the trivial eigenvector.
struct Eig2 {
  Complex lambda;
  Complex v0, v1;
};

Eig2 eig2_adjoint(Complex a1, Complex a2) {
  const double w = a1.real();
  const double vec = std::sqrt(a1.imag() * a1.imag() + std::norm(a2));
  const Complex lambda{w, vec};
  Complex u0 = a2, u1 = lambda - a1;
  const Complex w0 = std::conj(a1) - lambda, w1 = std::conj(a2);
  if (std::norm(w0) + std::norm(w1) > std::norm(u0) + std::norm(u1)) {
    u0 = w0;
    u1 = w1;
  }
  const double nrm = std::sqrt(std::norm(u0) + std::norm(u1));
  if (nrm < 1e-300) return {lambda, Complex{1, 0}, Complex{0, 0}};
  u0 /= nrm;
  u1 /= nrm;
  const Complex piv = (std::abs(u0) >= std::abs(u1)) ? u0 : u1;
  const Complex phase = std::conj(piv) / std::abs(piv);
  return {lambda, u0 * phase, u1 * phase};
}

bool nearly_real(Complex lambda1) {
  return std::abs(lambda1.imag()) <= 1e-10 * (1.0 + std::abs(lambda1));
}

double pair_residual(const DualQuaternion& a, const DualQuaternion& q, const DualQuaternion& b) {
  return dq_mag2(a * q - q * b);
}

double input_scale(std::initializer_list<DualQuaternion> qs) {
  double s = 1.0;
  for (const auto& q : qs) s = std::max(s, dq_mag2(q));
  return s;
}

}  // namespace

void validate_pose(const Pose& pose, double tol) {
  const auto& R = pose.R;
  // R^T R == I
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += R[k * 3 + i] * R[k * 3 + j];
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > tol) {
        fail(Errc::invalid_argument, "pose rotation is not orthonormal");
      }
    }
  }
  const double det = R[0] * (R[4] * R[8] - R[5] * R[7]) - R[1] * (R[3] * R[8] - R[5] * R[6]) +
                     R[2] * (R[3] * R[7] - R[4] * R[6]);
  if (std::abs(det - 1.0) > tol) fail(Errc::invalid_argument, "pose rotation has det != +1");
}

Diagonalization diagonalize(const DualQuaternion& a) {
  const DqSplit s = dq_split(a);

  // Standard-part eigenvalue of the 2x2 adjoint; nonnegative-imag branch.
  const Eig2 e1 = eig2_adjoint(s.a1, s.a2);

  if (!nearly_real(e1.lambda)) {
    // X = [[x1, x2], [-conj(x2), conj(x1)]] built from the unit eigenvector
    // [x1, -conj(x2)]^T of the standard part.
    const Complex x1 = e1.v0;
    const Complex x2 = -std::conj(e1.v1);
    const Mat2 X = adjoint2(x1, x2);
    const Mat2 A2 = adjoint2(s.a3, s.a4);
    const Mat2 M = mul(mul(conj_transpose(X), A2), X);
    const Complex lam2 = M.a;
    const Complex z = M.b;
    const Complex denom = e1.lambda - std::conj(e1.lambda);
    const Mat2 Z{Complex{}, -z / denom, -std::conj(z) / denom, Complex{}};
    const Mat2 XZ = mul(X, Z);
    Diagonalization out;
    out.q = dq_from_split({X.a, X.b, XZ.a, XZ.b});
    out.lambda = DualComplex{e1.lambda, lam2};
    return out;
  }

  // Real standard eigenvalue: the standard part must already be the real
  // scalar lambda1 (its adjoint has eigenvalues w +- |vec| i, so |vec| ~ 0);
  // anything else means the input was out of theory.
  const double vec_defect = std::sqrt(std::max(0.0, quat_norm2(a.st) - a.st.w * a.st.w));
  if (vec_defect > 1e-8 * (1.0 + std::abs(a.st.w))) {
    fail(Errc::inconsistent, "diagonalize: real-eigenvalue branch with non-scalar standard part");
  }
  const Eig2 e2 = eig2_adjoint(s.a3, s.a4);
  const Complex y1 = e2.v0;
  const Complex y2 = -std::conj(e2.v1);
  Diagonalization out;
  out.q = dq_from_split({y1, y2, Complex{}, Complex{}});
  out.lambda = DualComplex{Complex{a.st.w, 0.0}, e2.lambda};
  return out;
}

AxxbSolution axxb_solve(const DualQuaternion& a, const DualQuaternion& b, const DualQuaternion& c,
                        const DualQuaternion& d, double inconsistency_tol) {
  Diagonalization da = diagonalize(a);
  Diagonalization db = diagonalize(b);

  // Common standard form: if b diagonalized to the conjugate value, rotate its
  // frame by j, which conjugates the dual complex form.
  const auto dist = [](const DualComplex& u, const DualComplex& v) {
    return std::abs(u.st - v.st) + std::abs(u.du - v.du);
  };
  if (dist(db.lambda, da.lambda.conj()) < dist(db.lambda, da.lambda)) {
    db.q = db.q * DualQuaternion{kJ};
    db.lambda = db.lambda.conj();
  }

  const DualQuaternion e = dq_conj(da.q) * c * da.q;
  const DualQuaternion f = dq_conj(db.q) * d * db.q;
  const DqSplit es = dq_split(e);
  const DqSplit fs = dq_split(f);

  const double degenerate_tol = 1e-10 * input_scale({a, b, c, d});
  if (std::abs(es.a2) < degenerate_tol || std::abs(fs.a2) < degenerate_tol) {
    fail(Errc::c2_degenerate,
         "axxb: second equation commutes with the first's axis (c2 = 0); no closed form");
  }

  const Complex th1 = std::conj(std::sqrt(fs.a2 / es.a2));
  const Complex th2 =
      (std::conj(fs.a4) - th1 * th1 * std::conj(es.a4)) / (2.0 * th1 * std::conj(es.a2));

  AxxbSolution sol;
  sol.q_plus = da.q * embed(DualComplex{th1, th2}) * dq_conj(db.q);
  sol.q_minus = -sol.q_plus;
  sol.residual_ab = pair_residual(a, sol.q_plus, b);
  sol.residual_cd = pair_residual(c, sol.q_plus, d);
  const double tol = inconsistency_tol * input_scale({a, b, c, d});
  if (sol.residual_ab > tol || sol.residual_cd > tol) {
    fail(Errc::inconsistent, "axxb: no common solution (residual above tolerance)");
  }
  return sol;
}

std::pair<DualQuaternion, DualQuaternion> AxybFamily::apply(const DualQuaternion& m) const {
  return {x * g_lambda * m * dq_conj(y), x * m * g_mu * dq_conj(y)};
}

AxybFamily axyb_family(const DualQuaternion& a, const DualQuaternion& b) {
  const Diagonalization da = diagonalize(a);
  const Diagonalization db = diagonalize(b);
  if (nearly_real(da.lambda.st) || nearly_real(db.lambda.st)) {
    fail(Errc::real_axis, "axyb: standard parts must have non-real standard eigenvalues");
  }

  const Complex l1 = da.lambda.st, l2 = da.lambda.du;
  const Complex m1 = db.lambda.st, m2 = db.lambda.du;
  const double rot_a = std::abs(l1), rot_b = std::abs(m1);
  const double pitch_a = (l2 * std::conj(l1)).real();
  const double pitch_b = (m2 * std::conj(m1)).real();
  const double tol = 1e-6 * std::max(1.0, std::max(dq_mag2(a), dq_mag2(b)));
  if (std::abs(rot_a - rot_b) > tol || std::abs(pitch_a - pitch_b) > tol) {
    fail(Errc::invariant_mismatch,
         "axyb: screw invariants differ (|lambda1| or Re(lambda2 conj(lambda1))); no solution");
  }

  AxybFamily fam;
  fam.x = da.q;
  fam.y = db.q;
  fam.lambda = da.lambda;
  fam.mu = db.lambda;
  const Complex ul = std::conj(l1) / rot_a;
  const Complex wl{0.0, -(l2 * std::conj(l1) / (rot_a * rot_a)).imag()};
  fam.g_lambda = embed(DualComplex{ul, ul * wl});
  const Complex um = std::conj(m1) / rot_b;
  const Complex wm{0.0, -(m2 * std::conj(m1) / (rot_b * rot_b)).imag()};
  fam.g_mu = embed(DualComplex{um, wm * um});
  return fam;
}

AxybSolution axyb_solve(const std::vector<std::pair<DualQuaternion, DualQuaternion>>& pairs) {
  if (pairs.size() < 2) {
    fail(Errc::invalid_argument, "axyb_solve needs the family pair plus supplementary pairs");
  }
  const AxybFamily fam = axyb_family(pairs[0].first, pairs[0].second);
  const DualQuaternion xc = dq_conj(fam.x);
  const DualQuaternion yc = dq_conj(fam.y);

  // Reduced AX=XB data: c_k m = m d_k must hold for the family parameter m.
  std::vector<std::pair<DualQuaternion, DualQuaternion>> reduced;
  reduced.reserve(pairs.size() - 1);
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    reduced.push_back({xc * pairs[k].first * fam.x * fam.g_lambda,
                       fam.g_mu * (yc * pairs[k].second * fam.y)});
  }
  // Theorem form needs two equations; a single supplementary pair self-pairs
  // and fails the c2 != 0 hypothesis, which is the honest outcome (the
  // two-pairs-total problem leaves a two-parameter solution family).
  const auto& eq0 = reduced[0];
  const auto& eq1 = reduced.size() > 1 ? reduced[1] : reduced[0];
  const AxxbSolution m_sol = axxb_solve(eq0.first, eq0.second, eq1.first, eq1.second);

  AxybSolution sol;
  sol.m = m_sol.q_plus;
  auto qp = fam.apply(sol.m);
  sol.q = qp.first;
  sol.p = qp.second;
  double scale = 1.0;
  for (const auto& [ak, bk] : pairs) {
    scale = std::max({scale, dq_mag2(ak), dq_mag2(bk)});
    sol.max_residual = std::max(sol.max_residual, dq_mag2(ak * sol.q - sol.p * bk));
  }
  if (sol.max_residual > 2e-3 * scale) {
    fail(Errc::inconsistent, "axyb: a measurement pair is inconsistent with the recovered motion");
  }
  return sol;
}

DualQuaternion pose_to_dq(const Pose& pose) {
  validate_pose(pose);
  const auto& R = pose.R;
  const double tr = R[0] + R[4] + R[8];
  double w, x, y, z;
  // Shepperd branch selection: largest of trace and diagonal entries keeps
  // the divisor away from zero, including at rotation angle pi.
  if (tr >= R[0] && tr >= R[4] && tr >= R[8]) {
    const double s = std::sqrt(1.0 + tr) * 2.0;
    w = 0.25 * s;
    x = (R[7] - R[5]) / s;
    y = (R[2] - R[6]) / s;
    z = (R[3] - R[1]) / s;
  } else if (R[0] >= R[4] && R[0] >= R[8]) {
    const double s = std::sqrt(1.0 + R[0] - R[4] - R[8]) * 2.0;
    w = (R[7] - R[5]) / s;
    x = 0.25 * s;
    y = (R[1] + R[3]) / s;
    z = (R[2] + R[6]) / s;
  } else if (R[4] >= R[8]) {
    const double s = std::sqrt(1.0 + R[4] - R[0] - R[8]) * 2.0;
    w = (R[2] - R[6]) / s;
    x = (R[1] + R[3]) / s;
    y = 0.25 * s;
    z = (R[5] + R[7]) / s;
  } else {
    const double s = std::sqrt(1.0 + R[8] - R[0] - R[4]) * 2.0;
    w = (R[3] - R[1]) / s;
    x = (R[2] + R[6]) / s;
    y = (R[5] + R[7]) / s;
    z = 0.25 * s;
  }
  Quaternion qst{w, x, y, z};
  const double nrm = quat_abs(qst);
  qst = (1.0 / nrm) * qst;
  // Global sign: first component of magnitude above threshold made positive.
  const double comps[4] = {qst.w, qst.x, qst.y, qst.z};
  for (double cmp : comps) {
    if (std::abs(cmp) > 1e-12) {
      if (cmp < 0.0) qst = -qst;
      break;
    }
  }
  const Quaternion tq{0.0, pose.t[0], pose.t[1], pose.t[2]};
  return DualQuaternion{qst, 0.5 * (tq * qst)};
}

Pose dq_to_pose(const DualQuaternion& q, double unit_tol) {
  if (!dq_is_unit(q, unit_tol)) fail(Errc::non_unit, "dq_to_pose requires a unit dual quaternion");
  const double w = q.st.w, x = q.st.x, y = q.st.y, z = q.st.z;
  Pose pose;
  pose.R = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
            2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
            2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
  const Quaternion tq = 2.0 * (q.du * quat_conj(q.st));
  pose.t = {tq.x, tq.y, tq.z};
  return pose;
}

}  // namespace dqlab
