#pragma once

#include <cmath>
#include <compare>
#include <complex>
#include <cstdio>
#include <string>

#include "dqlab/error.hpp"

namespace dqlab {

using Complex = std::complex<double>;

// Standard parts below this magnitude are treated as zero when deciding
// appreciability; calibration inputs arrive from floating arithmetic, so an
// exact-zero test would be useless.
inline constexpr double kAppreciableTol = 1e-12;

enum class Ordering { less, equal, greater };

// ---------------------------------------------------------------------------
// Dual numbers: a_st + a_du * eps with eps^2 = 0.
// ---------------------------------------------------------------------------

struct DualNumber {
  double st = 0.0;
  double du = 0.0;

  constexpr DualNumber() = default;
  constexpr DualNumber(double s, double d = 0.0) : st(s), du(d) {}

  bool appreciable() const { return std::abs(st) > kAppreciableTol; }

  friend constexpr DualNumber operator+(DualNumber a, DualNumber b) {
    return {a.st + b.st, a.du + b.du};
  }
  friend constexpr DualNumber operator-(DualNumber a, DualNumber b) {
    return {a.st - b.st, a.du - b.du};
  }
  friend constexpr DualNumber operator-(DualNumber a) { return {-a.st, -a.du}; }
  friend constexpr DualNumber operator*(DualNumber a, DualNumber b) {
    return {a.st * b.st, a.st * b.du + a.du * b.st};
  }
  friend constexpr DualNumber operator*(double s, DualNumber a) { return {s * a.st, s * a.du}; }
  friend constexpr DualNumber operator*(DualNumber a, double s) { return s * a; }
};

// Division with both branches; `c_choice` fills the free dual coefficient of
// the degenerate (both standard parts zero) branch.
inline DualNumber dual_div(DualNumber a, DualNumber b, double c_choice = 0.0) {
  if (std::abs(b.st) > kAppreciableTol) {
    return {a.st / b.st, a.du / b.st - a.st * b.du / (b.st * b.st)};
  }
  if (std::abs(a.st) <= kAppreciableTol && std::abs(b.du) > kAppreciableTol) {
    return {a.du / b.du, c_choice};
  }
  fail(Errc::undefined_division, "dual division undefined: standard part of divisor is zero");
}

inline DualNumber operator/(DualNumber a, DualNumber b) { return dual_div(a, b); }

inline DualNumber dual_abs(DualNumber a) {
  if (a.st != 0.0) return {std::abs(a.st), (a.st > 0.0 ? a.du : -a.du)};
  return {0.0, std::abs(a.du)};
}

// Total lexicographic order: standard part first, dual part breaks ties.
inline Ordering dual_compare(DualNumber a, DualNumber b) {
  if (a.st < b.st) return Ordering::less;
  if (a.st > b.st) return Ordering::greater;
  if (a.du < b.du) return Ordering::less;
  if (a.du > b.du) return Ordering::greater;
  return Ordering::equal;
}

// Defined for positive standard part (and exact zero); norms are the only
// consumer, so negative radicands are hard errors rather than NaNs.
inline DualNumber dual_sqrt(DualNumber a) {
  if (a.st > 0.0) {
    const double r = std::sqrt(a.st);
    return {r, a.du / (2.0 * r)};
  }
  if (a.st == 0.0 && a.du == 0.0) return {0.0, 0.0};
  fail(Errc::invalid_argument, "dual_sqrt requires positive standard part or exact zero");
}

// ---------------------------------------------------------------------------
// Dual complex numbers.
// ---------------------------------------------------------------------------

struct DualComplex {
  Complex st{0.0, 0.0};
  Complex du{0.0, 0.0};

  DualComplex() = default;
  DualComplex(Complex s, Complex d = Complex{}) : st(s), du(d) {}
  explicit DualComplex(DualNumber d) : st(d.st, 0.0), du(d.du, 0.0) {}

  bool appreciable() const { return std::abs(st) > kAppreciableTol; }

  DualComplex conj() const { return {std::conj(st), std::conj(du)}; }

  friend DualComplex operator+(const DualComplex& a, const DualComplex& b) {
    return {a.st + b.st, a.du + b.du};
  }
  friend DualComplex operator-(const DualComplex& a, const DualComplex& b) {
    return {a.st - b.st, a.du - b.du};
  }
  friend DualComplex operator-(const DualComplex& a) { return {-a.st, -a.du}; }
  friend DualComplex operator*(const DualComplex& a, const DualComplex& b) {
    return {a.st * b.st, a.st * b.du + a.du * b.st};
  }
};

inline DualComplex dual_div(const DualComplex& a, const DualComplex& b, Complex c_choice = {}) {
  if (std::abs(b.st) > kAppreciableTol) {
    return {a.st / b.st, a.du / b.st - a.st * b.du / (b.st * b.st)};
  }
  if (std::abs(a.st) <= kAppreciableTol && std::abs(b.du) > kAppreciableTol) {
    return {a.du / b.du, c_choice};
  }
  fail(Errc::undefined_division, "dual complex division undefined");
}

inline DualComplex operator/(const DualComplex& a, const DualComplex& b) { return dual_div(a, b); }

// ---------------------------------------------------------------------------
// Quaternions q0 + q1 i + q2 j + q3 k  (Hamilton convention: ij=k, jk=i, ki=j).
// ---------------------------------------------------------------------------

struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion identity() { return {1, 0, 0, 0}; }

  // Complex split q = c1 + c2 j with c1 = w + x i, c2 = y + z i.
  Complex c1() const { return {w, x}; }
  Complex c2() const { return {y, z}; }
  static Quaternion from_split(Complex a, Complex b) {
    return {a.real(), a.imag(), b.real(), b.imag()};
  }

  friend constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& p) { return {-p.w, -p.x, -p.y, -p.z}; }
  friend constexpr Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }
  friend constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }

  // Hamilton product [p0 q0 - p.q, p0 q + q0 p + p x q]; non-commutative.
  friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
  }
};

inline constexpr Quaternion quat_conj(const Quaternion& p) { return {p.w, -p.x, -p.y, -p.z}; }
inline double quat_norm2(const Quaternion& p) {
  return p.w * p.w + p.x * p.x + p.y * p.y + p.z * p.z;
}
inline double quat_abs(const Quaternion& p) { return std::sqrt(quat_norm2(p)); }
// Scalar (real) part extractor sc(p) = (p + p*)/2.
inline constexpr double quat_sc(const Quaternion& p) { return p.w; }

inline Quaternion quat_inverse(const Quaternion& p) {
  const double n2 = quat_norm2(p);
  if (n2 <= kAppreciableTol * kAppreciableTol) {
    fail(Errc::singular, "inverse of (near-)zero quaternion");
  }
  return (1.0 / n2) * quat_conj(p);
}

// ---------------------------------------------------------------------------
// Dual quaternions p_st + p_du * eps.
// ---------------------------------------------------------------------------

struct DualQuaternion {
  Quaternion st;
  Quaternion du;

  constexpr DualQuaternion() = default;
  constexpr DualQuaternion(const Quaternion& s, const Quaternion& d = {}) : st(s), du(d) {}

  static constexpr DualQuaternion identity() { return {Quaternion::identity(), {}}; }

  bool appreciable() const { return quat_abs(st) > kAppreciableTol; }

  friend constexpr DualQuaternion operator+(const DualQuaternion& p, const DualQuaternion& q) {
    return {p.st + q.st, p.du + q.du};
  }
  friend constexpr DualQuaternion operator-(const DualQuaternion& p, const DualQuaternion& q) {
    return {p.st - q.st, p.du - q.du};
  }
  friend constexpr DualQuaternion operator-(const DualQuaternion& p) { return {-p.st, -p.du}; }
  friend constexpr DualQuaternion operator*(double s, const DualQuaternion& q) {
    return {s * q.st, s * q.du};
  }
  friend constexpr DualQuaternion operator*(const DualQuaternion& p, const DualQuaternion& q) {
    return {p.st * q.st, p.st * q.du + p.du * q.st};
  }
};

inline constexpr DualQuaternion dq_conj(const DualQuaternion& p) {
  return {quat_conj(p.st), quat_conj(p.du)};
}

// Dual-number absolute value; the standard-free branch degrades to |p_du| eps.
// Unit dual quaternions are exactly the ones with dq_abs == 1.
inline DualNumber dq_abs(const DualQuaternion& p) {
  const double nst = quat_abs(p.st);
  if (nst > kAppreciableTol) {
    return {nst, quat_sc(quat_conj(p.st) * p.du) / nst};
  }
  return {0.0, quat_abs(p.du)};
}

// Real magnitude sqrt(|p_st|^2 + |p_du|^2).
inline double dq_mag2(const DualQuaternion& p) {
  return std::sqrt(quat_norm2(p.st) + quat_norm2(p.du));
}

inline DualQuaternion dq_inverse(const DualQuaternion& p) {
  if (!p.appreciable()) fail(Errc::singular, "inverse of non-appreciable dual quaternion");
  const Quaternion inv_st = quat_inverse(p.st);
  return {inv_st, -(inv_st * p.du * inv_st)};
}

inline DualQuaternion dq_div(const DualQuaternion& p, const DualQuaternion& q,
                             const Quaternion& c_choice = {}) {
  if (q.appreciable()) {
    const Quaternion qi = quat_inverse(q.st);
    // p/q per the componentwise rule: p_st/q_st + (p_du/q_st - p_st q_du / q_st^2) eps,
    // all quotients taken as right-multiplication by q_st^{-1}.
    return {p.st * qi, p.du * qi - p.st * qi * q.du * qi};
  }
  if (!p.appreciable() && quat_abs(q.du) > kAppreciableTol) {
    return {p.du * quat_inverse(q.du), c_choice};
  }
  fail(Errc::undefined_division, "dual quaternion division undefined");
}

inline bool dq_is_unit(const DualQuaternion& p, double tol = 1e-8) {
  const DualNumber a = dq_abs(p);
  return std::abs(a.st - 1.0) <= tol && std::abs(a.du) <= tol;
}

// Scale by a dual number (dual numbers commute with dual quaternions).
inline DualQuaternion operator*(const DualQuaternion& p, DualNumber d) {
  return {d.st * p.st, d.st * p.du + d.du * p.st};
}
inline DualQuaternion operator*(DualNumber d, const DualQuaternion& p) { return p * d; }

// Embed a dual complex scalar as a dual quaternion (i-axis).
inline DualQuaternion embed(const DualComplex& a) {
  return {Quaternion{a.st.real(), a.st.imag(), 0, 0}, Quaternion{a.du.real(), a.du.imag(), 0, 0}};
}

// Complex split of a dual quaternion: a = a1 + a2 j + (a3 + a4 j) eps.
struct DqSplit {
  Complex a1, a2, a3, a4;
};
inline DqSplit dq_split(const DualQuaternion& p) {
  return {p.st.c1(), p.st.c2(), p.du.c1(), p.du.c2()};
}
inline DualQuaternion dq_from_split(const DqSplit& s) {
  return {Quaternion::from_split(s.a1, s.a2), Quaternion::from_split(s.a3, s.a4)};
}

// ---------------------------------------------------------------------------
// Display helpers ("a+bi+cj+dk + (e+fi+gj+hk)e" with 4 decimals).
// ---------------------------------------------------------------------------

inline std::string to_string(const Quaternion& q) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.4f%+.4fi%+.4fj%+.4fk", q.w, q.x, q.y, q.z);
  return buf;
}

inline std::string to_string(const DualQuaternion& p) {
  return to_string(p.st) + " + (" + to_string(p.du) + ")e";
}

inline std::string to_string(DualNumber d) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.4f%+.4fe", d.st, d.du);
  return buf;
}

inline std::string to_string(const DualComplex& d) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "(%.4f%+.4fi) + (%.4f%+.4fi)e", d.st.real(), d.st.imag(),
                d.du.real(), d.du.imag());
  return buf;
}

}  // namespace dqlab
