#pragma once

// Branch-free complex scalar arithmetic for the dense kernels. The standard
// operators route through __muldc3 / __divdc3 for C99 NaN semantics, which
// dominates the factorization inner loops; these match the operation model
// the flop tallies assume (mul: 4m+2a, div: 6m+3a+2d).

#include <complex>

namespace dqlab::detail {

using Cx = std::complex<double>;

inline Cx cmul(Cx a, Cx b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

inline Cx cdiv(Cx a, Cx b) {
  const double den = b.real() * b.real() + b.imag() * b.imag();
  return {(a.real() * b.real() + a.imag() * b.imag()) / den,
          (a.imag() * b.real() - a.real() * b.imag()) / den};
}

}  // namespace dqlab::detail
