#pragma once

#include <stdexcept>
#include <string>

namespace dqlab {

// Failure categories surfaced by the library. The CLI maps these onto its
// exit-code contract: input/config problems -> 2, infeasible problem data -> 3,
// numerically singular systems -> 4.
enum class Errc {
  invalid_argument,
  dimension_mismatch,
  undefined_division,
  singular,
  not_positive_definite,
  not_in_adjoint_image,
  hermitian_violation,
  degenerate_start,
  c2_degenerate,
  invariant_mismatch,
  real_axis,
  inconsistent,
  infeasible_sparsity,
  non_unit,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::undefined_division: return "undefined-division";
    case Errc::singular: return "singular";
    case Errc::not_positive_definite: return "not-positive-definite";
    case Errc::not_in_adjoint_image: return "not-in-adjoint-image";
    case Errc::hermitian_violation: return "hermitian-violation";
    case Errc::degenerate_start: return "degenerate-start";
    case Errc::c2_degenerate: return "c2-degenerate";
    case Errc::invariant_mismatch: return "invariant-mismatch";
    case Errc::real_axis: return "real-axis";
    case Errc::inconsistent: return "inconsistent";
    case Errc::infeasible_sparsity: return "infeasible-sparsity";
    case Errc::non_unit: return "non-unit";
  }
  return "unknown";
}

}  // namespace dqlab
