#pragma once

#include <complex>
#include <cstdint>

namespace dqlab {

// Real floating-point operation tallies. Complex arithmetic expands with the
// usual accounting: one complex addition costs 2 real additions, one complex
// multiplication 4 multiplications and 2 additions, one complex division
// 6 multiplications, 3 additions and 2 divisions.
struct FlopCounts {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t divs = 0;
  std::uint64_t sqrts = 0;
  std::uint64_t factorizations = 0;

  std::uint64_t total() const { return adds + muls + divs + sqrts; }

  FlopCounts& operator+=(const FlopCounts& o) {
    adds += o.adds;
    muls += o.muls;
    divs += o.divs;
    sqrts += o.sqrts;
    factorizations += o.factorizations;
    return *this;
  }
};

namespace flops {

namespace detail {
inline thread_local FlopCounts* active = nullptr;
}

inline bool counting() { return detail::active != nullptr; }

inline void tally_real(std::uint64_t adds, std::uint64_t muls, std::uint64_t divs = 0,
                       std::uint64_t sqrts = 0) {
  if (FlopCounts* c = detail::active) {
    c->adds += adds;
    c->muls += muls;
    c->divs += divs;
    c->sqrts += sqrts;
  }
}

inline void tally_cadd(std::uint64_t n) { tally_real(2 * n, 0); }
inline void tally_cmul(std::uint64_t n) { tally_real(2 * n, 4 * n); }
inline void tally_cdiv(std::uint64_t n) { tally_real(3 * n, 6 * n, 2 * n); }
inline void tally_factorization() {
  if (FlopCounts* c = detail::active) ++c->factorizations;
}

// Counted scalar helpers for code that works one operation at a time.
inline std::complex<double> cmul(std::complex<double> a, std::complex<double> b) {
  tally_cmul(1);
  return a * b;
}
inline std::complex<double> cdiv(std::complex<double> a, std::complex<double> b) {
  tally_cdiv(1);
  return a / b;
}
inline std::complex<double> cadd(std::complex<double> a, std::complex<double> b) {
  tally_cadd(1);
  return a + b;
}

}  // namespace flops

// RAII accumulation context. Scopes nest; a closing scope folds its counts
// into the enclosing one so outer callers see totals.
class FlopScope {
 public:
  FlopScope() : prev_(flops::detail::active) { flops::detail::active = &counts_; }
  ~FlopScope() {
    flops::detail::active = prev_;
    if (prev_) *prev_ += counts_;
  }
  FlopScope(const FlopScope&) = delete;
  FlopScope& operator=(const FlopScope&) = delete;

  const FlopCounts& counts() const { return counts_; }

 private:
  FlopCounts counts_;
  FlopCounts* prev_;
};

}  // namespace dqlab
