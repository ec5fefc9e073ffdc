#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgeo {

// Failure categories. The CLI maps these onto exit codes, so keep the
// split between input problems and numerical admissibility problems.
enum class ErrorKind {
  Domain,          // argument outside its mathematical domain (T <= 0, t < 0, N < 2)
  Validation,      // malformed object (non-Hermitian H, bad trace, bad config)
  Shape,           // dimension mismatch
  Precondition,    // structural precondition (open loop, wrong N)
  Stratum,         // rank deficiency / pure state where full rank is needed
  CentralState,    // state at (or too close to) the maximally mixed state
  Degeneracy,      // band crossing or degenerate spectrum
  IllConditioned,  // vanishing overlap between consecutive loop samples
  Admissibility,   // mesh too coarse
  Stability        // step size beyond the integrator's stability guard
};

std::string_view to_string(ErrorKind kind) noexcept;

// True for kinds that describe a numerically inadmissible input rather
// than a malformed one.
bool is_numerical(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace qgeo
