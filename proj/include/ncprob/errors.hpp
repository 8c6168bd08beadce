#ifndef NCPROB_ERRORS_HPP
#define NCPROB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncprob {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract argument values.
struct InvalidInputError : Error { using Error::Error; };

// Enumeration or transform order above the configured cap.
struct SizeLimitError : Error { using Error::Error; };

// Moment data admits no probability measure (Hankel condition fails).
struct InvalidMomentSequenceError : Error { using Error::Error; };

// A rational function is not the Cauchy transform of a probability measure.
struct NotAMeasureError : Error { using Error::Error; };

// Operation undefined for the requested flavor.
struct UnsupportedOperationError : Error { using Error::Error; };

// Requested order exceeds what truncated Jacobi data determines.
struct OrderLimitError : Error { using Error::Error; };

// Evaluation outside the validity region (Im z < 1, bad tail value).
struct DomainError : Error { using Error::Error; };

// Quadrature failed to reach the requested tolerance.
struct AccuracyError : Error {
  AccuracyError(const std::string& what, double achieved)
      : Error(what), achieved_tolerance(achieved) {}
  double achieved_tolerance;
};

// A mathematically guaranteed property failed to hold; indicates a bug.
struct InternalInvariantError : Error { using Error::Error; };

}  // namespace ncprob

#endif
