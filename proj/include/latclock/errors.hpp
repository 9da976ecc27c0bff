#pragma once

#include <stdexcept>

// Library error types. Everything derives from a std exception so callers
// that do not care about the distinction can catch std::exception.

namespace latclock {

struct NotHermitianError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidDensityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LayerOutOfRangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct TraceNotZeroError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptySampleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonPositiveInputError : std::domain_error {
  using std::domain_error::domain_error;
};

struct SingleLayerNoDivergenceError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonPositiveWavelengthError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace latclock
