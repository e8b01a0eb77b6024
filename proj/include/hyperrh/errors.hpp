#pragma once
#include <stdexcept>
#include <string>

namespace hyperrh {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMultivector : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonInvertibleConstant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OriginSingularity : std::domain_error {
  using std::domain_error::domain_error;
};

struct OddDimension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TooCloseToBoundary : std::domain_error {
  using std::domain_error::domain_error;
};

struct HypothesisViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hyperrh
