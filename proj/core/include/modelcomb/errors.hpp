#pragma once

#include <stdexcept>
#include <string>

namespace modelcomb {

struct OversizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooFewPoints : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MarginError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RegionTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InnerTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownKind : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CertificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SumMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptySet : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BasisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace modelcomb
