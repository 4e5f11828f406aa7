#pragma once

#include <stdexcept>
#include <string>

namespace projcert {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidDescriptor : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// FinitelyGeneratedCone whose generators violate the pairwise
// orthogonal-or-antipodal condition has no closed-form projector.
struct UnsupportedExactProjection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidWeights : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotACone : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroVector : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct WrongDimension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonSquare : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DidNotConverge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedFunction : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnknownFixture : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace projcert
