#pragma once

#include <stdexcept>
#include <string>

namespace specgeo {

/// Base class for all errors raised by the verification kernel.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// parsing
struct SyntaxError : Error { using Error::Error; };
struct InhomogeneousError : Error { using Error::Error; };
struct DegreeZeroError : Error { using Error::Error; };

// evaluation / geometry
struct DimensionMismatch : Error { using Error::Error; };
struct ZeroLevelError : Error { using Error::Error; };
struct NonpositiveLevelError : Error { using Error::Error; };
struct ConeExitError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct ImproperConeError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NullBasePointError : Error { using Error::Error; };
struct DegenerateMetricError : Error { using Error::Error; };

// algebra construction
struct NotIsometricError : Error { using Error::Error; };

// catalog
struct UnimplementedEntry : Error { using Error::Error; };

/// Raised when independent computation routes disagree.  Signals an
/// implementation bug, never bad input.
struct RouteMismatchError : Error { using Error::Error; };

} // namespace specgeo
