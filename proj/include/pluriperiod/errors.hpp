#pragma once

#include <stdexcept>
#include <string>

namespace pluriperiod {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Möbius evaluation too close to the pole -d/c.
struct NearPole : Error { using Error::Error; };

/// Polynomial operation would exceed the declared degree bound.
struct DegreeOverflow : Error { using Error::Error; };

/// Least-squares node system condition estimate exceeded the cutoff.
struct IllConditioned : Error { using Error::Error; };

/// Geometric construction failed a self-check (relator residual, pairing, ...).
struct ConstructionFailure : Error { using Error::Error; };

/// Orbit enumeration passed the configured element cap.
struct BudgetExceeded : Error { using Error::Error; };

/// Adaptive quadrature could not reach the requested tolerance.
struct ToleranceNotMet : Error { using Error::Error; };

/// Point (or a whole evaluation disk / contour) left the admissible domain.
struct DomainViolation : Error { using Error::Error; };

/// Sampled function is not a polynomial of the expected degree.
struct NotPolynomial : Error { using Error::Error; };

/// Singular-value spectrum has no clear rank gap.
struct RankAmbiguous : Error { using Error::Error; };

/// Operation requires a surface group but another model was supplied.
struct UnsupportedGroup : Error { using Error::Error; };

/// Two derivations of the same quantity disagree by a global sign.
struct SignConventionMismatch : Error { using Error::Error; };

/// Bad CLI / config input.
struct ConfigError : Error { using Error::Error; };

/// Square-root sheet tracking lost continuity along a contour.
struct BranchTrackingFailure : Error { using Error::Error; };

}  // namespace pluriperiod
