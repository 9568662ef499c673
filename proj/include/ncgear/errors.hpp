#pragma once

#include <stdexcept>
#include <string>

namespace ncgear {

/// Base class for all synthesis errors.
class GearError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The moving line family is (locally) stationary: no envelope point exists.
class SingularFamily : public GearError {
  public:
    using GearError::GearError;
};

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureFailure : public GearError {
  public:
    using GearError::GearError;
};

/// A scalar root finder was asked to solve outside its bracket.
class RootNotBracketed : public GearError {
  public:
    using GearError::GearError;
};

/// A flank has no cusp inside the search window. Reported, not fatal.
class NoSingularPoint : public GearError {
  public:
    using GearError::GearError;
};

/// The fillet-center curve has a vanishing tangent; its normal is undefined.
class DegenerateNormal : public GearError {
  public:
    using GearError::GearError;
};

/// A base-curve point lies at infinity (vanishing centrode curvature).
class PointAtInfinity : public GearError {
  public:
    using GearError::GearError;
};

/// A 2D coincidence system did not converge; message names the system.
class SolverDiverged : public GearError {
  public:
    using GearError::GearError;
};

/// The requested tooth geometry is inconsistent (e.g. flank never reaches
/// the addendum curve).
class InvalidGeometry : public GearError {
  public:
    using GearError::GearError;
};

/// Assembled profile endpoints do not meet within the geometric tolerance.
class ClosureFailure : public GearError {
  public:
    using GearError::GearError;
};

/// Configuration file rejected; message carries the location of the problem.
class ConfigError : public GearError {
  public:
    using GearError::GearError;
};

}  // namespace ncgear
