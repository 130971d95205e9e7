#pragma once

#include <stdexcept>
#include <string>

namespace expinterp {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- operator construction ---
struct TooShort : Error {
  using Error::Error;
};
struct ZeroLeadingCoefficient : Error {
  using Error::Error;
};

// --- root extraction ---
struct ClusterAmbiguity : Error {
  using Error::Error;
};
struct ReconstructionFailure : Error {
  using Error::Error;
};
struct RootSolverFailure : Error {
  using Error::Error;
};

// --- exponential polynomial evaluation ---
struct RealificationFailure : Error {
  using Error::Error;
};

// --- characteristic solution ---
struct SeriesInversionFailure : Error {
  using Error::Error;
};
struct StepFailure : Error {
  using Error::Error;
};

// --- interpolation systems ---
struct EmptySystem : Error {
  using Error::Error;
};
struct NonPositiveMultiplicity : Error {
  using Error::Error;
};
struct NonIncreasingNodes : Error {
  using Error::Error;
};
struct SingularSystem : Error {
  using Error::Error;
};
struct MissingData : Error {
  using Error::Error;
};

// --- closed forms / corollaries ---
struct DegenerateParameters : Error {
  using Error::Error;
};

// --- function evaluation ---
struct EvaluatorFailure : Error {
  using Error::Error;
};

}  // namespace expinterp
