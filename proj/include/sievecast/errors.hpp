#pragma once

#include <stdexcept>
#include <string>

namespace sievecast {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad user input (files, flags, malformed config). Maps to CLI exit code 2.
class InputError : public Error {
public:
  using Error::Error;
};

class LengthMismatch : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// Quadrature Gram matrix of a constructed basis deviates too far from
/// identity; usually a grid that is too coarse or a cascade depth too small.
class GramDefect : public Error {
public:
  using Error::Error;
};

/// A smoothing target point has fewer than two raw observations in its window.
class DegenerateWindow : public Error {
public:
  using Error::Error;
};

class AllZeroVariance : public Error {
public:
  using Error::Error;
};

class TooFewRows : public Error {
public:
  using Error::Error;
};

/// Normal-equations matrix condition number exceeds 1e12; (b, c, p) is too
/// large for the available sample.
class SingularDesign : public Error {
public:
  using Error::Error;
};

class NonPdCovariance : public Error {
public:
  using Error::Error;
};

class NoFeasiblePair : public Error {
public:
  using Error::Error;
};

class LagOutOfRange : public Error {
public:
  using Error::Error;
};

class HistoryTooShort : public Error {
public:
  using Error::Error;
};

class WindowTooSmall : public Error {
public:
  using Error::Error;
};

/// A simulated path left the plausible range; a mis-set DGP parameter.
class ExplosivePath : public Error {
public:
  using Error::Error;
};

class NonPositiveMse : public Error {
public:
  using Error::Error;
};

class DegenerateDenominator : public Error {
public:
  using Error::Error;
};

class EmptySeries : public Error {
public:
  using Error::Error;
};

}  // namespace sievecast
