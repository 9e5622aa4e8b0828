#pragma once

#include <stdexcept>
#include <string>

namespace eqr {

/// Base class of every numerical failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// log_so3 called on a rotation whose angle is too close to pi.
class AngleNearPi : public Error {
 public:
  using Error::Error;
};

/// Stereographic chart evaluated at (or next to) the antipode of e3.
class ChartSingularity : public Error {
 public:
  using Error::Error;
};

/// Flat output demands zero thrust, so the bearing is undefined.
class FreeFallSingularity : public Error {
 public:
  FreeFallSingularity(const std::string& what, double t) : Error(what), time(t) {}
  double time;
};

/// Schedule queried outside its time grid.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Riccati solution exceeded the blow-up bound.
class RiccatiBlowup : public Error {
 public:
  using Error::Error;
};

}  // namespace eqr
