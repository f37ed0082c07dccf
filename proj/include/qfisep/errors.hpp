#pragma once

#include <stdexcept>
#include <string>

namespace qfisep {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QFISEP_DEFINE_ERROR(Name)                \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what)       \
        : Error(#Name ": " + what) {}            \
  }

QFISEP_DEFINE_ERROR(NonHermitianInput);
QFISEP_DEFINE_ERROR(ConvergenceFailure);
QFISEP_DEFINE_ERROR(InvalidState);
QFISEP_DEFINE_ERROR(DimensionMismatch);
QFISEP_DEFINE_ERROR(SizeMismatch);
QFISEP_DEFINE_ERROR(EmptyObservableSet);
QFISEP_DEFINE_ERROR(InvalidDimension);
QFISEP_DEFINE_ERROR(UnsupportedDimension);
QFISEP_DEFINE_ERROR(NotAFiducial);
QFISEP_DEFINE_ERROR(InvalidVector);
QFISEP_DEFINE_ERROR(NotSIC);
QFISEP_DEFINE_ERROR(NotLOO);
QFISEP_DEFINE_ERROR(NotOrthogonal);
QFISEP_DEFINE_ERROR(ParameterOutOfRange);
QFISEP_DEFINE_ERROR(InvalidRank);
QFISEP_DEFINE_ERROR(UnknownBound);

#undef QFISEP_DEFINE_ERROR

/// Raised by threshold search when the violation indicator switches back
/// from violated to unviolated along the scan grid.
class NonMonotoneViolation : public Error {
 public:
  NonMonotoneViolation(double segment_start, double segment_end)
      : Error("NonMonotoneViolation: violation indicator not monotone on [" +
              std::to_string(segment_start) + ", " +
              std::to_string(segment_end) + "]"),
        start_(segment_start),
        end_(segment_end) {}

  double segment_start() const noexcept { return start_; }
  double segment_end() const noexcept { return end_; }

 private:
  double start_;
  double end_;
};

}  // namespace qfisep
