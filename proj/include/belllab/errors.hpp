#ifndef BELLLAB_ERRORS_HPP
#define BELLLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace belllab {

/** Base class of every error thrown by this library. */
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** A probability-space weight is negative. */
class NegativeWeight : public Error {
  public:
    explicit NegativeWeight(const std::string& what) : Error(what) {}
};

/** Weights do not sum to one / a state vector is not unit norm. */
class NotNormalized : public Error {
  public:
    explicit NotNormalized(const std::string& what) : Error(what) {}
};

/** A random variable is defined on a different number of atoms than the space. */
class DimensionMismatch : public Error {
  public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/** Conditioning on an event of probability zero; the conditional is undefined. */
class ZeroConditioningEvent : public Error {
  public:
    explicit ZeroConditioningEvent(const std::string& what) : Error(what) {}
};

/** An angle argument is NaN or infinite. */
class NonFiniteAngle : public Error {
  public:
    explicit NonFiniteAngle(const std::string& what) : Error(what) {}
};

/** Collapse onto an outcome whose amplitude is (numerically) zero. */
class ZeroAmplitudeOutcome : public Error {
  public:
    explicit ZeroAmplitudeOutcome(const std::string& what) : Error(what) {}
};

/** A value lies outside its admissible range (e.g. a probability outside [0,1]). */
class OutOfRange : public Error {
  public:
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

/** An interval or grid specification is invalid. */
class BadRange : public Error {
  public:
    explicit BadRange(const std::string& what) : Error(what) {}
};

/** A tolerance argument is zero or negative. */
class NonPositiveTolerance : public Error {
  public:
    explicit NonPositiveTolerance(const std::string& what) : Error(what) {}
};

/** A pairwise target is outside [0, 1/2]. */
class OutOfRangeTarget : public Error {
  public:
    explicit OutOfRangeTarget(const std::string& what) : Error(what) {}
};

/** A conditional frequency was requested for a branch with no observations. */
class EmptyConditionRow : public Error {
  public:
    explicit EmptyConditionRow(const std::string& what) : Error(what) {}
};

}  // namespace belllab

#endif  // BELLLAB_ERRORS_HPP
