#pragma once

#include <stdexcept>

namespace evid {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NegativeMass : Error { using Error::Error; };
struct NonNormalized : Error { using Error::Error; };
struct DuplicateLabel : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct UnknownObservation : UnknownLabel { using UnknownLabel::UnknownLabel; };
struct UnknownHypothesis : UnknownLabel { using UnknownLabel::UnknownLabel; };
struct MismatchedSupport : Error { using Error::Error; };
struct TotalConflict : Error { using Error::Error; };
struct ZeroProbabilityObservation : Error { using Error::Error; };
struct InvalidSpace : Error { using Error::Error; };
struct CorrelatedSpace : Error { using Error::Error; };
struct ZeroDenominator : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace evid
