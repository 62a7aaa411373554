#pragma once

#include <stdexcept>
#include <string>

namespace relstandby {

// Operation not available for this family/configuration (e.g. pdf of a
// tabulated marginal, factored path for a copula without a decomposition).
class UnsupportedOperation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Adaptive quadrature ran out of depth. Carries the best estimate reached.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, double best, double bound)
        : std::runtime_error(msg), bestEstimate(best), errorBound(bound) {}
    double bestEstimate;
    double errorBound;
};

// Copula density is signed (or otherwise unusable) where a proper density
// is required, e.g. for sampling.
class ValidityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Conditioning event has (numerically) vanishing probability.
class NullConditioningEvent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simulation could not produce enough conditioned draws or acceptances.
class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace relstandby
