#ifndef SPHEREFLOW_ERRORS_HPP
#define SPHEREFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sphereflow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Curvature vector left the Garding cone required by an operation.
// Carries which normalized symmetric function failed and its value.
struct ConeError : Error {
    ConeError(const std::string& msg, int order, double value)
        : Error(msg), failing_order(order), failing_value(value) {}
    int failing_order;
    double failing_value;
};

// Argument outside the mathematical domain of a reference function.
struct DomainError : Error {
    using Error::Error;
};

// Inversion target outside the attained range of a monotone reference.
struct RangeError : Error {
    RangeError(const std::string& msg, double lo, double hi)
        : Error(msg), range_lo(lo), range_hi(hi) {}
    double range_lo;
    double range_hi;
};

// Discrete profile rejected by the validator (range, grid, symmetry).
struct ProfileError : Error {
    using Error::Error;
};

// Derived geometry is unusable (non-star-shaped state and the like).
struct GeometryError : Error {
    using Error::Error;
};

// A check was asked to run on data that violates its hypotheses.
struct HypothesisError : Error {
    using Error::Error;
};

// Configuration file or CLI input could not be parsed/validated.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace sphereflow

#endif
