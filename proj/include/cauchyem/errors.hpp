#pragma once

#include <stdexcept>
#include <string>

namespace cauchyem {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Total scale eta + |lambda| collapsed (or eta below its configured floor).
class DegenerateScaleError : public Error {
public:
    explicit DegenerateScaleError(const std::string& what) : Error(what) {}
};

// Fewer observations than the estimator can work with.
class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& what) : Error(what) {}
};

// Fewer than the required number of distinct values for quantile initialization.
class InsufficientSpreadError : public Error {
public:
    explicit InsufficientSpreadError(const std::string& what) : Error(what) {}
};

// An M-step normalizer (sum of conditional moments) vanished.
class DegenerateMomentsError : public Error {
public:
    explicit DegenerateMomentsError(const std::string& what) : Error(what) {}
};

// A mixture component's effective mass dropped below the survival threshold.
class StarvedComponentError : public Error {
public:
    StarvedComponentError(const std::string& what, int component, long iteration)
        : Error(what), component(component), iteration(iteration) {}
    int component;
    long iteration;  // -1 when not raised inside an iteration loop
};

// Every component density underflowed for one observation.
class ResponsibilityUnderflowError : public Error {
public:
    ResponsibilityUnderflowError(const std::string& what, std::size_t observation)
        : Error(what), observation(observation) {}
    std::size_t observation;
};

// A quadrature or Monte-Carlo evaluation failed to reach a usable result.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what, double residual = 0.0)
        : Error(what), residual(residual) {}
    double residual;
};

// Zero-length request where at least one item is required.
class EmptyRequestError : public Error {
public:
    explicit EmptyRequestError(const std::string& what) : Error(what) {}
};

}  // namespace cauchyem
