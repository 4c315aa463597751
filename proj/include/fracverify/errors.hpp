#ifndef FRACVERIFY_ERRORS_HPP
#define FRACVERIFY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracverify {

// Base class for every error thrown by the numerical layer. The CLI maps
// these to exit code 3; configuration problems are reported separately.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public NumericalError {
public:
    explicit DomainError(const std::string& what) : NumericalError(what) {}
};

// Evaluation at a pole of the gamma function or of a kernel constant.
class PoleError : public NumericalError {
public:
    explicit PoleError(const std::string& what) : NumericalError(what) {}
};

// Power-law kernel formula requested where the logarithmic branch applies,
// or vice versa.
class BranchError : public NumericalError {
public:
    explicit BranchError(const std::string& what) : NumericalError(what) {}
};

// Kernel evaluation on the diagonal x = y where the defining integral
// diverges.
class CoincidenceError : public NumericalError {
public:
    explicit CoincidenceError(const std::string& what) : NumericalError(what) {}
};

// Series did not meet its stopping rule within the iteration cap.
class ConvergenceError : public NumericalError {
public:
    explicit ConvergenceError(const std::string& what) : NumericalError(what) {}
};

// Adaptive quadrature exhausted its subdivision budget. Carries the best
// available estimate and the error bound actually achieved.
class ToleranceError : public NumericalError {
public:
    ToleranceError(const std::string& what, double best_estimate, double error_estimate)
        : NumericalError(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

    double best_estimate() const { return best_estimate_; }
    double error_estimate() const { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

// Invalid run configuration (bad flags, malformed grids). The CLI maps
// these to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fracverify

#endif
