#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sarima {

// Error taxonomy, grouped by how the batch driver reports them:
//   ArgumentError   -> misuse of the tool (bad flags, malformed config), exit 2
//   DataError       -> the input data violates a precondition, exit 3
//   NumericError    -> a computation could not be completed reliably, exit 4
//   NoAdmissibleModelError -> every candidate was rejected, exit 5

class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

class DataError : public std::domain_error {
public:
    explicit DataError(const std::string& what) : std::domain_error(what) {}
};

class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Optimizer gave up before meeting its tolerance.  Carries the best point
// seen so that a caller can inspect how far the search got.
class ConvergenceError : public NumericError {
public:
    ConvergenceError(const std::string& what, std::vector<double> best_point,
                     double best_value)
        : NumericError(what),
          best_point_(std::move(best_point)),
          best_value_(best_value) {}

    const std::vector<double>& best_point() const { return best_point_; }
    double best_value() const { return best_value_; }

private:
    std::vector<double> best_point_;
    double best_value_;
};

class NoAdmissibleModelError : public std::runtime_error {
public:
    explicit NoAdmissibleModelError(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace sarima
