#pragma once

#include <stdexcept>
#include <string>

namespace lvswitch {

/// Closed-form invasion-rate machinery is unavailable: the two environments
/// share the coefficient that drives the resident logistic (a0 == a1 for the
/// y-rate, d0 == d1 for the x-rate). Callers fall back to Monte Carlo.
class DegenerateLogistic : public std::domain_error {
public:
    explicit DegenerateLogistic(const std::string& what) : std::domain_error(what) {}
};

/// A UV coordinate was used with the wrong weight pair (alpha-chart value fed
/// into a beta-chart computation or vice versa).
class ChartMismatch : public std::invalid_argument {
public:
    explicit ChartMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// The ODE state left the admissible box; the step cap is too large for the
/// requested coefficients.
class IntegratorBlowup : public std::runtime_error {
public:
    explicit IntegratorBlowup(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant that should hold by construction was violated.
class InternalContract : public std::logic_error {
public:
    explicit InternalContract(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lvswitch
