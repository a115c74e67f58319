#pragma once

#include <complex>
#include <cstdint>
#include <functional>

namespace arthurlab::quadrature {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod (7/15) on a finite interval.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double target_abs_error = 1e-11, long eval_budget = 4'000'000);

enum class Domain { HalfLine, RealLine };

// Improper integral over (0, inf) or (-inf, inf) for kernels with algebraic
// decay of exponent > 1; the tail is folded in by the substitution
// r = tan(theta) (resp. u = tan(theta)).  Throws QuadratureError when the
// evaluation budget is exhausted before the target error is met.
QuadratureResult quad_improper(const std::function<double(double)>& kernel, Domain domain,
                               double target_abs_error = 1e-10, long eval_budget = 4'000'000);

}  // namespace arthurlab::quadrature
