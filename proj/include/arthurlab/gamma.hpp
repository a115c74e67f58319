#pragma once

#include <complex>
#include <optional>

namespace arthurlab::gamma {

using Complex = std::complex<double>;

// Principal-branch log Gamma, Lanczos approximation (g = 607/128, 15 terms)
// with the reflection formula for Re(z) < 1/2.  Relative accuracy is well
// below 1e-12 for |z| <= 50 away from the poles.
Complex lgamma(Complex z);

Complex tgamma(Complex z);

bool is_nonpositive_integer(Complex z, double tol = 1e-12);

// A Gamma-factor value carried in log scale; `pole` marks evaluation at a
// pole of the underlying Gamma function (the value fields are then
// meaningless and must not be used silently).
struct GammaValue {
    Complex value{0.0, 0.0};
    std::optional<double> logscale;  // set when |log value| is large
    bool pole = false;

    static GammaValue from_log(Complex log_value);
    static GammaValue at_pole();
};

// Gamma_R(s) = pi^{-s/2} Gamma(s/2); poles at s in {0, -2, -4, ...}.
GammaValue gamma_r(Complex s);
// Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s); poles at s in {0, -1, -2, ...}.
GammaValue gamma_c(Complex s);

bool gamma_r_is_pole(Complex s, double tol = 1e-12);
bool gamma_c_is_pole(Complex s, double tol = 1e-12);

// log Gamma_R / log Gamma_C; throws std::domain_error at a pole.
Complex lgamma_r(Complex s);
Complex lgamma_c(Complex s);

}  // namespace arthurlab::gamma
