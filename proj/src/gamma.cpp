#include "arthurlab/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace arthurlab::gamma {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640561764;

// Lanczos coefficients for g = 607/128 (Godfrey's 15-term set).
constexpr double kG = 607.0 / 128.0;
constexpr double kCoeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

Complex lgamma_core(Complex z) {
    // valid for Re(z) >= 0.5
    Complex sum(kCoeff[0], 0.0);
    for (int k = 1; k < 15; ++k) sum += kCoeff[k] / (z - 1.0 + double(k));
    Complex base = z + (kG - 0.5);
    return kLogSqrt2Pi + (z - 0.5) * std::log(base) - base + std::log(sum);
}

}  // namespace

bool is_nonpositive_integer(Complex z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

Complex lgamma(Complex z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("lgamma: pole at non-positive integer");
    if (z.real() >= 0.5) return lgamma_core(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(kPi) - std::log(std::sin(kPi * z)) - lgamma_core(1.0 - z);
}

Complex tgamma(Complex z) { return std::exp(lgamma(z)); }

GammaValue GammaValue::from_log(Complex log_value) {
    GammaValue v;
    if (std::abs(log_value.real()) > 650.0) {
        v.logscale = log_value.real();
        v.value = std::exp(Complex(0.0, log_value.imag()));
    } else {
        v.value = std::exp(log_value);
    }
    return v;
}

GammaValue GammaValue::at_pole() {
    GammaValue v;
    v.pole = true;
    return v;
}

bool gamma_r_is_pole(Complex s, double tol) { return is_nonpositive_integer(s / 2.0, tol); }
bool gamma_c_is_pole(Complex s, double tol) { return is_nonpositive_integer(s, tol); }

Complex lgamma_r(Complex s) {
    if (gamma_r_is_pole(s)) throw std::domain_error("Gamma_R: pole");
    return -(s / 2.0) * std::log(kPi) + lgamma(s / 2.0);
}

Complex lgamma_c(Complex s) {
    if (gamma_c_is_pole(s)) throw std::domain_error("Gamma_C: pole");
    return std::log(2.0) - s * std::log(2.0 * kPi) + lgamma(s);
}

GammaValue gamma_r(Complex s) {
    if (gamma_r_is_pole(s)) return GammaValue::at_pole();
    return GammaValue::from_log(lgamma_r(s));
}

GammaValue gamma_c(Complex s) {
    if (gamma_c_is_pole(s)) return GammaValue::at_pole();
    return GammaValue::from_log(lgamma_c(s));
}

}  // namespace arthurlab::gamma
