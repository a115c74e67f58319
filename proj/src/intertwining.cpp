#include "arthurlab/intertwining.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "arthurlab/gamma.hpp"

namespace arthurlab::intertwining {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

Complex gamma_ratio(Complex num, Complex den) {
    return std::exp(gamma::lgamma(num) - gamma::lgamma(den));
}

Complex gamma_r_ratio(Complex num, Complex den) {
    return std::exp(gamma::lgamma_r(num) - gamma::lgamma_r(den));
}

Complex gamma_c_ratio(Complex num, Complex den) {
    return std::exp(gamma::lgamma_c(num) - gamma::lgamma_c(den));
}

}  // namespace

Complex m_so14_constant(Complex lambda) {
    if (gamma::gamma_c_is_pole(lambda))
        throw std::domain_error("m_so14: pole at lambda");
    // 2^{-1/2} Gamma_C(lambda)/Gamma_C(lambda+3/2) = 2 pi^{3/2} Gamma(lambda)/Gamma(lambda+3/2)
    return std::sqrt(0.5) * gamma_c_ratio(lambda, lambda + 1.5);
}

IdentityReport m_so14(double lambda, double tol) {
    if (lambda <= 0.0) throw std::domain_error("m_so14 requires lambda > 0");
    auto kernel = [lambda](double r) {
        return r * r * std::pow(1.0 + r * r, -lambda - 1.5);
    };
    quadrature::QuadratureResult q =
        quadrature::quad_improper(kernel, quadrature::Domain::HalfLine, 1e-11);
    IdentityReport rep;
    rep.lambda = lambda;
    rep.lhs = 8.0 * kPi * q.value;
    rep.rhs = m_so14_constant(lambda);
    rep.abs_diff = std::abs(rep.lhs - rep.rhs);
    rep.tol = tol;
    rep.pass = rep.abs_diff <= tol;
    rep.evaluations = q.evaluations;
    return rep;
}

Complex m_c_constant(Complex s) {
    // -sqrt(pi) Gamma(s/2) (s-1) / (2 Gamma((s+3)/2)); regular for Re(s) > 0,
    // with a zero at s = 1 where the Gamma_R form degenerates.
    return -std::sqrt(kPi) * (s - 1.0) / 2.0 * gamma_ratio(s / 2.0, (s + 3.0) / 2.0);
}

IdentityReport m_c(double s, double tol) {
    if (s <= 0.0) throw std::domain_error("m_c requires s > 0");
    auto kernel = [s](double u) {
        return (u * u - 1.0) * std::pow(1.0 + u * u, -(s + 3.0) / 2.0);
    };
    quadrature::QuadratureResult q =
        quadrature::quad_improper(kernel, quadrature::Domain::RealLine, 1e-11);
    IdentityReport rep;
    rep.lambda = s;
    rep.lhs = q.value;
    rep.rhs = m_c_constant(s);
    rep.abs_diff = std::abs(rep.lhs - rep.rhs);
    rep.tol = tol;
    rep.pass = rep.abs_diff <= tol;
    rep.evaluations = q.evaluations;
    return rep;
}

Complex m_sai_constant(Complex beta) { return m_so14_constant(beta); }

IdentityReport m_sai(double alpha, double beta, double tol) {
    // the kernel reduces to the 3-dimensional one in beta; alpha is inert
    (void)alpha;
    IdentityReport rep = m_so14(beta, tol);
    rep.rhs = m_sai_constant(beta);
    rep.abs_diff = std::abs(rep.lhs - rep.rhs);
    rep.pass = rep.abs_diff <= tol;
    return rep;
}

weil::WeilRealRep so14_rho_rep() {
    return weil::rho_dual(1, weil::WeilRealRep::omega(0.0), weil::WeilRealRep::tau(1));
}

weil::WeilRealRep so25_rho_rep() {
    return weil::rho_dual(2, weil::WeilRealRep::tau(1), weil::WeilRealRep::tau(1));
}

Complex so14_composite(Complex lambda) {
    // -2^{-1/2} Gamma_C(lambda)/Gamma_C(lambda+1/2) * Gamma_R(2lambda+1)/Gamma_R(2lambda)
    return -std::sqrt(0.5) * gamma_c_ratio(lambda, lambda + 0.5) *
           gamma_r_ratio(2.0 * lambda + 1.0, 2.0 * lambda);
}

Complex so14_composite_quadrature(double lambda) {
    gamma::GammaValue ratio =
        weil::normalizing_ratio(so14_rho_rep(), weil::RatioMode::CombinedEpsL, lambda);
    if (ratio.pole) throw std::domain_error("so14 composite: ratio pole");
    IdentityReport kernel = m_so14(lambda, 1e-6);
    return ratio.value * kernel.lhs;
}

Complex so25_composite(Complex lambda) {
    // epsilon*L ratio of the rank-two adjoint representation
    Complex el = gamma_c_ratio(lambda + 2.0, lambda + 1.0) *
                 gamma_r_ratio(lambda + 2.0, lambda) *
                 gamma_c_ratio(2.0 * lambda + 2.0, 2.0 * lambda + 1.0) *
                 gamma_r_ratio(2.0 * lambda + 2.0, 2.0 * lambda + 1.0);
    // kernel factors: two 3-dimensional steps at beta = lambda -+ 1/2 and the
    // central-root step at s = 2 lambda
    Complex kernels = -0.5 * gamma_c_ratio(lambda - 0.5, lambda + 1.0) *
                      std::exp(gamma::lgamma_r(2.0 * lambda) + gamma::lgamma_r(2.0 * lambda + 1.0) -
                               gamma::lgamma_r(2.0 * lambda + 3.0) - gamma::lgamma_r(2.0 * lambda - 1.0)) *
                      gamma_c_ratio(lambda + 0.5, lambda + 2.0);
    return el * kernels;
}

Complex so25_composite_quadrature(double lambda) {
    if (lambda <= 0.5)
        throw std::domain_error("so25 quadrature path requires lambda > 1/2");
    gamma::GammaValue ratio =
        weil::normalizing_ratio(so25_rho_rep(), weil::RatioMode::CombinedEpsL, lambda);
    if (ratio.pole) throw std::domain_error("so25 composite: ratio pole");
    Complex first = m_sai(lambda + 0.5, lambda - 0.5, 1e-6).lhs;
    Complex central = m_c(2.0 * lambda, 1e-6).lhs;
    Complex second = m_sai(-lambda + 0.5, lambda + 0.5, 1e-6).lhs;
    return ratio.value * first * central * second;
}

double m_so14_monte_carlo(double lambda, std::uint64_t seed, long samples) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-kPi / 2.0, kPi / 2.0);
    double sum = 0.0;
    for (long k = 0; k < samples; ++k) {
        double norm2 = 0.0;
        double jac = 1.0;
        for (int d = 0; d < 3; ++d) {
            double theta = angle(rng);
            double t = std::tan(theta);
            double c = std::cos(theta);
            norm2 += t * t;
            jac /= c * c;
        }
        sum += 2.0 * std::pow(1.0 + norm2, -lambda - 1.5) * jac;
    }
    double volume = kPi * kPi * kPi;
    return volume * sum / double(samples);
}

}  // namespace arthurlab::intertwining
