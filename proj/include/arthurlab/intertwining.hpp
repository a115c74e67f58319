#pragma once

#include <complex>
#include <cstdint>

#include "arthurlab/quadrature.hpp"
#include "arthurlab/weil_real.hpp"

namespace arthurlab::intertwining {

using Complex = std::complex<double>;

struct IdentityReport {
    double lambda = 0.0;  // the deformation parameter (or s for the cocharacter kernel)
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double abs_diff = 0.0;
    bool pass = false;
    double tol = 0.0;
    long evaluations = 0;
};

// Rank-one kernel integral of the 3-dimensional unipotent radical:
//   8 pi int_0^inf r^2 (1+r^2)^{-lambda-3/2} dr
// against 2 pi^{3/2} Gamma(lambda)/Gamma(lambda+3/2)
//   = 2^{-1/2} Gamma_C(lambda)/Gamma_C(lambda+3/2).
// Requires Re(lambda) > 0; lambda <= 0 is a pole of both sides.
IdentityReport m_so14(double lambda, double tol = 1e-8);

// closed form only (no quadrature)
Complex m_so14_constant(Complex lambda);

// One-dimensional kernel on the central root:
//   int_R (u^2 - 1) (1+u^2)^{-(s+3)/2} du
// against -Gamma_R(s) Gamma_R(s+1) / (Gamma_R(s+3) Gamma_R(s-1)),
// both equal to -sqrt(pi) Gamma(s/2) (s-1) / (2 Gamma((s+3)/2)).
IdentityReport m_c(double s, double tol = 1e-8);

Complex m_c_constant(Complex s);

// The 3-dimensional kernel in the two-step factorization; the first
// argument does not enter the kernel and is asserted away by the tests.
IdentityReport m_sai(double alpha, double beta, double tol = 1e-8);

Complex m_sai_constant(Complex beta);

// Composite normalized-operator constants.  Both tend to -1 as the
// deformation parameter decreases to 0 from the right.
Complex so14_composite(Complex lambda);
Complex so25_composite(Complex lambda);

// Second evaluation path: the epsilon*L ratio from the representation-ring
// module times the kernel constants evaluated by quadrature.  Valid for
// real lambda with lambda > 0 (so14) resp. lambda > 1/2 (so25).
Complex so14_composite_quadrature(double lambda);
Complex so25_composite_quadrature(double lambda);

// The two adjoint-representation inputs, with the formal lambda twist.
weil::WeilRealRep so14_rho_rep();
weil::WeilRealRep so25_rho_rep();

// Plain Monte-Carlo evaluation of the untransformed 3-dimensional integral
//   int_{R^3} 2 (1+|x|^2)^{-lambda-3/2} dx,
// the low-accuracy independent cross-check of the radial reduction.
double m_so14_monte_carlo(double lambda, std::uint64_t seed = 1, long samples = 2'000'000);

}  // namespace arthurlab::intertwining
