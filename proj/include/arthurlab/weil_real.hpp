#pragma once

#include <complex>
#include <vector>

#include "arthurlab/gamma.hpp"

namespace arthurlab::weil {

using Complex = std::complex<double>;

// A twist exponent c0 + c1 * lambda, affine in the formal deformation
// parameter lambda.  All exponents occurring here are dyadic, so the
// double fields compare exactly.
struct LambdaAffine {
    Complex c0{0.0, 0.0};
    double c1 = 0.0;

    LambdaAffine() = default;
    LambdaAffine(double v) : c0(v, 0.0) {}
    LambdaAffine(Complex v) : c0(v) {}
    LambdaAffine(Complex v, double lam) : c0(v), c1(lam) {}

    static LambdaAffine lambda(double mult = 1.0) { return LambdaAffine(Complex(0.0, 0.0), mult); }

    Complex at(Complex lam) const { return c0 + c1 * lam; }
    bool is_constant() const { return c1 == 0.0; }

    friend LambdaAffine operator+(const LambdaAffine& a, const LambdaAffine& b) {
        return LambdaAffine(a.c0 + b.c0, a.c1 + b.c1);
    }
    LambdaAffine operator-() const { return LambdaAffine(-c0, -c1); }
    friend bool operator==(const LambdaAffine& a, const LambdaAffine& b) {
        return a.c0 == b.c0 && a.c1 == b.c1;
    }
    friend bool operator<(const LambdaAffine& a, const LambdaAffine& b) {
        if (a.c0.real() != b.c0.real()) return a.c0.real() < b.c0.real();
        if (a.c0.imag() != b.c0.imag()) return a.c0.imag() < b.c0.imag();
        return a.c1 < b.c1;
    }
};

// sigma^eps omega_t
struct OneDim {
    int eps = 0;  // 0 or 1
    LambdaAffine t;

    friend bool operator==(const OneDim& a, const OneDim& b) {
        return a.eps == b.eps && a.t == b.t;
    }
    friend bool operator<(const OneDim& a, const OneDim& b) {
        if (a.eps != b.eps) return a.eps < b.eps;
        return a.t < b.t;
    }
};

// tau_{(l,t)}, l >= 1
struct TwoDim {
    int l = 1;
    LambdaAffine t;

    friend bool operator==(const TwoDim& a, const TwoDim& b) { return a.l == b.l && a.t == b.t; }
    friend bool operator<(const TwoDim& a, const TwoDim& b) {
        if (a.l != b.l) return a.l < b.l;
        return a.t < b.t;
    }
};

// Formal sum of irreducibles of the real Weil group, kept sorted so that
// equality is multiset equality.
struct WeilRealRep {
    std::vector<OneDim> one;
    std::vector<TwoDim> two;

    int dim() const { return int(one.size()) + 2 * int(two.size()); }
    void normalize();
    WeilRealRep& add(const WeilRealRep& other);

    static WeilRealRep omega(LambdaAffine t, int eps = 0) {
        WeilRealRep r;
        r.one.push_back(OneDim{eps & 1, t});
        return r;
    }
    static WeilRealRep tau(int l, LambdaAffine t = LambdaAffine()) {
        WeilRealRep r;
        r.two.push_back(TwoDim{l, t});
        return r;
    }

    // substitute a numeric value for lambda
    WeilRealRep at(Complex lambda) const;

    friend bool operator==(const WeilRealRep& a, const WeilRealRep& b) {
        return a.one == b.one && a.two == b.two;
    }
};

WeilRealRep dual(const WeilRealRep& a);
WeilRealRep tensor(const WeilRealRep& a, const WeilRealRep& b);
WeilRealRep sym2(const WeilRealRep& a);
WeilRealRep wedge2(const WeilRealRep& a);

// twist by |.|^lambda: t -> t + lambda on every summand
WeilRealRep lambda_twist(const WeilRealRep& a, double mult = 1.0);

// Adjoint-representation input of the normalizing factor for the maximal
// Levi GL_k x SO_{2 n0 + 1}: (phi_gl |.|^lambda) (x) phi_so  (+)  Sym^2(phi_gl |.|^lambda).
// phi_gl must have dimension k and phi_so even dimension.
WeilRealRep rho_dual(int k, const WeilRealRep& phi_gl, const WeilRealRep& phi_so);

// Character value at z = r e^{i theta} in C^x, or at j (the non-identity
// coset); the independent oracle for the decomposition rules.
Complex character_at_z(const WeilRealRep& a, double r, double theta, Complex lambda);
Complex character_at_j(const WeilRealRep& a, Complex lambda);

// L(s, .) as a product of Gamma_R / Gamma_C factors; epsilon is
// s-independent with the standard additive character.
gamma::GammaValue l_factor(const WeilRealRep& a, Complex s, Complex lambda = 0.0);
Complex epsilon_factor(const WeilRealRep& a);

enum class RatioMode {
    RPrime,       // L(0)/L(1) * eps(1/2)/eps(0) = L(0)/L(1)
    CombinedEpsL  // eps(0) * L(1)/L(0)
};

gamma::GammaValue normalizing_ratio(const WeilRealRep& rep, RatioMode mode, Complex lambda);

// self-duality of a single irreducible summand
enum class SelfDuality { Orthogonal, Symplectic, NotSelfDual };
SelfDuality one_dim_self_duality(const OneDim& s);
SelfDuality two_dim_self_duality(const TwoDim& s);

}  // namespace arthurlab::weil
