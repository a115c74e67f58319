#include "arthurlab/weil_real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arthurlab::weil {

void WeilRealRep::normalize() {
    std::sort(one.begin(), one.end());
    std::sort(two.begin(), two.end());
}

WeilRealRep& WeilRealRep::add(const WeilRealRep& other) {
    one.insert(one.end(), other.one.begin(), other.one.end());
    two.insert(two.end(), other.two.begin(), other.two.end());
    normalize();
    return *this;
}

WeilRealRep WeilRealRep::at(Complex lambda) const {
    WeilRealRep r = *this;
    for (auto& s : r.one) s.t = LambdaAffine(s.t.at(lambda));
    for (auto& s : r.two) s.t = LambdaAffine(s.t.at(lambda));
    r.normalize();
    return r;
}

WeilRealRep dual(const WeilRealRep& a) {
    WeilRealRep r = a;
    for (auto& s : r.one) s.t = -s.t;
    for (auto& s : r.two) s.t = -s.t;
    r.normalize();
    return r;
}

WeilRealRep lambda_twist(const WeilRealRep& a, double mult) {
    WeilRealRep r = a;
    for (auto& s : r.one) s.t = s.t + LambdaAffine::lambda(mult);
    for (auto& s : r.two) s.t = s.t + LambdaAffine::lambda(mult);
    r.normalize();
    return r;
}

namespace {

WeilRealRep tensor_one_one(const OneDim& a, const OneDim& b) {
    return WeilRealRep::omega(a.t + b.t, (a.eps + b.eps) & 1);
}

WeilRealRep tensor_two_one(const TwoDim& a, const OneDim& b) {
    // the sign character is invisible after induction from C^x
    return WeilRealRep::tau(a.l, a.t + b.t);
}

WeilRealRep tensor_two_two(const TwoDim& a, const TwoDim& b) {
    WeilRealRep r = WeilRealRep::tau(a.l + b.l, a.t + b.t);
    int diff = std::abs(a.l - b.l);
    if (diff > 0) {
        r.add(WeilRealRep::tau(diff, a.t + b.t));
    } else {
        r.add(WeilRealRep::omega(a.t + b.t, 0));
        r.add(WeilRealRep::omega(a.t + b.t, 1));
    }
    return r;
}

}  // namespace

WeilRealRep tensor(const WeilRealRep& a, const WeilRealRep& b) {
    WeilRealRep r;
    for (const auto& x : a.one)
        for (const auto& y : b.one) r.add(tensor_one_one(x, y));
    for (const auto& x : a.two)
        for (const auto& y : b.one) r.add(tensor_two_one(x, y));
    for (const auto& x : a.one)
        for (const auto& y : b.two) r.add(tensor_two_one(y, x));
    for (const auto& x : a.two)
        for (const auto& y : b.two) r.add(tensor_two_two(x, y));
    return r;
}

WeilRealRep sym2(const WeilRealRep& a) {
    WeilRealRep r;
    // squares of the individual summands
    for (const auto& x : a.one) r.add(WeilRealRep::omega(x.t + x.t, 0));
    for (const auto& x : a.two) {
        r.add(WeilRealRep::tau(2 * x.l, x.t + x.t));
        r.add(WeilRealRep::omega(x.t + x.t, x.l & 1));
    }
    // cross terms
    for (std::size_t i = 0; i < a.one.size(); ++i)
        for (std::size_t j = i + 1; j < a.one.size(); ++j)
            r.add(tensor_one_one(a.one[i], a.one[j]));
    for (const auto& x : a.two)
        for (const auto& y : a.one) r.add(tensor_two_one(x, y));
    for (std::size_t i = 0; i < a.two.size(); ++i)
        for (std::size_t j = i + 1; j < a.two.size(); ++j)
            r.add(tensor_two_two(a.two[i], a.two[j]));
    return r;
}

WeilRealRep wedge2(const WeilRealRep& a) {
    WeilRealRep r;
    // wedge of a 1-dim with itself vanishes; tau contributes its determinant
    for (const auto& x : a.two) r.add(WeilRealRep::omega(x.t + x.t, (x.l + 1) & 1));
    for (std::size_t i = 0; i < a.one.size(); ++i)
        for (std::size_t j = i + 1; j < a.one.size(); ++j)
            r.add(tensor_one_one(a.one[i], a.one[j]));
    for (const auto& x : a.two)
        for (const auto& y : a.one) r.add(tensor_two_one(x, y));
    for (std::size_t i = 0; i < a.two.size(); ++i)
        for (std::size_t j = i + 1; j < a.two.size(); ++j)
            r.add(tensor_two_two(a.two[i], a.two[j]));
    return r;
}

WeilRealRep rho_dual(int k, const WeilRealRep& phi_gl, const WeilRealRep& phi_so) {
    if (phi_gl.dim() != k)
        throw std::invalid_argument("rho_dual: GL factor dimension mismatch");
    if (phi_so.dim() % 2 != 0)
        throw std::invalid_argument("rho_dual: SO factor must have even dimension");
    WeilRealRep twisted = lambda_twist(phi_gl);
    WeilRealRep r = sym2(twisted);
    if (phi_so.dim() > 0) r.add(tensor(twisted, phi_so));
    return r;
}

Complex character_at_z(const WeilRealRep& a, double r, double theta, Complex lambda) {
    Complex total(0.0, 0.0);
    for (const auto& s : a.one) {
        Complex t = s.t.at(lambda);
        total += std::pow(Complex(r * r, 0.0), t);  // |z|^t, independent of eps on C^x
    }
    for (const auto& s : a.two) {
        Complex t = s.t.at(lambda);
        total += std::pow(Complex(r * r, 0.0), t) * 2.0 * std::cos(double(s.l) * theta);
    }
    return total;
}

Complex character_at_j(const WeilRealRep& a, Complex lambda) {
    Complex total(0.0, 0.0);
    for (const auto& s : a.one) total += s.eps == 0 ? 1.0 : -1.0;
    (void)lambda;  // tau summands have trace 0 at j
    return total;
}

gamma::GammaValue l_factor(const WeilRealRep& a, Complex s, Complex lambda) {
    Complex log_sum(0.0, 0.0);
    for (const auto& x : a.one) {
        Complex arg = s + x.t.at(lambda) + double(x.eps);
        if (gamma::gamma_r_is_pole(arg)) return gamma::GammaValue::at_pole();
        log_sum += gamma::lgamma_r(arg);
    }
    for (const auto& x : a.two) {
        Complex arg = s + x.t.at(lambda) + double(x.l) / 2.0;
        if (gamma::gamma_c_is_pole(arg)) return gamma::GammaValue::at_pole();
        log_sum += gamma::lgamma_c(arg);
    }
    return gamma::GammaValue::from_log(log_sum);
}

Complex epsilon_factor(const WeilRealRep& a) {
    // eps(omega_t) = 1, eps(sigma omega_t) = i, eps(tau_{(l,t)}) = i^{l+1}
    int quarter_turns = 0;
    for (const auto& x : a.one) quarter_turns += x.eps;
    for (const auto& x : a.two) quarter_turns += x.l + 1;
    static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowers[((quarter_turns % 4) + 4) % 4];
}

gamma::GammaValue normalizing_ratio(const WeilRealRep& rep, RatioMode mode, Complex lambda) {
    // Count poles on each side so that pole/zero outcomes are reported
    // instead of silently producing inf/0.
    int num_poles = 0, den_poles = 0;
    Complex log_ratio(0.0, 0.0);
    auto accumulate = [&](Complex arg, bool is_c, bool numerator) {
        bool pole = is_c ? gamma::gamma_c_is_pole(arg) : gamma::gamma_r_is_pole(arg);
        if (pole) {
            (numerator ? num_poles : den_poles) += 1;
            return;
        }
        Complex lg = is_c ? gamma::lgamma_c(arg) : gamma::lgamma_r(arg);
        log_ratio += numerator ? lg : -lg;
    };
    // numerator s_num and denominator s_den of the L-ratio
    double s_num = (mode == RatioMode::RPrime) ? 0.0 : 1.0;
    double s_den = 1.0 - s_num;
    for (const auto& x : rep.one) {
        Complex t = x.t.at(lambda) + double(x.eps);
        accumulate(s_num + t, false, true);
        accumulate(s_den + t, false, false);
    }
    for (const auto& x : rep.two) {
        Complex t = x.t.at(lambda) + double(x.l) / 2.0;
        accumulate(s_num + t, true, true);
        accumulate(s_den + t, true, false);
    }
    if (num_poles > den_poles) return gamma::GammaValue::at_pole();
    if (num_poles < den_poles) {
        gamma::GammaValue zero;
        zero.value = Complex(0.0, 0.0);
        return zero;
    }
    if (num_poles > 0) return gamma::GammaValue::at_pole();  // cancellation needs a limit
    gamma::GammaValue v = gamma::GammaValue::from_log(log_ratio);
    if (mode == RatioMode::CombinedEpsL) v.value *= epsilon_factor(rep);
    return v;
}

SelfDuality one_dim_self_duality(const OneDim& s) {
    if (!(s.t == LambdaAffine())) return SelfDuality::NotSelfDual;
    return SelfDuality::Orthogonal;
}

SelfDuality two_dim_self_duality(const TwoDim& s) {
    if (!(s.t == LambdaAffine())) return SelfDuality::NotSelfDual;
    return (s.l % 2 == 1) ? SelfDuality::Symplectic : SelfDuality::Orthogonal;
}

}  // namespace arthurlab::weil
