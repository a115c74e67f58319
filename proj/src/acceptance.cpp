#include "arthurlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>

#include "arthurlab/endoscopy.hpp"
#include "arthurlab/gamma.hpp"
#include "arthurlab/intertwining.hpp"
#include "arthurlab/kottwitz.hpp"
#include "arthurlab/levi_diagram.hpp"
#include "arthurlab/parameters.hpp"
#include "arthurlab/so_structure.hpp"
#include "arthurlab/weil_real.hpp"

namespace arthurlab::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kPi = 3.14159265358979323846264338327950288;

// failure accumulator; keeps the first few messages
struct Expect {
    int failures = 0;
    int checks = 0;
    std::ostringstream first;

    void that(bool ok, const std::string& msg) {
        ++checks;
        if (!ok) {
            if (failures < 3) first << (failures ? " | " : "") << msg;
            ++failures;
        }
    }
    std::string detail(const std::string& ok_note) const {
        if (failures == 0) return ok_note + " (" + std::to_string(checks) + " checks)";
        return std::to_string(failures) + "/" + std::to_string(checks) +
               " checks failed: " + first.str();
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// ---------------------------------------------------------------- 1
void check_kottwitz(Expect& e) {
    using namespace kottwitz;
    for (int n = 0; n <= 5; ++n) {
        int count = 0, plus = 0, plus_direct = 0;
        for (int p = 2 * n + 1; p >= 0; --p) {
            int q = 2 * n + 1 - p;
            if (p < q) break;
            ++count;
            if (alpha_real(p, q).value == 1) ++plus;
            int d = (p - q) % 8;
            if (d == 1 || d == 7) ++plus_direct;
            e.that(alpha_real(p, q) == alpha_real(q, p), "alpha symmetric under (p,q) swap");
        }
        e.that(count == n + 1, "n=" + std::to_string(n) + ": expected " + std::to_string(n + 1) +
                                   " real forms, found " + std::to_string(count));
        e.that(plus == plus_direct, "n=" + std::to_string(n) + ": alpha vs mod-8 count");
    }
    e.that(alpha_real(3, 2).value == 1, "alpha(3,2) = +1");
    e.that(alpha_real(4, 1).value == -1, "alpha(4,1) = -1");
    e.that(alpha_real(9, 0).value == 1, "alpha(9,0) = +1");
    e.that(product_formula({SignCharacter(-1), SignCharacter(-1)}), "[-1,-1] globalizable");
    e.that(!product_formula({SignCharacter(-1), SignCharacter(1), SignCharacter(1)}),
           "single -1 not globalizable");
    e.that(product_formula({}), "empty family globalizable");
}

// ---------------------------------------------------------------- shared parameter fixtures
params::LocalParameter param_2omega0_tau1() {
    params::IrreducibleComponent omega0{"omega0", 1, params::SelfDualType::Orthogonal, 1, {}};
    params::IrreducibleComponent tau1{"tau1", 2, params::SelfDualType::Symplectic, 1, {}};
    return params::validate({{omega0, 2}, {tau1, 1}});
}

params::LocalParameter param_3tau1() {
    params::IrreducibleComponent tau1{"tau1", 2, params::SelfDualType::Symplectic, 1, {}};
    return params::validate({{tau1, 3}});
}

// ---------------------------------------------------------------- 2
void check_centralizers(Expect& e) {
    using namespace params;
    {
        CentralizerShape s = centralizer(param_2omega0_tau1());
        e.that(s.factors.size() == 2, "two factors for 2omega0+tau1");
        e.that(s.factors[0].kind == FactorKind::Sp && s.factors[0].size == 2,
               "Sp(2) factor for the orthogonal component");
        e.that(s.factors[1].kind == FactorKind::O && s.factors[1].size == 1, "O(1) factor");
        e.that(s.component_group_order() == 2, "component group order 2");
    }
    {
        CentralizerShape s = centralizer(param_3tau1());
        e.that(s.factors.size() == 1 && s.factors[0].kind == FactorKind::O &&
                   s.factors[0].size == 3,
               "O(3) for 3tau1");
        e.that(s.component_group_order() == 2, "component group order 2");
    }
    std::vector<LocalParameter> scan = enumerate_profiles(12);
    e.that(scan.size() > 100, "scan covers the profile space");
    for (const auto& p : scan) {
        int sympl = 0;
        for (const auto& c : p.components)
            if (c.comp.selfdual == SelfDualType::Symplectic) ++sympl;
        long expected = 1L << sympl;
        bool ok = component_group(p).order() == expected &&
                  centralizer(p).component_group_order() == expected;
        e.that(ok, "|S| = 2^#symplectic on scan profile");
        if (!ok) break;
    }
}

// ---------------------------------------------------------------- 3
namespace shape_oracle {

// direct re-derivations of the four shape definitions, kept separate from
// params::classify on purpose
bool discrete(const params::LocalParameter& p) {
    if (p.components.empty()) return false;
    for (const auto& c : p.components)
        if (c.comp.selfdual != params::SelfDualType::Symplectic || c.mult != 1) return false;
    return true;
}

bool elliptic2(const params::LocalParameter& p) {
    if (p.components.empty()) return false;
    int twos = 0;
    for (const auto& c : p.components) {
        if (c.comp.selfdual != params::SelfDualType::Symplectic) return false;
        if (c.mult == 2)
            ++twos;
        else if (c.mult != 1)
            return false;
    }
    return twos >= 1;
}

bool exc1(const params::LocalParameter& p) {
    int orth2 = 0;
    for (const auto& c : p.components) {
        if (c.comp.selfdual == params::SelfDualType::Orthogonal && c.mult == 2)
            ++orth2;
        else if (c.comp.selfdual == params::SelfDualType::Symplectic && c.mult == 1)
            continue;
        else
            return false;
    }
    return orth2 == 1;
}

bool exc2(const params::LocalParameter& p) {
    int threes = 0;
    for (const auto& c : p.components) {
        if (c.comp.selfdual != params::SelfDualType::Symplectic) return false;
        if (c.mult == 3)
            ++threes;
        else if (c.mult != 1)
            return false;
    }
    return threes == 1;
}

}  // namespace shape_oracle

void check_classification(Expect& e) {
    using namespace params;
    e.that(classify(param_2omega0_tau1()) == ParamClass::Exc1, "2omega0+tau1 is exc1");
    e.that(classify(param_3tau1()) == ParamClass::Exc2, "3tau1 is exc2");
    for (const auto& p : enumerate_profiles(12)) {
        int hits = int(shape_oracle::discrete(p)) + int(shape_oracle::elliptic2(p)) +
                   int(shape_oracle::exc1(p)) + int(shape_oracle::exc2(p));
        bool exclusive = hits <= 1;
        ParamClass c = classify(p);
        bool agrees = (c == ParamClass::Discrete) == shape_oracle::discrete(p) &&
                      (c == ParamClass::Elliptic2) == shape_oracle::elliptic2(p) &&
                      (c == ParamClass::Exc1) == shape_oracle::exc1(p) &&
                      (c == ParamClass::Exc2) == shape_oracle::exc2(p);
        e.that(exclusive && agrees, "classification agrees with the shape definitions");
        if (!(exclusive && agrees)) break;
    }
    bool rejected = false;
    try {
        IrreducibleComponent o{"o", 1, SelfDualType::Orthogonal, 1, {}};
        validate({{o, 1}});
    } catch (const ValidationError&) {
        rejected = true;
    }
    e.that(rejected, "odd orthogonal multiplicity rejected");
    rejected = false;
    try {
        IrreducibleComponent o{"o", 3, SelfDualType::Orthogonal, 1, {}};
        IrreducibleComponent s{"s", 2, SelfDualType::Symplectic, 1, {}};
        validate({{o, 3}, {s, 1}});
    } catch (const ValidationError&) {
        rejected = true;
    }
    e.that(rejected, "odd orthogonal multiplicity rejected (mult 3)");
}

// ---------------------------------------------------------------- 4
levi::NormalizerElement random_element(const levi::LeviShape& shape,
                                       const levi::WeylGroupInfo& info, std::mt19937_64& rng) {
    levi::NormalizerElement u = levi::NormalizerElement::identity(shape);
    if (info.generators.empty()) return u;
    for (int k = 0; k < 8; ++k) {
        const auto& g = info.generators[rng() % info.generators.size()];
        u = levi::compose(shape, u, g);
    }
    return u;
}

void check_diagram(Expect& e, std::uint64_t seed, bool quick) {
    using namespace levi;
    for (int e1 = 1; e1 <= 5; ++e1)
        for (int e2 = 1; e1 + e2 <= 6; ++e2) {
            long expected = 1;
            for (int k = 2; k <= e1 + e2; ++k) expected *= k;
            e.that(w_group_order(e1, e2) == expected,
                   "W(" + std::to_string(e1) + "," + std::to_string(e2) + ") order " +
                       std::to_string(expected));
        }

    // the two rank-two/three reference diagrams
    auto check_reference = [&e](const std::string& name,
                                const std::pair<params::LocalParameter, LeviShape>& emb,
                                const std::string& expected_param_class) {
        const auto& [param, shape] = emb;
        DiagramReport rep = diagram_report(shape);
        e.that(rep.order_s_m == 2 && rep.order_n == 4 && rep.order_w == 2 && rep.order_w0 == 2 &&
                   rep.order_s_mg == 2 && rep.order_r == 1,
               name + ": orders (2,4,2,2,2,1)");
        e.that(rep.exact_rows && rep.exact_columns, name + ": exactness");
        e.that(params::to_string(params::classify(param)) == expected_param_class,
               name + ": ambient parameter class");
    };
    {
        std::vector<AlphabetEntry> alphabet{{"omega0", 1, params::SelfDualType::Orthogonal},
                                            {"tau1", 2, params::SelfDualType::Symplectic}};
        check_reference("rank2", embed(alphabet, {{{"omega0", 1, 0}}},
                                       SOBlock{{{"tau1", 1, 0}}}, 2),
                        "exc1");
    }
    {
        std::vector<AlphabetEntry> alphabet{{"tau1", 2, params::SelfDualType::Symplectic}};
        check_reference("rank3", embed(alphabet, {{{"tau1", 1, 0}}},
                                       SOBlock{{{"tau1", 1, 0}}}, 3),
                        "exc2");
    }

    std::mt19937_64 rng(seed);
    int shapes = quick ? 220 : 450;
    int kernel_checked = 0;
    for (int trial = 0; trial < shapes; ++trial) {
        LeviShape shape = random_shape(rng);
        DiagramReport rep = diagram_report(shape);
        e.that(rep.order_n == rep.order_s_m * rep.order_w, "order identity |N| = |S(M)||W|");
        e.that(rep.order_w == rep.order_w0 * rep.order_r, "order identity |W| = |W0||R|");
        e.that(rep.order_s_mg == rep.order_s_m * rep.order_r,
               "order identity |S(M,G)| = |S(M)||R|");
        e.that(rep.exact_rows && rep.exact_columns, "diagram rows/columns exact");

        WeylGroupInfo info = weyl_groups(shape);
        for (int pair = 0; pair < 5; ++pair) {
            NormalizerElement u = random_element(shape, info, rng);
            NormalizerElement v = random_element(shape, info, rng);
            auto xu = x_map(shape, u);
            auto xv = x_map(shape, v);
            auto xuv = x_map(shape, compose(shape, u, v));
            bool hom = true;
            for (std::size_t k = 0; k < xu.size(); ++k)
                hom = hom && ((xu[k] ^ xv[k]) == xuv[k]);
            e.that(hom, "x(uv) = x(u) + x(v)");
        }

        if (rep.order_n <= 20000) {
            long kernel = 0;
            for (const auto& u : enumerate_normalizer(shape)) {
                auto x = x_map(shape, u);
                bool zero = std::all_of(x.begin(), x.end(), [](unsigned char b) { return !b; });
                if (zero) ++kernel;
            }
            e.that(kernel == rep.order_w0, "enumerated kernel size equals |W0|");
            ++kernel_checked;
        }
    }
    e.that(kernel_checked >= 50, "enough shapes admit full kernel enumeration");

    ShapeGenOptions discrete_opts;
    discrete_opts.discrete_for_m = true;
    for (int trial = 0; trial < (quick ? 60 : 150); ++trial) {
        LeviShape shape = random_shape(rng, discrete_opts);
        DiagramReport rep = diagram_report(shape);
        e.that(rep.x_surjective, "x surjective for discrete M-parameters");
    }
}

// ---------------------------------------------------------------- 5
void enumerate_signatures(const params::LocalParameter& p,
                          const std::function<void(const endoscopy::SemisimpleSignature&)>& f) {
    endoscopy::SemisimpleSignature sig(p.components.size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == p.components.size()) {
            f(sig);
            return;
        }
        const auto& c = p.components[k];
        int step = c.comp.selfdual == params::SelfDualType::Orthogonal ? 2 : 1;
        for (int minus = 0; minus <= c.mult; minus += step) {
            sig[k] = endoscopy::ComponentSignature{c.comp.label, c.mult - minus, minus};
            rec(k + 1);
        }
    };
    rec(0);
}

bool same_parameter(const params::LocalParameter& a, const params::LocalParameter& b) {
    if (a.components.size() != b.components.size()) return false;
    for (std::size_t k = 0; k < a.components.size(); ++k) {
        const auto& x = a.components[k];
        const auto& y = b.components[k];
        if (x.comp.label != y.comp.label || x.comp.dim != y.comp.dim ||
            x.comp.selfdual != y.comp.selfdual || x.mult != y.mult)
            return false;
    }
    return true;
}

void check_endoscopy(Expect& e) {
    using namespace endoscopy;
    for (int n = 0; n <= 10; ++n) {
        e.that(int(elliptic_triples(n, false).size()) == n / 2 + 1,
               "n=" + std::to_string(n) + ": floor(n/2)+1 isomorphism classes");
        e.that(int(elliptic_triples(n, true).size()) == n + 1,
               "n=" + std::to_string(n) + ": n+1 strict classes");
    }
    long round_trips = 0;
    bool all_ok = true;
    for (const auto& p : params::enumerate_profiles(12)) {
        enumerate_signatures(p, [&](const SemisimpleSignature& sig) {
            Correspondence c = correspond(p, sig);
            all_ok = all_ok && same_parameter(recombine(c), p) &&
                     c.triple.n1 + c.triple.n2 == p.rank() &&
                     c.triple.n1 == c.factor1.rank() && c.triple.n2 == c.factor2.rank();
            ++round_trips;
        });
        if (!all_ok) break;
    }
    e.that(all_ok, "round trip eta . psi^e = psi on every sign splitting");
    e.that(round_trips > 1000, "splitting scan is non-trivial (" + std::to_string(round_trips) +
                                   " cases)");
}

// ---------------------------------------------------------------- 6
void check_weil_ring(Expect& e) {
    using namespace weil;
    {
        WeilRealRep expected;
        expected.two.push_back(TwoDim{1, LambdaAffine::lambda()});
        expected.one.push_back(OneDim{0, LambdaAffine::lambda(2.0)});
        expected.normalize();
        e.that(intertwining::so14_rho_rep() == expected, "rank-one adjoint decomposition");
    }
    {
        WeilRealRep expected;
        expected.two.push_back(TwoDim{2, LambdaAffine::lambda()});
        expected.one.push_back(OneDim{1, LambdaAffine::lambda()});
        expected.one.push_back(OneDim{0, LambdaAffine::lambda()});
        expected.two.push_back(TwoDim{2, LambdaAffine::lambda(2.0)});
        expected.one.push_back(OneDim{1, LambdaAffine::lambda(2.0)});
        expected.normalize();
        e.that(intertwining::so25_rho_rep() == expected, "rank-two adjoint decomposition");
    }
    std::vector<WeilRealRep> summands;
    for (int eps = 0; eps <= 1; ++eps)
        for (double t : {0.0, 0.5}) summands.push_back(WeilRealRep::omega(t, eps));
    for (int l = 1; l <= 6; ++l)
        for (double t : {0.0, 0.5}) summands.push_back(WeilRealRep::tau(l, t));
    for (std::size_t i = 0; i < summands.size(); ++i) {
        WeilRealRep single = summands[i];
        WeilRealRep lhs = sym2(single);
        lhs.add(wedge2(single));
        e.that(lhs == tensor(single, single), "sym2 + wedge2 = square (single summand)");
        for (std::size_t j = i; j < summands.size(); ++j) {
            WeilRealRep a = summands[i];
            a.add(summands[j]);
            WeilRealRep both = sym2(a);
            both.add(wedge2(a));
            bool ok = both == tensor(a, a);
            e.that(ok, "sym2 + wedge2 = square (two summands)");
            if (!ok) return;
        }
    }
    for (double s : {0.3, 0.7, 1.5, 2.2, 3.9}) {
        std::complex<double> lhs =
            std::exp(gamma::lgamma_r(s) + gamma::lgamma_r(s + 1.0));
        std::complex<double> rhs = std::exp(gamma::lgamma_c(s));
        double rel = std::abs(lhs - rhs) / std::abs(rhs);
        e.that(rel <= 1e-12, "duplication at s=" + fmt(s) + " (rel " + fmt(rel) + ")");
    }
}

// ---------------------------------------------------------------- 7
void check_numerics(Expect& e) {
    using namespace intertwining;
    for (double lambda : {0.3, 0.5, 1.0, 2.0, 3.5}) {
        IdentityReport r = m_so14(lambda);
        e.that(r.pass, "3d kernel identity at lambda=" + fmt(lambda) + " (diff " +
                           fmt(r.abs_diff) + ")");
        if (lambda == 1.0) {
            double exact = 8.0 * kPi / 3.0;
            e.that(std::abs(r.lhs - exact) <= 1e-8, "quadrature = 8pi/3 at lambda=1");
            e.that(std::abs(r.rhs - exact) <= 1e-8, "closed form = 8pi/3 at lambda=1");
        }
    }
    for (double s : {0.5, 1.0, 2.0, 3.0, 4.0}) {
        IdentityReport r = m_c(s);
        e.that(r.pass, "central kernel identity at s=" + fmt(s) + " (diff " + fmt(r.abs_diff) + ")");
        if (s == 2.0) e.that(std::abs(r.rhs - (-2.0 / 3.0)) <= 1e-12, "value -2/3 at s=2");
        if (s == 3.0) e.that(std::abs(r.rhs - (-kPi / 4.0)) <= 1e-12, "value -pi/4 at s=3");
        if (s == 1.0) e.that(std::abs(r.rhs) <= 1e-12, "value 0 at s=1");
    }
    // Both composites are constant in lambda once the Gamma identities
    // cancel, so the approach to -1 is monotone up to rounding noise.
    double prev14 = 1e9, prev25 = 1e9;
    for (double lambda : {1e-2, 1e-3, 1e-4}) {
        double d14 = std::abs(so14_composite(lambda) + 1.0);
        double d25 = std::abs(so25_composite(lambda) + 1.0);
        e.that(d14 <= 5.0 * lambda, "rank-one composite limit bound at lambda=" + fmt(lambda));
        e.that(d25 <= 50.0 * lambda, "rank-two composite limit bound at lambda=" + fmt(lambda));
        e.that(d14 <= prev14 + 1e-12 && d25 <= prev25 + 1e-12, "monotone approach to -1");
        prev14 = d14;
        prev25 = d25;
    }
}

// ---------------------------------------------------------------- 8
void check_structure(Expect& e) {
    using namespace so_structure;
    for (int n = 1; n <= 4; ++n) {
        GroupModel g = build_group(n);
        ChevalleyBasis basis = chevalley_basis(n);
        for (const auto& [root, x] : basis.root_vectors)
            e.that(g.is_lie_member(x), "Lie membership at n=" + std::to_string(n));
        for (const auto& [root, h] : basis.coroots) {
            e.that(g.is_lie_member(h), "coroot Lie membership");
            e.that(root_coroot_pairing(root, h, n) == Rational(2), "d(alpha)(H_alpha) = 2");
            Matrix bracket = root_vector(n, root).commutator(root_vector(n, root.negated()));
            e.that(bracket == h, "[X_a, X_-a] = H_a");
        }
        // full bracket table against the root-string structure constants
        std::vector<Root> roots = all_roots(n);
        for (const Root& beta : roots)
            for (const Root& gamma : roots) {
                std::vector<int> sum(n);
                std::vector<int> cb = root_coords(beta, n), cg = root_coords(gamma, n);
                bool zero_sum = true;
                for (int k = 0; k < n; ++k) {
                    sum[k] = cb[k] + cg[k];
                    zero_sum = zero_sum && sum[k] == 0;
                }
                if (zero_sum) continue;
                Matrix bracket = root_vector(n, beta).commutator(root_vector(n, gamma));
                auto target = root_from_coords(sum, n);
                if (!target) {
                    e.that(bracket.is_zero(), "bracket vanishes off the root system");
                    continue;
                }
                Matrix xt = root_vector(n, *target);
                int b = root_string_length(beta, gamma, n);
                // bracket must be +-(b+1) times the target root vector
                GaussianRational coeff;
                bool found = false;
                for (int r = 0; r < xt.rows() && !found; ++r)
                    for (int c = 0; c < xt.cols() && !found; ++c)
                        if (!xt(r, c).is_zero()) {
                            coeff = bracket(r, c) / xt(r, c);
                            found = true;
                        }
                bool ok = found && bracket == coeff * xt && coeff.is_real() &&
                          (coeff.re() == Rational(b + 1) || coeff.re() == Rational(-(b + 1)));
                e.that(ok, "structure constant +-(b+1)");
                if (!ok) return;
            }
    }
    for (int n = 1; n <= 4; ++n)
        for (int p = 2 * n + 1; 2 * p > 2 * n + 1; --p) {
            int q = 2 * n + 1 - p;
            InnerTwistData tw = inner_twist(p, q);
            Matrix s_inv = tw.S.inverse();
            for (const Root& r : all_roots(n)) {
                Matrix image = tw.S * root_vector(n, r) * s_inv;
                Matrix dual_image = tw.S * root_vector(n, r.negated()) * s_inv;
                e.that(image.conj_transpose() == dual_image,
                       "conj-transpose exchange at (p,q)=(" + std::to_string(p) + "," +
                           std::to_string(q) + ")");
            }
        }

    {
        So14Fixtures f = so14_fixtures();
        Matrix z_expected(5, 5);
        z_expected.at1(1, 1) = GaussianRational(1);
        z_expected.at1(2, 5) = GaussianRational(-1);
        z_expected.at1(3, 3) = GaussianRational(-1);
        z_expected.at1(4, 4) = GaussianRational(1);
        z_expected.at1(5, 2) = GaussianRational(-1);
        e.that(f.z_rho == z_expected, "rank-two cocycle matrix");
        Matrix w_expected(5, 5);
        w_expected.at1(1, 1) = GaussianRational(1);
        for (int k = 2; k <= 5; ++k) w_expected.at1(k, k) = GaussianRational(-1);
        e.that(f.w_breve == w_expected, "w_breve = diag(1,-1,-1,-1,-1)");
        e.that((f.w_breve.transpose() * f.gram_d * f.w_breve) == f.gram_d &&
                   f.w_breve.det() == GaussianRational(1),
               "w_breve in the real form");
        e.that(f.alpha.transpose() * f.gram_d * f.alpha ==
                   GaussianRational(2) * build_group(2).gram,
               "alpha carries the split form onto diag(1,-1_4)");
        e.that(f.measure_factor == Rational(2), "measure factor 2");

        Matrix b_rot(3, 3);
        b_rot.at1(1, 1) = GaussianRational(Rational(3, 5));
        b_rot.at1(1, 2) = GaussianRational(Rational(-4, 5));
        b_rot.at1(2, 1) = GaussianRational(Rational(4, 5));
        b_rot.at1(2, 2) = GaussianRational(Rational(3, 5));
        b_rot.at1(3, 3) = GaussianRational(1);
        Rational t(3, 2);
        std::array<GaussianRational, 3> x{GaussianRational(Rational(1, 2)), GaussianRational(2),
                                          GaussianRational(Rational(-1, 3))};
        Matrix lhs = So14Fixtures::n(x) * So14Fixtures::m(t, b_rot);
        std::array<GaussianRational, 3> y;
        for (int k = 0; k < 3; ++k) {
            GaussianRational acc;
            for (int j = 0; j < 3; ++j) acc += x[j] * b_rot(j, k);
            y[k] = GaussianRational(t.inverse()) * acc;
        }
        e.that(lhs == So14Fixtures::m(t, b_rot) * So14Fixtures::n(y),
               "n(x) m(t,B) = m(t,B) n(t^{-1} x B)");
        Matrix w_inv = f.w_breve.inverse();
        e.that(w_inv * So14Fixtures::m(t, b_rot) ==
                   So14Fixtures::m(t.inverse(), b_rot) * w_inv,
               "w^{-1} m(t,B) = m(t^{-1},B) w^{-1}");
        std::array<GaussianRational, 3> b{GaussianRational(1), GaussianRational(Rational(2, 3)),
                                          GaussianRational(-2)};
        e.that(f.xi(So14Fixtures::n_star(b)) == So14Fixtures::n(So14Fixtures::b_to_x(b)),
               "xi(n*(b)) = n(x(b))");
        std::array<GaussianRational, 3> zero{};
        e.that(So14Fixtures::n(zero) == Matrix::identity(5), "n(0) = 1");
    }
    {
        So25Fixtures f = so25_fixtures();
        Matrix z_expected(7, 7);
        z_expected.at1(1, 1) = GaussianRational(1);
        z_expected.at1(2, 2) = GaussianRational(1);
        z_expected.at1(3, 7) = GaussianRational(-1);
        z_expected.at1(4, 4) = GaussianRational(-1);
        z_expected.at1(5, 5) = GaussianRational(1);
        z_expected.at1(6, 6) = GaussianRational(1);
        z_expected.at1(7, 3) = GaussianRational(-1);
        e.that(f.z_rho == z_expected, "rank-three cocycle matrix");
        Matrix w_expected(7, 7);
        w_expected.at1(1, 2) = GaussianRational(1);
        w_expected.at1(2, 1) = GaussianRational(-1);
        for (int k = 3; k <= 5; ++k) w_expected.at1(k, k) = GaussianRational(1);
        w_expected.at1(6, 7) = GaussianRational(-1);
        w_expected.at1(7, 6) = GaussianRational(1);
        e.that(f.w_breve == w_expected, "w_breve block form");
        e.that(f.alpha.transpose() * f.gram_d * f.alpha ==
                   GaussianRational(2) * build_group(3).gram,
               "alpha carries the split form onto diag(1_2,-1_5)");

        Matrix j2(2, 2);
        j2.at1(1, 2) = GaussianRational(1);
        j2.at1(2, 1) = GaussianRational(-1);
        Matrix w0 = f.w0_so14;
        e.that(f.w_breve == So25Fixtures::iota2(w0) * So25Fixtures::iota_sl2(j2) *
                                So25Fixtures::iota2(w0),
               "w_breve factorization through the two embeddings");

        for (int u_num : {-2, 1, 3}) {
            GaussianRational u(u_num);
            Matrix upper = Matrix::identity(2);
            upper.at1(1, 2) = u;
            Matrix lhs = So25Fixtures::iota2(w0).inverse() * So25Fixtures::nc(u) *
                         So25Fixtures::iota2(w0);
            e.that(lhs == So25Fixtures::iota_sl2(upper),
                   "Ad(iota2(w0))^{-1} n_c(u) is the upper unipotent");
        }
        std::array<GaussianRational, 3> x{GaussianRational(Rational(1, 2)), GaussianRational(-1),
                                          GaussianRational(Rational(3, 4))};
        std::array<GaussianRational, 3> neg_x{-x[0], -x[1], -x[2]};
        Matrix conjugator = So25Fixtures::iota2(w0) * So25Fixtures::iota_sl2(j2);
        e.that(conjugator.inverse() * So25Fixtures::n1(x) * conjugator == So25Fixtures::n2(neg_x),
               "Ad(iota2(w0) iota_sl2(J))^{-1} n_1(x) = n_2(-x)");

        // the unipotents as exponentials through the twist
        GaussianRational i = GaussianRational::i();
        auto root_mat = [&](RootKind kind, int a, int b) {
            return root_vector(3, Root{kind, a, b, 1});
        };
        Matrix z1 = i * x[0] * (root_mat(RootKind::ChiMinusChi, 1, 3) +
                                root_mat(RootKind::ChiPlusChi, 1, 3)) +
                    i * x[1] * root_mat(RootKind::Chi, 1, 0) +
                    x[2] * (root_mat(RootKind::ChiMinusChi, 1, 3) -
                            root_mat(RootKind::ChiPlusChi, 1, 3));
        e.that(f.xi(Matrix::exp_nilpotent(z1)) == So25Fixtures::n1(x),
               "n_1 as a twisted exponential");
        Matrix z2 = i * x[0] * (root_mat(RootKind::ChiMinusChi, 2, 3) +
                                root_mat(RootKind::ChiPlusChi, 2, 3)) +
                    i * x[1] * root_mat(RootKind::Chi, 2, 0) +
                    x[2] * (root_mat(RootKind::ChiMinusChi, 2, 3) -
                            root_mat(RootKind::ChiPlusChi, 2, 3));
        e.that(f.xi(Matrix::exp_nilpotent(z2)) == So25Fixtures::n2(x),
               "n_2 as a twisted exponential");
        GaussianRational u(Rational(5, 2));
        Matrix zc = u * root_mat(RootKind::ChiPlusChi, 1, 2);
        e.that(f.xi(Matrix::exp_nilpotent(zc)) == So25Fixtures::nc(u),
               "n_c as a twisted exponential");
    }
}

struct Criterion {
    std::string id;
    std::string module;
    std::string ok_note;
    std::function<void(Expect&)> run;
    double time_limit = 0.0;  // 0 = unenforced
};

}  // namespace

std::vector<CheckResult> run_all(const Options& opts) {
    std::vector<Criterion> criteria;
    criteria.push_back({"1-kottwitz-table", "kottwitz", "real-form table and product formula",
                        [](Expect& e) { check_kottwitz(e); }, 1.0});
    criteria.push_back({"2-centralizers", "parameters", "centralizer shapes and component groups",
                        [](Expect& e) { check_centralizers(e); }});
    criteria.push_back({"3-classification", "parameters", "shape classification",
                        [](Expect& e) { check_classification(e); }});
    criteria.push_back({"4-diagram", "levi-diagram", "normalizer diagram properties",
                        [seed = opts.seed, quick = opts.quick](Expect& e) {
                            check_diagram(e, seed, quick);
                        },
                        30.0});
    criteria.push_back({"5-endoscopy", "endoscopy", "triple counts and correspondences",
                        [](Expect& e) { check_endoscopy(e); }});
    criteria.push_back({"6-weil-ring", "weil-real", "representation ring and Gamma identities",
                        [](Expect& e) { check_weil_ring(e); }});
    criteria.push_back({"7-numerics", "intertwining-numerics",
                        "kernel integrals and composite limits",
                        [](Expect& e) { check_numerics(e); }, 10.0});
    criteria.push_back({"8-structure", "so-structure", "exact matrix-model identities",
                        [](Expect& e) { check_structure(e); }});

    std::vector<CheckResult> results(criteria.size());
    auto run_one = [&](std::size_t k) {
        const Criterion& c = criteria[k];
        Expect e;
        auto start = Clock::now();
        try {
            c.run(e);
        } catch (const std::exception& ex) {
            e.that(false, std::string("exception: ") + ex.what());
        }
        double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.time_limit > 0.0)
            e.that(seconds < c.time_limit,
                   "runtime " + fmt(seconds) + "s exceeds " + fmt(c.time_limit) + "s");
        results[k] = CheckResult{c.id, c.module, e.failures == 0, e.detail(c.ok_note), seconds};
    };

    int threads = std::max(1, opts.threads);
    if (threads == 1) {
        for (std::size_t k = 0; k < criteria.size(); ++k) run_one(k);
    } else {
        std::vector<std::future<void>> futures;
        std::size_t next = 0;
        while (next < criteria.size()) {
            futures.clear();
            for (int t = 0; t < threads && next < criteria.size(); ++t, ++next)
                futures.push_back(std::async(std::launch::async, run_one, next));
            for (auto& f : futures) f.get();
        }
    }
    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace arthurlab::acceptance
