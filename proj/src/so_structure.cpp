#include "arthurlab/so_structure.hpp"

#include <stdexcept>

namespace arthurlab::so_structure {

namespace {

const GaussianRational kOne(1);
const GaussianRational kI = GaussianRational::i();

void require_rank(int n) {
    if (n < 0) throw std::invalid_argument("rank must be non-negative");
}

}  // namespace

std::vector<int> root_coords(const Root& r, int n) {
    std::vector<int> c(n, 0);
    switch (r.kind) {
        case RootKind::ChiMinusChi:
            c[r.i - 1] = r.sign;
            c[r.j - 1] = -r.sign;
            break;
        case RootKind::ChiPlusChi:
            c[r.i - 1] = r.sign;
            c[r.j - 1] = r.sign;
            break;
        case RootKind::Chi:
            c[r.i - 1] = r.sign;
            break;
    }
    return c;
}

std::vector<Root> positive_roots(int n) {
    std::vector<Root> roots;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            roots.push_back(Root{RootKind::ChiMinusChi, i, j, 1});
            roots.push_back(Root{RootKind::ChiPlusChi, i, j, 1});
        }
    for (int i = 1; i <= n; ++i) roots.push_back(Root{RootKind::Chi, i, 0, 1});
    return roots;
}

std::vector<Root> all_roots(int n) {
    std::vector<Root> roots = positive_roots(n);
    std::size_t m = roots.size();
    for (std::size_t k = 0; k < m; ++k) roots.push_back(roots[k].negated());
    return roots;
}

std::vector<Root> simple_roots(int n) {
    std::vector<Root> roots;
    for (int i = 1; i < n; ++i) roots.push_back(Root{RootKind::ChiMinusChi, i, i + 1, 1});
    if (n >= 1) roots.push_back(Root{RootKind::Chi, n, 0, 1});
    return roots;
}

GroupModel build_group(int n) {
    require_rank(n);
    int size = 2 * n + 1;
    Matrix gram(size, size);
    for (int i = 1; i <= n; ++i) {
        gram.at1(i, n + 1 + i) = kOne;
        gram.at1(n + 1 + i, i) = kOne;
    }
    gram.at1(n + 1, n + 1) = GaussianRational(2);
    return GroupModel{n, gram};
}

bool GroupModel::is_member(const Matrix& g) const {
    if (g.rows() != size() || g.cols() != size()) return false;
    return g.transpose() * gram * g == gram && g.det() == kOne;
}

bool GroupModel::is_lie_member(const Matrix& x) const {
    if (x.rows() != size() || x.cols() != size()) return false;
    return (x.transpose() * gram + gram * x).is_zero();
}

Matrix root_vector(int n, const Root& r) {
    int size = 2 * n + 1;
    int i = r.i, j = r.j;
    bool pos = r.sign > 0;
    switch (r.kind) {
        case RootKind::ChiMinusChi:
            if (pos)
                return Matrix::unit(size, i, j) - Matrix::unit(size, n + 1 + j, n + 1 + i);
            return Matrix::unit(size, j, i) - Matrix::unit(size, n + 1 + i, n + 1 + j);
        case RootKind::ChiPlusChi:
            if (pos)
                return Matrix::unit(size, i, n + 1 + j) - Matrix::unit(size, j, n + 1 + i);
            return Matrix::unit(size, n + 1 + j, i) - Matrix::unit(size, n + 1 + i, j);
        case RootKind::Chi:
            if (pos)
                return Matrix::unit(size, i, n + 1, GaussianRational(2)) -
                       Matrix::unit(size, n + 1, n + 1 + i);
            return Matrix::unit(size, n + 1, i) -
                   Matrix::unit(size, n + 1 + i, n + 1, GaussianRational(2));
    }
    throw std::logic_error("unreachable");
}

Matrix coroot_matrix(int n, const Root& r) {
    if (r.sign <= 0) throw std::invalid_argument("coroot_matrix expects a positive root");
    int size = 2 * n + 1;
    int i = r.i, j = r.j;
    Matrix h(size, size);
    switch (r.kind) {
        case RootKind::ChiMinusChi:
            h.at1(i, i) = kOne;
            h.at1(j, j) = -kOne;
            h.at1(n + 1 + i, n + 1 + i) = -kOne;
            h.at1(n + 1 + j, n + 1 + j) = kOne;
            break;
        case RootKind::ChiPlusChi:
            h.at1(i, i) = kOne;
            h.at1(j, j) = kOne;
            h.at1(n + 1 + i, n + 1 + i) = -kOne;
            h.at1(n + 1 + j, n + 1 + j) = -kOne;
            break;
        case RootKind::Chi:
            h.at1(i, i) = GaussianRational(2);
            h.at1(n + 1 + i, n + 1 + i) = GaussianRational(-2);
            break;
    }
    return h;
}

Rational root_coroot_pairing(const Root& alpha, const Matrix& h, int n) {
    std::vector<int> c = root_coords(alpha, n);
    Rational sum(0);
    for (int k = 1; k <= n; ++k) {
        const GaussianRational& hk = h.at1(k, k);
        if (!hk.is_real()) throw std::invalid_argument("coroot must be real diagonal");
        sum += Rational(c[k - 1]) * hk.re();
    }
    return sum;
}

ChevalleyBasis chevalley_basis(int n) {
    if (n < 1) throw std::invalid_argument("chevalley_basis requires rank >= 1");
    ChevalleyBasis basis;
    basis.n = n;
    for (const Root& r : all_roots(n)) basis.root_vectors.push_back({r, root_vector(n, r)});
    for (const Root& r : positive_roots(n)) basis.coroots.push_back({r, coroot_matrix(n, r)});
    return basis;
}

std::optional<Root> root_from_coords(const std::vector<int>& coords, int n) {
    for (const Root& r : all_roots(n))
        if (root_coords(r, n) == coords) return r;
    return std::nullopt;
}

int root_string_length(const Root& beta, const Root& gamma, int n) {
    std::vector<int> cb = root_coords(beta, n);
    std::vector<int> cg = root_coords(gamma, n);
    int b = 0;
    while (true) {
        std::vector<int> c(n);
        for (int k = 0; k < n; ++k) c[k] = cg[k] - (b + 1) * cb[k];
        if (!root_from_coords(c, n)) break;
        ++b;
    }
    return b;
}

RootClass classify_root(const RealForm& form, const Root& root) {
    RealForm f = form.canonical();
    int n = f.n();
    int r = f.r();
    std::vector<int> c = root_coords(root, n);
    // Conjugation negates the first r (compact) coordinates and fixes the rest.
    bool compact_part = false, split_part = false;
    for (int k = 0; k < r; ++k) compact_part |= (c[k] != 0);
    for (int k = r; k < n; ++k) split_part |= (c[k] != 0);
    if (!split_part) return RootClass::Imaginary;
    if (!compact_part) return RootClass::Real;
    return RootClass::Complex;
}

InnerTwistData inner_twist(int p, int q) {
    if (p <= q || q < 0 || (p + q) % 2 == 0)
        throw std::invalid_argument("inner_twist requires p > q >= 0 with p + q odd");
    int n = (p + q - 1) / 2;
    int r = p - n - 1;
    int size = 2 * n + 1;

    Matrix s0(size, size);
    for (int i = 1; i <= n; ++i) {
        s0.at1(i, i) = kOne;
        s0.at1(i, n + 1 + i) = kOne;
        s0.at1(n + 1 + i, i) = kOne;
        s0.at1(n + 1 + i, n + 1 + i) = -kOne;
    }
    s0.at1(n + 1, n + 1) = GaussianRational(2);

    Matrix sp = Matrix::identity(size);
    for (int k = n + 2; k <= n + 1 + r; ++k) sp.at1(k, k) = -kI;

    InnerTwistData data;
    data.p = p;
    data.q = q;
    data.S = sp * s0;
    if (p == 4 && q == 1)
        data.z = so14_fixtures().z_rho;
    else if (p == 5 && q == 2)
        data.z = so25_fixtures().z_rho;
    return data;
}

namespace {

Matrix diag_signs(const std::vector<int>& signs) {
    Matrix d(int(signs.size()), int(signs.size()));
    for (int k = 0; k < int(signs.size()); ++k) d(k, k) = GaussianRational(signs[k]);
    return d;
}

}  // namespace

So14Fixtures so14_fixtures() {
    So14Fixtures f;
    Matrix a(5, 5);
    a.at1(1, 1) = kOne;       a.at1(1, 4) = kOne;
    a.at1(2, 2) = kI;         a.at1(2, 5) = kI;
    a.at1(3, 3) = GaussianRational(Rational(0), Rational(2));
    a.at1(4, 2) = kOne;       a.at1(4, 5) = -kOne;
    a.at1(5, 1) = kOne;       a.at1(5, 4) = -kOne;
    f.alpha = a;
    f.z_rho = a.inverse() * a.conj();
    f.gram_d = diag_signs({1, -1, -1, -1, -1});

    Matrix wt(5, 5);
    wt.at1(1, 4) = kOne;
    wt.at1(2, 2) = -kOne;
    wt.at1(3, 3) = -kOne;
    wt.at1(4, 1) = kOne;
    wt.at1(5, 5) = -kOne;
    f.w_tilde = wt;
    f.w_breve = f.xi(wt);
    f.measure_factor = Rational(2);
    return f;
}

Matrix So14Fixtures::m(const Rational& t, const Matrix& b3) {
    if (t.is_zero()) throw std::invalid_argument("torus parameter must be nonzero");
    Rational c = (t + t.inverse()) / Rational(2);
    Rational s = (t - t.inverse()) / Rational(2);
    Matrix g(5, 5);
    g.at1(1, 1) = GaussianRational(c);
    g.at1(1, 5) = GaussianRational(s);
    g.at1(5, 1) = GaussianRational(s);
    g.at1(5, 5) = GaussianRational(c);
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 3; ++col) g(1 + r, 1 + col) = b3(r, col);
    return g;
}

Matrix So14Fixtures::n(const std::array<GaussianRational, 3>& x) {
    GaussianRational half(Rational(1, 2));
    GaussianRational norm2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    GaussianRational h = half * norm2;
    Matrix g = Matrix::identity(5);
    g.at1(1, 1) = kOne + h;
    g.at1(1, 5) = -h;
    g.at1(5, 1) = h;
    g.at1(5, 5) = kOne - h;
    for (int k = 0; k < 3; ++k) {
        g.at1(1, 2 + k) = x[k];
        g.at1(5, 2 + k) = x[k];
        g.at1(2 + k, 1) = x[k];
        g.at1(2 + k, 5) = -x[k];
    }
    return g;
}

Matrix So14Fixtures::n_star(const std::array<GaussianRational, 3>& b) {
    GaussianRational quarter(Rational(1, 4));
    GaussianRational half(Rational(1, 2));
    Matrix g = Matrix::identity(5);
    g.at1(1, 2) = b[0];
    g.at1(1, 3) = b[1];
    g.at1(1, 4) = -b[0] * b[2] - quarter * b[1] * b[1];
    g.at1(1, 5) = b[2];
    g.at1(2, 4) = -b[2];
    g.at1(3, 4) = -half * b[1];
    g.at1(5, 4) = -b[0];
    return g;
}

std::array<GaussianRational, 3> So14Fixtures::b_to_x(const std::array<GaussianRational, 3>& b) {
    GaussianRational half(Rational(1, 2));
    GaussianRational half_i(Rational(0), Rational(1, 2));
    return {-half_i * (b[0] + b[2]), -half_i * b[1], half * (b[0] - b[2])};
}

So25Fixtures so25_fixtures() {
    So25Fixtures f;
    Matrix a(7, 7);
    a.at1(1, 1) = kOne;   a.at1(1, 5) = kOne;
    a.at1(2, 2) = kOne;   a.at1(2, 6) = kOne;
    a.at1(3, 3) = kI;     a.at1(3, 7) = kI;
    a.at1(4, 4) = GaussianRational(Rational(0), Rational(2));
    a.at1(5, 3) = kOne;   a.at1(5, 7) = -kOne;
    a.at1(6, 1) = kOne;   a.at1(6, 5) = -kOne;
    a.at1(7, 2) = kOne;   a.at1(7, 6) = -kOne;
    f.alpha = a;
    f.z_rho = a.inverse() * a.conj();
    f.gram_d = diag_signs({1, 1, -1, -1, -1, -1, -1});

    Matrix wt(7, 7);
    wt.at1(1, 6) = kOne;  wt.at1(2, 5) = -kOne;   // J block at columns 5-6
    wt.at1(3, 3) = kOne;
    wt.at1(4, 4) = kOne;
    wt.at1(5, 2) = kOne;  wt.at1(6, 1) = -kOne;   // J block at columns 1-2
    wt.at1(7, 7) = kOne;
    f.w_tilde = wt;
    f.w_breve = f.xi(wt);

    Matrix w0(5, 5);
    w0.at1(1, 1) = kOne;
    for (int k = 2; k <= 5; ++k) w0.at1(k, k) = -kOne;
    f.w0_so14 = w0;
    return f;
}

Matrix So25Fixtures::m(const Matrix& a2, const Matrix& b3) {
    Matrix at_inv = a2.transpose().inverse();
    GaussianRational half(Rational(1, 2));
    Matrix c = half * (a2 + at_inv);
    Matrix s = half * (a2 - at_inv);
    Matrix g(7, 7);
    for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col) {
            g(r, col) = c(r, col);
            g(r, 5 + col) = s(r, col);
            g(5 + r, col) = s(r, col);
            g(5 + r, 5 + col) = c(r, col);
        }
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 3; ++col) g(2 + r, 2 + col) = b3(r, col);
    return g;
}

Matrix So25Fixtures::iota1(const Matrix& h5) {
    Matrix g = Matrix::identity(7);
    // basis positions (1 | 2 | 3..6 | 7); h5 splits as 1 + 4
    g.at1(1, 1) = h5.at1(1, 1);
    for (int k = 0; k < 4; ++k) {
        g.at1(1, 3 + k) = h5.at1(1, 2 + k);
        g.at1(3 + k, 1) = h5.at1(2 + k, 1);
        for (int l = 0; l < 4; ++l) g.at1(3 + k, 3 + l) = h5.at1(2 + k, 2 + l);
    }
    return g;
}

Matrix So25Fixtures::iota2(const Matrix& h5) {
    Matrix g = Matrix::identity(7);
    // basis positions (1 | 2..5 | 6 | 7); h5 splits as 4 + 1
    for (int k = 0; k < 4; ++k) {
        g.at1(2 + k, 7) = h5.at1(1 + k, 5);
        g.at1(7, 2 + k) = h5.at1(5, 1 + k);
        for (int l = 0; l < 4; ++l) g.at1(2 + k, 2 + l) = h5.at1(1 + k, 1 + l);
    }
    g.at1(7, 7) = h5.at1(5, 5);
    return g;
}

Matrix So25Fixtures::iota_sl2(const Matrix& a2) {
    return m(a2, Matrix::identity(3));
}

Matrix So25Fixtures::n1(const std::array<GaussianRational, 3>& x) {
    return iota1(So14Fixtures::n(x));
}

Matrix So25Fixtures::n2(const std::array<GaussianRational, 3>& x) {
    return iota2(So14Fixtures::n(x));
}

Matrix So25Fixtures::nc(const GaussianRational& u) {
    GaussianRational h = GaussianRational(Rational(1, 2)) * u;
    Matrix g = Matrix::identity(7);
    g.at1(1, 2) = h;
    g.at1(1, 7) = -h;
    g.at1(2, 1) = -h;
    g.at1(2, 6) = h;
    g.at1(6, 2) = h;
    g.at1(6, 7) = -h;
    g.at1(7, 1) = -h;
    g.at1(7, 6) = h;
    return g;
}

}  // namespace arthurlab::so_structure
