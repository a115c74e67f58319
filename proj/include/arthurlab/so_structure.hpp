#pragma once

#include <array>
#include <optional>
#include <vector>

#include "arthurlab/matrix.hpp"

namespace arthurlab::so_structure {

// Roots of the diagonal torus in the split odd special orthogonal group,
// kept both symbolically (kind + indices + sign) and as integer
// coordinate vectors on the character lattice.

enum class RootKind { ChiMinusChi, ChiPlusChi, Chi };

struct Root {
    RootKind kind;
    int i = 0;       // 1-based; i < j for the two-index kinds
    int j = 0;       // unused for Chi
    int sign = 1;    // the root is sign * (base kind)

    Root negated() const { return Root{kind, i, j, -sign}; }
    bool is_positive() const { return sign > 0; }

    friend bool operator==(const Root& a, const Root& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j && a.sign == b.sign;
    }
};

std::vector<int> root_coords(const Root& r, int n);
std::vector<Root> all_roots(int n);        // 2n^2 roots
std::vector<Root> positive_roots(int n);   // n^2 roots
std::vector<Root> simple_roots(int n);     // chi_1-chi_2, ..., chi_n

// The ambient group: g^T * gram * g = gram, det g = 1, with the Gram
// matrix carrying 1_n on the two antidiagonal blocks and 2 at the center.
struct GroupModel {
    int n = 0;
    Matrix gram;

    int size() const { return 2 * n + 1; }
    bool is_member(const Matrix& g) const;
    bool is_lie_member(const Matrix& x) const;  // x^T gram + gram x = 0
};

GroupModel build_group(int n);

// Explicit root vectors X_alpha and coroots H_alpha of the standard pinning.
Matrix root_vector(int n, const Root& r);
Matrix coroot_matrix(int n, const Root& positive_root);

// d(alpha)(H) for a diagonal H = diag(h_1..h_n, 0, -h_1..-h_n).
Rational root_coroot_pairing(const Root& alpha, const Matrix& h, int n);

struct ChevalleyBasis {
    int n = 0;
    std::vector<std::pair<Root, Matrix>> root_vectors;  // all 2n^2 roots
    std::vector<std::pair<Root, Matrix>> coroots;       // positive roots
};

ChevalleyBasis chevalley_basis(int n);  // rejects n = 0

// Largest b >= 0 such that gamma - b*beta is a root; the structure
// constant of [X_beta, X_gamma] is +-(b+1) when beta+gamma is a root.
int root_string_length(const Root& beta, const Root& gamma, int n);
std::optional<Root> root_from_coords(const std::vector<int>& coords, int n);

// A real form SO(p,q) with p + q = 2n + 1; (p,q) and (q,p) are the same
// form, and all derived data is computed on the representative with p > q.
struct RealForm {
    int p = 0;
    int q = 0;

    int n() const { return (p + q - 1) / 2; }
    RealForm canonical() const { return p >= q ? *this : RealForm{q, p}; }
    int r() const { return canonical().p - n() - 1; }
    bool is_split() const { return r() == 0; }
};

enum class RootClass { Imaginary, Complex, Real };

RootClass classify_root(const RealForm& form, const Root& root);

// The inner twist g -> S g S^{-1} carrying the split model onto SO(p,q).
// S is sqrt(2) times the normalized intertwiner; the scalar cancels in
// conjugation, so all identities below hold exactly over the Gaussian
// rationals.  For the two forms with numeric fixtures the 1-cocycle value
// z_rho = alpha^{-1} rho(alpha) of the fixture realization is attached.
struct InnerTwistData {
    int p = 0;
    int q = 0;
    Matrix S;
    std::optional<Matrix> z;
};

InnerTwistData inner_twist(int p, int q);  // requires p > q >= 0, p + q odd

inline Matrix twist(const Matrix& s, const Matrix& x) { return s * x * s.inverse(); }

// Fixture bundle for SO(1,4) = SO(diag(1, -1_4)), n = 2.  The realization
// here puts the split torus coordinate first, matching the intertwining
// kernel computations; it differs from inner_twist(4,1) by a basis permutation.
struct So14Fixtures {
    Matrix alpha;     // sqrt(2) * intertwiner, 5x5
    Matrix z_rho;     // alpha^{-1} conj(alpha)
    Matrix w_tilde;   // representative in the split group
    Matrix w_breve;   // = xi(w_tilde) = diag(1, -1, -1, -1, -1)
    Matrix gram_d;    // diag(1, -1_4)
    Rational measure_factor;  // d(n(x)) = 2 dx1 dx2 dx3

    Matrix xi(const Matrix& x) const { return twist(alpha, x); }

    static Matrix m(const Rational& t, const Matrix& b3);          // Levi element
    static Matrix n(const std::array<GaussianRational, 3>& x);     // unipotent
    static Matrix n_star(const std::array<GaussianRational, 3>& b);
    static std::array<GaussianRational, 3> b_to_x(const std::array<GaussianRational, 3>& b);
};

So14Fixtures so14_fixtures();

// Fixture bundle for SO(2,5) = SO(diag(1_2, -1_5)), n = 3.
struct So25Fixtures {
    Matrix alpha;     // sqrt(2) * intertwiner, 7x7
    Matrix z_rho;
    Matrix w_tilde;
    Matrix w_breve;
    Matrix gram_d;    // diag(1_2, -1_5)
    Matrix w0_so14;   // diag(1, -1_4), the SO(1,4) representative

    Matrix xi(const Matrix& x) const { return twist(alpha, x); }

    static Matrix m(const Matrix& a2, const Matrix& b3);
    static Matrix iota1(const Matrix& h5);
    static Matrix iota2(const Matrix& h5);
    static Matrix iota_sl2(const Matrix& a2);
    static Matrix n1(const std::array<GaussianRational, 3>& x);
    static Matrix n2(const std::array<GaussianRational, 3>& x);
    static Matrix nc(const GaussianRational& u);
};

So25Fixtures so25_fixtures();

}  // namespace arthurlab::so_structure
