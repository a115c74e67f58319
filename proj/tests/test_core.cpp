#include <doctest.h>

#include <random>

#include "arthurlab/matrix.hpp"

using namespace arthurlab;

TEST_CASE("rational arithmetic and normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(7) / Rational(7) == Rational(1));
    CHECK((Rational(3, 4) - Rational(3, 4)).is_zero());
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational field axioms on random values") {
    std::mt19937_64 rng(7);
    auto rnd = [&rng] {
        return Rational(std::int64_t(rng() % 41) - 20, std::int64_t(rng() % 11) + 1);
    };
    for (int k = 0; k < 300; ++k) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(1, 2), Rational(-3, 4));
    CHECK(z * z.conj() == GaussianRational(z.norm2()));
    CHECK((z / z) == GaussianRational(1));
    CHECK(z.conj().conj() == z);
}

TEST_CASE("matrix product, inverse, determinant") {
    Matrix a(3, 3);
    a.at1(1, 1) = GaussianRational(2);
    a.at1(1, 2) = GaussianRational::i();
    a.at1(2, 2) = GaussianRational(Rational(1, 2));
    a.at1(2, 3) = GaussianRational(1);
    a.at1(3, 1) = GaussianRational(-1);
    a.at1(3, 3) = GaussianRational(3);
    Matrix inv = a.inverse();
    CHECK(a * inv == Matrix::identity(3));
    CHECK(inv * a == Matrix::identity(3));
    CHECK(a.det() * inv.det() == GaussianRational(1));
    CHECK(Matrix::identity(4).det() == GaussianRational(1));
}

TEST_CASE("determinant is multiplicative on random exact matrices") {
    std::mt19937_64 rng(11);
    auto rnd_matrix = [&rng](int n) {
        Matrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                m(r, c) = GaussianRational(Rational(std::int64_t(rng() % 7) - 3),
                                           Rational(std::int64_t(rng() % 3) - 1));
        return m;
    };
    for (int k = 0; k < 40; ++k) {
        Matrix a = rnd_matrix(4), b = rnd_matrix(4);
        CHECK((a * b).det() == a.det() * b.det());
        CHECK(a.transpose().det() == a.det());
    }
}

TEST_CASE("nilpotent exponential") {
    Matrix n(3, 3);
    n.at1(1, 2) = GaussianRational(2);
    n.at1(2, 3) = GaussianRational(Rational(1, 3));
    Matrix e = Matrix::exp_nilpotent(n);
    CHECK(e.at1(1, 2) == GaussianRational(2));
    CHECK(e.at1(1, 3) == GaussianRational(Rational(1, 3)));  // 2 * (1/3) / 2
    Matrix e_neg = Matrix::exp_nilpotent(GaussianRational(-1) * n);
    CHECK(e * e_neg == Matrix::identity(3));
    CHECK_THROWS_AS(Matrix::exp_nilpotent(Matrix::identity(2)), std::domain_error);
}
