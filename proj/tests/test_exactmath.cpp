#include "doctest.h"
#include "qv/linalg.hpp"

#include <random>

using namespace qv;

namespace {

CycNum random_cyc(const FieldCtx& F, std::mt19937& rng, int terms = 4) {
    std::uniform_int_distribution<long> coef(-5, 5), den(1, 4), idx(0, F.order() - 1);
    CycNum x(F, 0);
    for (int t = 0; t < terms; ++t) x += CycNum::zeta(F, idx(rng)) * make_rational(coef(rng), den(rng));
    return x;
}

}  // namespace

TEST_CASE("cyclotomic polynomials have the right degree and zeta is a root") {
    for (long n : {1, 2, 3, 4, 5, 8, 12, 15, 24, 60, 120}) {
        auto p = cyclotomic_polynomial(n);
        CHECK(static_cast<long>(p.size()) - 1 == euler_phi(n));
    }
    // Phi_12 = x^4 - x^2 + 1
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(FieldCtx::get(120).degree() == 32);
}

TEST_CASE("basic cyclotomic identities") {
    const FieldCtx& F3 = FieldCtx::get(3);
    CycNum w = CycNum::zeta(F3, 1);
    CHECK((w * w + w + CycNum(F3, 1)).is_zero());
    CycNum s = w - w * w;
    CHECK(s * s == CycNum(F3, -3));

    const FieldCtx& F = FieldCtx::default_ctx();
    CHECK(CycNum::zeta(F, 60) == CycNum(F, -1));
    CHECK(CycNum::zeta(F, 120).is_one());
    CycNum i = CycNum::root_of_unity(F, 1, 4);
    CHECK(i * i == CycNum(F, -1));
}

TEST_CASE("embedding and restriction") {
    const FieldCtx& F3 = FieldCtx::get(3);
    const FieldCtx& F = FieldCtx::default_ctx();
    CHECK(embed(CycNum::zeta(F3, 1), F) == CycNum::zeta(F, 40));
    CHECK(embed(CycNum(F3, 1), F).is_one());
    CHECK_THROWS_AS(embed(CycNum::zeta(F, 1), F3), std::invalid_argument);
    CHECK_THROWS_AS(restrict_to(CycNum::root_of_unity(F, 1, 4), F3), std::domain_error);
    CHECK(restrict_to(CycNum::zeta(F, 40), F3) == CycNum::zeta(F3, 1));

    std::mt19937 rng(7);
    const FieldCtx& F12 = FieldCtx::get(12);
    for (int k = 0; k < 20; ++k) {
        CycNum a = random_cyc(F12, rng), b = random_cyc(F12, rng);
        CHECK(embed(a * b, F) == embed(a, F) * embed(b, F));
        CHECK(embed(a + b, F) == embed(a, F) + embed(b, F));
        CHECK(restrict_to(embed(a, F), F12) == a);
    }
}

TEST_CASE("field axioms on random triples") {
    const FieldCtx& F = FieldCtx::default_ctx();
    std::mt19937 rng(1);
    for (int k = 0; k < 15; ++k) {
        CycNum a = random_cyc(F, rng), b = random_cyc(F, rng), c = random_cyc(F, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK((a * a.inverse()).is_one());
            CHECK((b / a) * a == b);
        }
        // Galois maps are ring homomorphisms.
        CHECK((a * b).galois(7) == a.galois(7) * b.galois(7));
    }
    CHECK_THROWS(CycNum(F, 0).inverse());
}

TEST_CASE("norm agrees with product over all Galois conjugates") {
    const FieldCtx& F = FieldCtx::get(15);
    std::mt19937 rng(3);
    for (int k = 0; k < 5; ++k) {
        CycNum a = random_cyc(F, rng);
        CycNum p(F, 1);
        for (long u : F.units()) p = p * a.galois(u);
        CHECK(p.is_rational());
        CHECK(p.rational_value() == a.norm());
    }
}

TEST_CASE("square roots of rationals") {
    const FieldCtx& F = FieldCtx::default_ctx();
    for (long r : {2L, 3L, 5L, 6L, 10L, 15L, -1L, -2L, -3L, -5L, -15L, 30L, 12L}) {
        CycNum s = sqrt_rational(F, Rational(r));
        CHECK(s * s == CycNum(F, r));
    }
    CycNum q = sqrt_rational(F, make_rational(64, 3));
    CHECK(q * q == CycNum(F, make_rational(64, 3)));
    // sqrt(5) is real and positive: 2*cos(2pi/5)*2 + 1 = sqrt(5) with zeta_5 + zeta_5^-1 = (sqrt5 - 1)/2
    CycNum z5 = CycNum::root_of_unity(F, 1, 5);
    CHECK(sqrt_rational(F, Rational(5)) == (z5 + z5.conj()) * Rational(2) + CycNum(F, 1));
    CHECK(sqrt_conductor(Rational(-3)) == 3);
    CHECK(sqrt_conductor(Rational(3)) == 12);
    CHECK(sqrt_conductor(Rational(2)) == 8);
    CHECK(sqrt_conductor(Rational(-1)) == 4);
    CHECK(sqrt_conductor(Rational(7)) == 28);
}

TEST_CASE("missing roots report the minimal field") {
    const FieldCtx& F15 = FieldCtx::get(15);
    try {
        CycNum::root_of_unity(F15, 1, 4);
        FAIL("expected FieldTooSmall");
    } catch (const FieldTooSmall& e) {
        CHECK(e.required == 60);
    }
    try {
        sqrt_rational(FieldCtx::default_ctx(), Rational(7));
        FAIL("expected FieldTooSmall");
    } catch (const FieldTooSmall& e) {
        CHECK(e.required == 840);
    }
    // Odd N contains the 2N-th roots.
    CHECK(CycNum::root_of_unity(F15, 1, 30) * CycNum::root_of_unity(F15, 1, 30) == CycNum::zeta(F15, 1));
}

TEST_CASE("kernel, rank and solve") {
    const FieldCtx& F = FieldCtx::default_ctx();
    CHECK(kernel(Mat(F, 3, 3)).size() == 3);
    CHECK(kernel(Mat::identity(F, 4)).empty());

    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        // Rank-deficient product of random 5x3 and 3x6 factors.
        Mat A(F, 5, 3), B(F, 3, 6);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 3; ++j) A(i, j) = random_cyc(F, rng, 2);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 6; ++j) B(i, j) = random_cyc(F, rng, 2);
        Mat M = A * B;
        CHECK(M == mul_serial(A, B));
        auto K = kernel(M);
        CHECK(rank(M) + static_cast<int>(K.size()) == 6);
        for (const auto& v : K) CHECK(is_zero(M * v));
        RREF p = rref(M), s = rref_serial(M);
        CHECK(p.m == s.m);
        CHECK(p.pivots == s.pivots);

        Vec x(6, CycNum(F, 0));
        for (auto& e : x) e = random_cyc(F, rng, 2);
        Vec b = M * x;
        auto sol = solve(M, b);
        REQUIRE(sol.has_value());
        CHECK(M * *sol == b);
    }
    Mat Z = Mat::from_integers(F, {{1, 0}, {0, 0}});
    CHECK_FALSE(solve(Z, Vec{CycNum(F, 0), CycNum(F, 1)}).has_value());
}

TEST_CASE("determinant, inverse and characteristic polynomial") {
    const FieldCtx& F = FieldCtx::default_ctx();
    Mat A = Mat::from_integers(F, {{-10, 20, 5}, {20, -10, 5}, {5, 5, 4}});
    CHECK(det(A) == CycNum(F, 300));
    auto inv = inverse(A);
    REQUIRE(inv.has_value());
    CHECK((A * *inv).is_identity());
    CHECK_FALSE(inverse(Mat::from_integers(F, {{1, 2}, {2, 4}})).has_value());

    std::mt19937 rng(5);
    Mat B(F, 4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) B(i, j) = random_cyc(F, rng, 2);
    auto cp = charpoly(B);
    // Oracle: p(x) = det(xI - B) at a few rational points.
    for (long x0 : {0L, 1L, -2L}) {
        Mat xI = Mat::identity(F, 4) * CycNum(F, x0) - B;
        CycNum val(F, 0), pw(F, 1);
        for (const auto& c : cp) {
            val += c * pw;
            pw = pw * CycNum(F, x0);
        }
        CHECK(val == det(xI));
    }
}

TEST_CASE("eigenspaces of a finite-order matrix") {
    const FieldCtx& F = FieldCtx::default_ctx();
    CHECK(eigenspace_root_of_unity(Mat::identity(F, 3), 0, 1).size() == 3);
    // 5-cycle permutation matrix: each 5th root of unity once.
    Mat P(F, 5, 5);
    for (int i = 0; i < 5; ++i) P((i + 1) % 5, i) = CycNum(F, 1);
    CHECK(matrix_order(P) == 5);
    int total = 0;
    for (long k = 0; k < 5; ++k) {
        auto E = eigenspace_root_of_unity(P, k, 5);
        CHECK(E.size() == 1);
        total += static_cast<int>(E.size());
    }
    CHECK(total == 5);
    CHECK_THROWS_AS(eigenspace_root_of_unity(Mat::identity(FieldCtx::get(15), 2), 1, 4), FieldTooSmall);
}

TEST_CASE("span intersection") {
    const FieldCtx& F = FieldCtx::default_ctx();
    auto e = [&](std::vector<long> v) {
        Vec r;
        for (long x : v) r.emplace_back(F, x);
        return r;
    };
    auto I = intersect_spans(F, {e({1, 0, 0, 0}), e({0, 1, 0, 0}), e({0, 0, 1, 0})}, {e({0, 1, 0, 0}), e({0, 0, 1, 1})}, 4);
    REQUIRE(I.size() == 1);
    CHECK(projectively_equal(I[0], e({0, 1, 0, 0})));
}
