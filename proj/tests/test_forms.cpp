#include "doctest.h"

#include "qv/forms.hpp"
#include "qv/rep.hpp"

#include <random>

using namespace qv;

namespace {

const FieldCtx& F() { return FieldCtx::default_ctx(); }

MForm power_sum(int n, int d) {
    MForm f(F(), n, d);
    for (int i = 0; i < n; ++i) f += MForm::variable(F(), n, i).pow(d);
    return f;
}

MForm random_form(std::mt19937& rng, int n, int d) {
    std::uniform_int_distribution<int> coef(-3, 3);
    Vec c;
    for (long i = 0; i < monomial_count(n, d); ++i) c.push_back(CycNum(F(), coef(rng)) + CycNum::zeta(F(), coef(rng) + 3) * Rational(coef(rng)));
    return MForm::from_coeffs(F(), n, d, c);
}

Vec ints(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(CycNum(F(), x));
    return v;
}

std::vector<Mat> cover_gens(const std::string& name) {
    const CoverGroup& g = spin_cover(F());
    std::vector<Mat> out;
    for (int id : g.lift_generators(named_group(name))) out.push_back(g.matrix(id));
    return out;
}

}  // namespace

TEST_CASE("forms: arithmetic, products and the serial reference") {
    std::mt19937 rng(0);
    MForm a = random_form(rng, 4, 3), b = random_form(rng, 4, 5);
    CHECK(a * b == multiply_serial(a, b));
    CHECK((a * b).degree() == 8);
    Vec p = ints({1, -2, 3, 1});
    CHECK((a * b).eval(p) == a.eval(p) * b.eval(p));
    CHECK((a + a).eval(p) == a.eval(p) * Rational(2));
    CHECK((a - a).is_zero());
    MForm big = random_form(rng, 4, 8);
    CHECK(big * big == multiply_serial(big, big));
}

TEST_CASE("forms: Euler identity and gradients") {
    std::mt19937 rng(1);
    MForm f = random_form(rng, 4, 4);
    Vec p = ints({2, -1, 0, 5});
    CHECK(dot(p, gradient(f, p)) == f.eval(p) * Rational(4));

    MForm s4 = power_sum(6, 4), s2 = power_sum(6, 2);
    CHECK(gradient(s4, ints({-5, 1, 1, 1, 1, 1})) == ints({-500, 4, 4, 4, 4, 4}));
    CycNum w = CycNum::root_of_unity(F(), 1, 3), one(F(), 1);
    Vec q = {one, one, w, w, w * w, w * w};
    CHECK(gradient(s4, q) == ints({4, 4, 4, 4, 4, 4}));
    CHECK(s2.eval(q).is_zero());
}

TEST_CASE("forms: substitution and the action") {
    MForm s4 = power_sum(6, 4);
    CHECK(act(Mat::identity(F(), 6), s4) == s4);
    CHECK(act(so6_model(F(), Perm::parse("(012)(345)")), s4) == s4);
    MForm q = power_sum(6, 2);
    for (const Perm& p : {Perm::parse("(01)"), Perm::parse("(012345)")}) CHECK(act(so6_model(F(), p), q) == q);

    // left action axiom on a random quartic
    std::mt19937 rng(2);
    MForm f = random_form(rng, 4, 4);
    const CoverGroup& g = spin_cover(F());
    for (int a : {3, 77, 500})
        for (int b : {11, 900}) CHECK(act(g.matrix(g.mul(a, b)), f) == act(g.matrix(a), act(g.matrix(b), f)));
}

TEST_CASE("forms: Hessian rank") {
    // x y + z^2 as a cone in P^3, vertex (0:0:0:1)
    MForm x = MForm::variable(F(), 4, 0), y = MForm::variable(F(), 4, 1), z = MForm::variable(F(), 4, 2);
    MForm f = x * y + z * z;
    std::vector<Vec> dirs;
    for (int i = 0; i < 4; ++i) dirs.push_back(Mat::identity(F(), 4).row(i));
    CHECK(hessian_rank_affine(f, ints({0, 0, 0, 1}), dirs) == 3);
    CHECK_THROWS(hessian_rank_affine(f, ints({1, 0, 0, 1}), dirs));
}

TEST_CASE("forms: invariant spaces match character multiplicities") {
    const CoverGroup& g = spin_cover(F());
    auto cd = class_data(g);
    Character chi = dual(character_from(cd, [&](int id) { return g.matrix(id).trace(); }));
    auto counts = fusion_counts(cd.classes, g.preimage(named_group("A5nst")));
    auto gens = cover_gens("A5nst");
    for (int d = 1; d <= 4; ++d) {
        auto inv = invariant_forms(gens, d);
        Rational m = trivial_multiplicity(counts, sym_power_character(cd, chi, d));
        CHECK(Rational(static_cast<long>(inv.size())) == m);
    }
    CHECK(invariant_forms(gens, 4).size() == 2);
    CHECK(invariant_forms(cover_gens("A6"), 4).empty());
    for (const auto& f : invariant_forms(gens, 4))
        for (const Mat& m : gens) CHECK(act(m, f) == f);
}

TEST_CASE("forms: S6-invariant quartics on the sum-zero hyperplane") {
    std::vector<Mat> gens = {w5_model(F(), Perm::parse("(01)")), w5_model(F(), Perm::parse("(012345)"))};
    auto inv = invariant_forms(gens, 4);
    CHECK(inv.size() == 2);
    // x_i = y_i for i < 5 and x_5 = -(y_0 + ... + y_4)
    std::vector<MForm> subs;
    for (int i = 0; i < 5; ++i) subs.push_back(MForm::variable(F(), 5, i));
    subs.push_back(-MForm::linear(F(), ints({1, 1, 1, 1, 1})));
    MForm s4 = substitute(power_sum(6, 4), subs), s2 = substitute(power_sum(6, 2), subs);
    std::vector<Vec> span = {s4.coeff_vector(), (s2 * s2).coeff_vector()};
    for (const auto& f : inv) span.push_back(f.coeff_vector());
    CHECK(rank(Mat::from_rows(F(), span)) == 2);
}

TEST_CASE("binary forms: gcd, roots, squares") {
    MForm s = MForm::variable(F(), 2, 0), t = MForm::variable(F(), 2, 1);
    MForm g = binary_gcd(s * s * t, s * t * t);
    CHECK(g.degree() == 2);
    CHECK(rank(Mat::from_rows(F(), {g.coeff_vector(), (s * t).coeff_vector()})) == 1);
    CHECK(binary_gcd(s * s, t * t).degree() == 0);
    CHECK(distinct_root_count(s * s * t) == 2);
    CHECK(is_squarefree(s * t * (s + t)));
    CHECK(!is_squarefree(s * s * t));
    CHECK(binary_gcd(s.pow(3), s * t).degree() == 1);

    // a quadric restricted to a tangent line is a square
    MForm x0 = MForm::variable(F(), 4, 0), x1 = MForm::variable(F(), 4, 1), x2 = MForm::variable(F(), 4, 2),
          x3 = MForm::variable(F(), 4, 3);
    MForm Q = x0 * x1 - x2 * x3;
    // tangent plane at (1:0:0:0) is x1 = 0; a line in it through that point
    MForm r = restrict(Q, line_param(ints({1, 0, 0, 0}), ints({0, 0, 1, 1})));
    CHECK(is_square_quadratic(r));
    MForm r2 = restrict(Q, line_param(ints({1, 0, 0, 0}), ints({0, 1, 1, 0})));
    CHECK(!is_square_quadratic(r2));
    CHECK(restrict(Q, line_param(ints({1, 0, 0, 0}), ints({0, 0, 1, 0}))).is_zero());
}
