#include "doctest.h"

#include "qv/quartic4.hpp"

#include <algorithm>

using namespace qv;

namespace {

const FieldCtx& F() { return FieldCtx::default_ctx(); }
CycNum q(long a, long b = 1) { return CycNum(F(), make_rational(a, b)); }

Vec ints(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(CycNum(F(), x));
    return v;
}

bool same_point_set(std::vector<Vec> a, std::vector<Vec> b) {
    if (a.size() != b.size()) return false;
    for (const Vec& p : a)
        if (std::none_of(b.begin(), b.end(), [&](const Vec& x) { return projectively_equal(p, x); })) return false;
    return true;
}

}  // namespace

TEST_CASE("P4: orbits of S6") {
    P4Orbits o = build_orbits(F());
    for (const auto* orb : {&o.sigma6, &o.sigma10, &o.sigma15, &o.sigma30})
        for (const Vec& p : *orb) {
            CycNum s;
            for (const CycNum& x : p) s += x;
            CHECK(s.is_zero());
        }
    CHECK(o.lines15.size() == 15);
    // every point of Sigma30 lies on one of the fifteen lines
    for (const Vec& p : o.sigma30)
        CHECK(std::any_of(o.lines15.begin(), o.lines15.end(), [&](const Line6& l) { return l.contains(p); }));
    CHECK(power_sum6(F(), 2).eval(ints({-5, 1, 1, 1, 1, 1})) == CycNum(F(), 30));
    CHECK(!power_sum6(F(), 2).eval(o.sigma10.front()).is_zero());
}

TEST_CASE("P4: the t-conditions for singular points") {
    P4Orbits o = build_orbits(F());
    TCondition c30 = singular_t_condition(o.sigma30.front());
    CHECK(c30.kind == TCondition::All);
    struct Row {
        const std::vector<Vec>* orb;
        CycNum t;
    };
    for (const Row& r : {Row{&o.sigma6, q(7, 10)}, Row{&o.sigma10, q(1, 6)}, Row{&o.sigma15, q(1, 2)}}) {
        TCondition c = singular_t_condition(r.orb->front());
        CHECK(c.kind == TCondition::Value);
        CHECK(c.value == r.t);
        // independent evaluation of the gradient of F_t itself
        CHECK(is_singular_point(r.orb->back(), r.t));
        CHECK(!is_singular_point(r.orb->back(), r.t + q(1)));
        CHECK(quartic_ft(F(), r.t).eval(r.orb->front()).is_zero());
    }
    CHECK(singular_t_condition(ints({1, 2, -3, 0, 0, 0})).kind == TCondition::None);
}

TEST_CASE("P4: the fifteen lines are singular exactly at t = 1/4") {
    P4Orbits o = build_orbits(F());
    for (const Line6& l : o.lines15) {
        TCondition c = line_singular_t_condition(l);
        CHECK(c.kind == TCondition::Value);
        CHECK(c.value == q(1, 4));
    }
    CHECK(singular_along_line(o.lines15.front(), q(1, 4)));
    CHECK(!singular_along_line(o.lines15.front(), q(1, 2)));
}

TEST_CASE("P4: nodes") {
    P4Orbits o = build_orbits(F());
    CHECK(node_rank(o.sigma6.front(), q(7, 10)) == 4);
    CHECK(node_rank(o.sigma10.front(), q(1, 6)) == 4);
    CHECK(node_rank(o.sigma15.front(), q(1, 2)) == 4);
    for (long t : {0, 1}) CHECK(node_rank(o.sigma30.front(), q(t)) == 4);
    CHECK(node_rank(o.sigma30.front(), q(7, 10)) == 4);
    CHECK_THROWS(node_rank(o.sigma6.front(), q(1, 2)));
}

TEST_CASE("P4: short orbits of A6 and of the nonstandard S5") {
    P4Orbits o = build_orbits(F());
    auto a6 = orbit_census_p4(F(), named_group("A6"), 6);
    REQUIRE(a6.size() == 1);
    CHECK(same_point_set(a6.front(), o.sigma6));

    std::vector<Mat> d12;
    for (const Perm& p : named_group("D12nst").gens()) d12.push_back(w5_model(F(), p));
    int md = 0;
    auto fixed = joint_eigenvectors(d12, &md);
    REQUIRE(fixed.size() == 1);
    CHECK(md == 1);
    auto orb = coordinate_orbit(normalize_projective(hyperplane_to_six(fixed.front())), named_group("S5nst"));
    CHECK(same_point_set(orb, o.sigma10));
}

TEST_CASE("arithmetic: Riemann-Hurwitz search and small identities") {
    CHECK(rh_search(360, {72, 90, 120, 180, 360}, 2, 15) == std::set<int>{10});
    CHECK(rh_search(360, {72, 90, 120, 180, 360}, 0, 1).count(1) == 1);
    CHECK(rh_search(360, {72, 90, 120, 180, 360}, 2, 1).empty());
    // free orbits only: 2g - 2 = 360 (2 gq - 2)
    CHECK(rh_search(360, {360}, 2, 400) == std::set<int>{361});
    CHECK_THROWS(rh_search(360, {7}, 2, 10));
    auto n = numeric_identities();
    CHECK(n.det == 300);
    CHECK(n.six_line_degree == 4);
    CHECK(n.ten_line_degree == 14);
}

TEST_CASE("image of P3: six lines give t = 7/10, ten lines give t = 1/6") {
    const P3Scene& sc = p3_scene(F());
    const CoverGroup& g = spin_cover(F());
    P4Orbits o = build_orbits(F());

    auto six = system_through_lines(sc.six1, 4);
    ImageResult r6 = identify_image(g, named_group("A6"), six);
    REQUIRE(r6.found);
    CHECK(r6.t == q(7, 10));

    // the six cubics are contracted to Sigma6
    std::vector<Vec> images;
    for (const CurveParam& c : sc.cubic_orbit1) {
        Contraction k = contraction_check(r6.q, c);
        CHECK(k.contracted);
        images.push_back(k.image);
    }
    CHECK(same_point_set(images, o.sigma6));
    ProjLine generic = ProjLine::through(ints({1, 2, 0, -1}), ints({0, 1, 3, 1}));
    CHECK(!contraction_check(r6.q, line_param(generic.a, generic.b)).contracted);

    std::vector<ProjLine> ten = sc.L;
    ten.insert(ten.end(), sc.Lp.begin(), sc.Lp.end());
    ImageResult r10 = identify_image(g, named_group("S5nst"), system_through_lines(ten, 4));
    REQUIRE(r10.found);
    CHECK(r10.t == q(1, 6));
    ProjLine lam = plane_intersection(sc.L[0], sc.Lp[1], sc.Lp[0], sc.L[1]);
    Contraction k = contraction_check(r10.q, line_param(lam.a, lam.b));
    CHECK(k.contracted);
    CHECK(is_singular_point(k.image, q(1, 6)));
}
