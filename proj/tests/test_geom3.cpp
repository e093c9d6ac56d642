#include "doctest.h"

#include "qv/geom3.hpp"

#include <algorithm>

using namespace qv;

namespace {

const FieldCtx& F() { return FieldCtx::default_ctx(); }
const CoverGroup& G() { return spin_cover(F()); }

Vec ints(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(CycNum(F(), x));
    return v;
}

std::vector<int> lengths(const std::vector<OrbitInfo>& orbits) {
    std::vector<int> out;
    for (const auto& o : orbits) out.push_back(o.length);
    return out;
}

std::vector<OrbitInfo> census(const std::string& group, int bound) {
    const PermGroup& h = named_group(group);
    return small_orbit_census(generator_matrices(G(), h), census_candidates(F(), &G(), h, bound), bound);
}

bool projectively_same_form(const MForm& a, const MForm& b) {
    return rank(Mat::from_rows(F(), {a.coeff_vector(), b.coeff_vector()})) == 1;
}

}  // namespace

TEST_CASE("lines: Plucker coordinates, incidence and transversals") {
    ProjLine x = ProjLine::through(ints({1, 0, 0, 0}), ints({0, 1, 0, 0}));
    ProjLine y = ProjLine::through(ints({0, 0, 1, 0}), ints({0, 0, 0, 1}));
    ProjLine z = ProjLine::through(ints({1, 0, 1, 0}), ints({0, 1, 0, 0}));
    CHECK(plucker_quadric(x.coords).is_zero());
    CHECK(!lines_meet(x, y));
    CHECK(lines_meet(x, z));
    CHECK(ProjLine::from_plucker(y.coords) == y);
    CHECK(x.contains(ints({3, -2, 0, 0})));
    CHECK(!x.contains(ints({0, 0, 0, 1})));

    // four rulings of x0 x3 = x1 x2 from one family: infinitely many transversals
    auto ruling = [](long k) { return ProjLine::through(ints({1, 0, k, 0}), ints({0, 1, 0, k})); };
    auto deg = transversals({ruling(0), ruling(1), ruling(2), ruling(3)});
    CHECK(deg.degenerate);
    CHECK_THROWS(transversals({x, z, y, ruling(5)}));

    // lines of the other family meet every ruling
    auto other = [](long k) { return ProjLine::through(ints({1, k, 0, 0}), ints({0, 0, 1, k})); };
    for (long k : {0, 1, 2}) CHECK(lines_meet(ruling(k), other(7)));
}

TEST_CASE("geometry: the ten lines form a double five") {
    const P3Scene& sc = p3_scene(F());
    REQUIRE(sc.L.size() == 5);
    CHECK(is_double_five(sc.L, sc.Lp));
    auto prof = incidence_profile(sc.L);
    for (const auto& row : prof) CHECK(std::count(row.begin(), row.end(), 1) == 0);

    // the orbit of L_1 under A5 is exactly L_1..L_5
    auto orb = line_orbit(sc.L[0], generator_matrices(G(), named_group("A5nst")));
    CHECK(orb.size() == 5);
    // under S5 it is all ten lines
    auto orb10 = line_orbit(sc.L[0], generator_matrices(G(), named_group("S5nst")));
    CHECK(orb10.size() == 10);
    for (const auto& l : sc.Lp) CHECK(std::find(orb10.begin(), orb10.end(), l) != orb10.end());

    // the unique transversal to four of the L_i is the matching L'_j
    for (std::size_t skip = 0; skip < 5; ++skip) {
        std::vector<ProjLine> four;
        for (std::size_t i = 0; i < 5; ++i)
            if (i != skip) four.push_back(sc.L[i]);
        auto t = transversals({four[0], four[1], four[2], four[3]});
        CHECK(!t.degenerate);
        CHECK(t.count == 1);
        REQUIRE(t.lines.size() == 1);
        CHECK(t.lines[0] == sc.Lp[skip]);
        auto tp = transversals({sc.Lp[(skip + 1) % 5], sc.Lp[(skip + 2) % 5], sc.Lp[(skip + 3) % 5], sc.Lp[(skip + 4) % 5]});
        REQUIRE(tp.lines.size() == 1);
        CHECK(tp.lines[0] == sc.L[skip]);
    }

    // the quadric through three of the L'_i
    CHECK(quadric_tangency_check(sc.Lp[0], sc.Lp[1], sc.Lp[2], sc.Lp[3]) == Tangency::Tangent);
    CHECK(quadric_tangency_check(sc.Lp[0], sc.Lp[1], sc.Lp[2], sc.L[3]) == Tangency::Contained);
    ProjLine generic = ProjLine::through(ints({1, 2, 0, -1}), ints({0, 1, 3, 1}));
    CHECK(quadric_tangency_check(sc.Lp[0], sc.Lp[1], sc.Lp[2], generic) == Tangency::Transversal);
}

TEST_CASE("geometry: Lambda lines and their stabilizers") {
    const P3Scene& sc = p3_scene(F());
    ProjLine lam = plane_intersection(sc.L[0], sc.Lp[1], sc.Lp[0], sc.L[1]);
    PermGroup st = line_stabilizer(G(), named_group("S5nst"), lam);
    CHECK(st.order() % 12 == 0);
}

TEST_CASE("geometry: the two sextets") {
    const P3Scene& sc = p3_scene(F());
    REQUIRE(sc.six1.size() == 6);
    std::vector<ProjLine> all = sc.six1;
    all.insert(all.end(), sc.six2.begin(), sc.six2.end());
    for (const auto& row : incidence_profile(all)) CHECK(std::count(row.begin(), row.end(), 1) == 0);
    auto a6 = generator_matrices(G(), named_group("A6"));
    CHECK(line_orbit(sc.six1[0], a6).size() == 6);
    CHECK(line_orbit(sc.six2[0], a6).size() == 6);
    CHECK(line_orbit(sc.six1[0], generator_matrices(G(), named_group("S6"))).size() == 12);
    CHECK_THROWS(fixed_lines(G(), named_group("A6")));
}

TEST_CASE("geometry: small orbits") {
    CHECK(lengths(census("A5nst", 15)) == std::vector<int>{10, 10, 12, 12});
    CHECK(census("A6", 15).empty());
    CHECK(census("S5nst", 11).empty());
    // every listed point really has the stated orbit length
    for (const auto& o : census("A5nst", 15))
        CHECK(static_cast<int>(point_orbit(o.rep, generator_matrices(G(), named_group("A5nst"))).size()) == o.length);
}

TEST_CASE("geometry: twisted cubics") {
    const P3Scene& sc = p3_scene(F());
    const auto& a5 = named_group("A5nst");
    // A5nst splits quadrics as 3 + 3 + 4
    std::vector<int> dims;
    for (const auto& p : quadric_pieces(G(), a5)) dims.push_back(static_cast<int>(p.size()));
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<int>{3, 3, 4});

    for (std::size_t k = 0; k < 2; ++k) {
        const CurveParam& c = sc.cubics[k].param;
        // each generator maps the curve into the zero set of its quadrics
        for (const Mat& m : generator_matrices(G(), a5))
            for (const MForm& q : sc.cubic_quadrics[k]) CHECK(restrict(q, apply(m, c)).is_zero());
        // the curve is not in the zero set of the other family
        CHECK(common_zero_degree(sc.cubic_quadrics[1 - k], c) == 0);
    }

    // each cubic meets every line of one sextet in two points and misses the other sextet
    for (const ProjLine& l : sc.six1) {
        CHECK(curve_line_intersection_degree(sc.cubics[0].param, l) == 2);
        CHECK(curve_line_intersection_degree(sc.cubics[1].param, l) == 0);
    }
    for (const ProjLine& l : sc.six2) {
        CHECK(curve_line_intersection_degree(sc.cubics[1].param, l) == 2);
        CHECK(curve_line_intersection_degree(sc.cubics[0].param, l) == 0);
    }
    // the same holds for the whole orbit of the first cubic
    REQUIRE(sc.cubic_orbit1.size() == 6);
    for (const CurveParam& c : sc.cubic_orbit1)
        for (const ProjLine& l : sc.six1) CHECK(curve_line_intersection_degree(c, l) == 2);
}

TEST_CASE("geometry: tangent developables and the invariant pencil") {
    const P3Scene& sc = p3_scene(F());
    auto gens = generator_matrices(G(), named_group("A5nst"));
    auto inv = invariant_forms(gens, 4);
    REQUIRE(inv.size() == 2);
    const MForm &s1 = sc.developables[0], &s2 = sc.developables[1];
    CHECK(!projectively_same_form(s1, s2));
    for (const MForm& s : {s1, s2}) {
        for (const Mat& m : gens) CHECK(act(m, s) == s);
        std::vector<Vec> span = {inv[0].coeff_vector(), inv[1].coeff_vector(), s.coeff_vector()};
        CHECK(rank(Mat::from_rows(F(), span)) == 2);
    }
    // singular along the curve: gradient vanishes at sample points
    for (std::size_t k = 0; k < 2; ++k)
        for (long u : {0, 1, -3}) {
            Vec p = sc.cubics[k].param.point(CycNum(F(), 1), CycNum(F(), u));
            CHECK(is_zero(gradient(sc.developables[k], p)));
        }

    // the members through the length-10 orbits are nodal there
    auto orbits = census("A5nst", 15);
    REQUIRE(orbits.size() == 4);
    std::vector<Vec> dirs;
    for (int i = 0; i < 4; ++i) dirs.push_back(Mat::identity(F(), 4).row(i));
    std::vector<MForm> members = {s1, s2};
    for (std::size_t k = 0; k < 2; ++k) {
        MForm r = pencil_member_through(s1, s2, orbits[k].rep);
        members.push_back(r);
        for (const Vec& p : orbits[k].points) {
            CHECK(is_zero(gradient(r, p)));
            CHECK(hessian_rank_affine(r, p, dirs) == 3);
        }
        for (const Vec& p : orbits[1 - k].points) CHECK(!r.eval(p).is_zero());
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) CHECK(!projectively_same_form(members[i], members[j]));

    // a generic member is smooth at every short-orbit point
    MForm generic = s1 + s2 * CycNum(F(), 3);
    for (const auto& o : orbits) CHECK(!is_zero(gradient(generic, o.rep)));

    // S^1 cuts C^2 in a length-12 orbit
    for (std::size_t k = 0; k < 2; ++k) {
        MForm r = restrict(sc.developables[k], sc.cubics[1 - k].param);
        CHECK(r.degree() == 12);
        CHECK(is_squarefree(r));
        int hits = 0;
        for (const auto& o : orbits) {
            if (o.length != 12) continue;
            bool on_curve = true, on_surface = true;
            for (const Vec& p : o.points) {
                for (const MForm& q : sc.cubic_quadrics[1 - k]) on_curve = on_curve && q.eval(p).is_zero();
                on_surface = on_surface && sc.developables[k].eval(p).is_zero();
            }
            if (on_curve && on_surface) ++hits;
        }
        CHECK(hits == 1);
    }
}

TEST_CASE("geometry: quartics through line configurations") {
    const P3Scene& sc = p3_scene(F());
    CHECK(system_through_lines(sc.six1, 4).size() == 5);
    CHECK(system_through_lines(sc.six2, 4).size() == 5);

    auto through5 = system_through_lines(sc.L, 4, generator_matrices(G(), named_group("A5nst")));
    REQUIRE(through5.size() == 1);
    for (const ProjLine& l : sc.Lp) CHECK(!restrict(through5[0], line_param(l.a, l.b)).is_zero());

    std::vector<ProjLine> ten = sc.L;
    ten.insert(ten.end(), sc.Lp.begin(), sc.Lp.end());
    CHECK(system_through_lines(ten, 4).size() == 5);
}
