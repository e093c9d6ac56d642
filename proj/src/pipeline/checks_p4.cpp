#include "workspace.hpp"

#include <algorithm>

namespace qv::pipeline {

namespace {

bool same_point_set(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    if (a.size() != b.size()) return false;
    for (const Vec& p : a)
        if (std::none_of(b.begin(), b.end(), [&](const Vec& x) { return projectively_equal(p, x); })) return false;
    return true;
}

json tcondition_json(const TCondition& c) {
    json j = {{"kind", c.kind == TCondition::All ? "all" : c.kind == TCondition::Value ? "value" : "none"}};
    if (c.kind == TCondition::Value) j["t"] = rational_or_cyc(c.value);
    return j;
}

void p4_orbits(Workspace& ws, Witness& w) {
    const P4Orbits& o = ws.p4_orbits();
    struct Named {
        const char* name;
        const std::vector<Vec>* pts;
        int len;
    };
    for (const Named& n : {Named{"Sigma6", &o.sigma6, 6}, Named{"Sigma10", &o.sigma10, 10}, Named{"Sigma15", &o.sigma15, 15},
                           Named{"Sigma30", &o.sigma30, 30}}) {
        w[std::string(n.name) + "_length"] = n.pts->size();
        w[std::string(n.name) + "_seed"] = n.pts->front();
        w.expect(std::string(n.name) + " length", static_cast<int>(n.pts->size()), n.len);
        for (const Vec& p : *n.pts) {
            CycNum s;
            for (const CycNum& x : p) s += x;
            if (!s.is_zero()) w.mismatch({{"what", "point off the hyperplane"}, {"orbit", n.name}, {"point", p}});
        }
    }
    w["L15_length"] = o.lines15.size();
    w.expect("L15 length", static_cast<int>(o.lines15.size()), 15);
}

// Expected singular locus of X_t, by orbit.
bool table_says_singular(const std::string& orbit, const Rational& t) {
    if (orbit == "Sigma30") return true;
    if (orbit == "Sigma6") return t == make_rational(7, 10);
    if (orbit == "Sigma10") return t == make_rational(1, 6);
    if (orbit == "Sigma15") return t == make_rational(1, 2);
    if (orbit == "L15") return t == make_rational(1, 4);
    return false;
}

void p4_singular_table(Workspace& ws, Witness& w) {
    const P4Orbits& o = ws.p4_orbits();
    const std::vector<std::pair<std::string, const std::vector<Vec>*>> orbits = {
        {"Sigma6", &o.sigma6}, {"Sigma10", &o.sigma10}, {"Sigma15", &o.sigma15}, {"Sigma30", &o.sigma30}};

    // the symbolic conditions
    const std::map<std::string, TCondition> want = {{"Sigma6", {TCondition::Value, ws.num(7, 10)}},
                                                    {"Sigma10", {TCondition::Value, ws.num(1, 6)}},
                                                    {"Sigma15", {TCondition::Value, ws.num(1, 2)}},
                                                    {"Sigma30", {TCondition::All, CycNum()}}};
    json conds = json::object();
    for (const auto& [name, pts] : orbits) {
        for (const Vec& p : *pts) {
            TCondition c = singular_t_condition(p);
            const TCondition& e = want.at(name);
            if (c.kind != e.kind || (c.kind == TCondition::Value && c.value != e.value)) {
                w.mismatch({{"what", "t-condition"}, {"orbit", name}, {"point", p}, {"expected", tcondition_json(e)}, {"actual", tcondition_json(c)}});
                break;
            }
        }
        conds[name] = tcondition_json(singular_t_condition(pts->front()));
    }
    w.set("conditions", conds);

    // the table at representative t
    json table = json::array();
    for (auto [a, b] : std::initializer_list<std::pair<int, int>>{{1, 4}, {1, 2}, {1, 6}, {7, 10}, {0, 1}, {1, 1}}) {
        Rational tq = make_rational(a, b);
        CycNum t = ws.num(a, b);
        json row = {{"t", tq}};
        json sing = json::array();
        for (const auto& [name, pts] : orbits) {
            bool s = is_singular_point(pts->front(), t);
            if (s) sing.push_back(name);
            if (s != table_says_singular(name, tq))
                w.mismatch({{"what", "singular point"}, {"t", tq}, {"orbit", name}, {"expected", table_says_singular(name, tq)}, {"actual", s}});
        }
        bool lines = singular_along_line(o.lines15.front(), t);
        if (lines) sing.push_back("L15");
        if (lines != table_says_singular("L15", tq))
            w.mismatch({{"what", "singular line"}, {"t", tq}, {"expected", table_says_singular("L15", tq)}, {"actual", lines}});
        row["singular"] = sing;
        table.push_back(row);
    }
    w.set("table", table);
}

void p4_lines15(Workspace& ws, Witness& w) {
    const P4Orbits& o = ws.p4_orbits();
    for (std::size_t i = 0; i < o.lines15.size(); ++i) {
        TCondition c = line_singular_t_condition(o.lines15[i]);
        if (c.kind != TCondition::Value || c.value != ws.num(1, 4))
            w.mismatch({{"what", "line t-condition"}, {"line", i}, {"expected", "t = 1/4"}, {"actual", tcondition_json(c)}});
        if (!singular_along_line(o.lines15[i], ws.num(1, 4))) w.mismatch({{"what", "not singular at t = 1/4"}, {"line", i}});
    }
    w.set("t", tcondition_json(line_singular_t_condition(o.lines15.front())));
    int outside = 0;
    for (const Vec& p : o.sigma30)
        if (std::none_of(o.lines15.begin(), o.lines15.end(), [&](const Line6& l) { return l.contains(p); })) ++outside;
    w.set("sigma30_points_off_L15", outside);
    w.expect("Sigma30 points off L15", outside, 0);
}

void p4_nodes(Workspace& ws, Witness& w) {
    const P4Orbits& o = ws.p4_orbits();
    struct Case {
        const char* orbit;
        const Vec* p;
        int a, b;
    };
    json rows = json::array();
    std::vector<Case> cases = {{"Sigma6", &o.sigma6.front(), 7, 10}, {"Sigma10", &o.sigma10.front(), 1, 6}, {"Sigma15", &o.sigma15.front(), 1, 2}};
    for (auto [a, b] : std::initializer_list<std::pair<int, int>>{{1, 2}, {1, 6}, {7, 10}, {0, 1}, {1, 1}}) cases.push_back({"Sigma30", &o.sigma30.front(), a, b});
    for (const Case& c : cases) {
        int r = node_rank(*c.p, ws.num(c.a, c.b));
        rows.push_back({{"orbit", c.orbit}, {"t", make_rational(c.a, c.b)}, {"hessian_rank", r}});
        w.expect(std::string(c.orbit) + " at t = " + std::to_string(c.a) + "/" + std::to_string(c.b) + ": Hessian rank", r, 4);
    }
    w.set("nodes", rows);
}

void p4_census(Workspace& ws, Witness& w) {
    const P4Orbits& o = ws.p4_orbits();
    auto a6 = orbit_census_p4(ws.ctx(), named_group("A6"), 6);
    json lens = json::array();
    for (const auto& orb : a6) lens.push_back(orb.size());
    w.set("A6_orbits_up_to_6", lens);
    w.expect("A6 orbits of length <= 6", static_cast<int>(a6.size()), 1);
    if (a6.size() == 1) w.expect_true("the A6-orbit is Sigma6", same_point_set(a6.front(), o.sigma6));

    int max_dim = 0;
    auto fixed = joint_eigenvectors(ws.w5_gens("D12nst"), &max_dim);
    w.set("D12_fixed_points", fixed.size());
    w.expect("D12nst fixed points", static_cast<int>(fixed.size()), 1);
    w.expect("largest D12nst joint eigenspace", max_dim, 1);
    if (fixed.size() == 1) {
        auto orb = coordinate_orbit(normalize_projective(hyperplane_to_six(fixed.front())), named_group("S5nst"));
        w.set("S5_orbit_of_D12_point", orb.size());
        w.expect_true("S5nst-orbit of the D12nst fixed point is Sigma10", same_point_set(orb, o.sigma10));
    }

    MForm s2 = power_sum6(ws.ctx(), 2);
    w.set("s2_at_sigma6_seed", rational_or_cyc(s2.eval(o.sigma6.front())));
    for (const auto* orb : {&o.sigma6, &o.sigma10})
        for (const Vec& p : *orb)
            if (s2.eval(p).is_zero()) w.mismatch({{"what", "point on the invariant quadric"}, {"point", p}});
}

void arith_determinant(Workspace&, Witness& w) {
    auto n = numeric_identities();
    w.set("determinant", n.det);
    w.expect("determinant", n.det, Rational(300));
}

void arith_degrees(Workspace&, Witness& w) {
    auto n = numeric_identities();
    w.set("six_line_degree", n.six_line_degree);
    w.set("ten_line_degree", n.ten_line_degree);
    w.expect("64 - 72 + 12", n.six_line_degree, 4L);
    w.expect("64 - 60 + 10", n.ten_line_degree, 14L);
}

void arith_rh(Workspace&, Witness& w) {
    const std::vector<int> lengths = {72, 90, 120, 180, 360};
    auto g = rh_search(360, lengths, 2, 15);
    auto none = rh_search(360, lengths, 2, 1);
    w.set("group_order", 360);
    w.set("orbit_lengths", lengths);
    w.set("genera_2_to_15", g);
    w.expect("genera in [2, 15]", g, std::set<int>{10});
    w.expect("genera in the empty range", none, std::set<int>{});
}

}  // namespace

void add_p4_checks(std::vector<CheckSpec>& out) {
    add_check(out, "p4.orbits", 4, {}, "S6-orbits of lengths 6, 10, 15, 30 on the hyperplane model and the 15 lines", p4_orbits);
    add_check(out, "p4.singular_table", 4, {"p4.orbits"},
        "singular points of X_t: Sigma30 for all t, Sigma6 at 7/10, Sigma10 at 1/6, Sigma15 at 1/2, the 15 lines at 1/4", p4_singular_table);
    add_check(out, "p4.lines15", 4, {"p4.orbits"}, "X_t is singular along each of the 15 lines exactly when t = 1/4, and they contain Sigma30",
        p4_lines15);
    add_check(out, "p4.nodes", 4, {"p4.orbits"}, "the isolated singular points are nodes (Hessian rank 4 on the hyperplane)", p4_nodes);
    add_check(out, "p4.census", 4, {"p4.orbits"}, "Sigma6 is the only A6-orbit of length <= 6; the D12 fixed point has S5-orbit Sigma10",
        p4_census);
    add_check(out, "arith.determinant", 9, {}, "the 3x3 intersection matrix has determinant 300", arith_determinant);
    add_check(out, "arith.degrees", 9, {}, "anticanonical degrees 64 - 72 + 12 = 4 and 64 - 60 + 10 = 14", arith_degrees);
    add_check(out, "arith.rh_search", 9, {}, "Riemann-Hurwitz with |G| = 360 and stabilizer orbit lengths allows only g = 10 in [2, 15]",
        arith_rh);
}

}  // namespace qv::pipeline
