#include "workspace.hpp"

#include <algorithm>

namespace qv::pipeline {

namespace {

std::vector<int> lengths(const std::vector<OrbitInfo>& orbits) {
    std::vector<int> out;
    for (const auto& o : orbits) out.push_back(o.length);
    return out;
}

std::vector<OrbitInfo> census(Workspace& ws, const std::string& group, int bound) {
    const PermGroup& h = named_group(group);
    return small_orbit_census(ws.u4_gens(group), census_candidates(ws.ctx(), &ws.cover(), h, bound), bound);
}

bool same_point_set(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    if (a.size() != b.size()) return false;
    for (const Vec& p : a)
        if (std::none_of(b.begin(), b.end(), [&](const Vec& x) { return projectively_equal(p, x); })) return false;
    return true;
}

int form_rank(const FieldCtx& ctx, const std::vector<MForm>& fs) {
    std::vector<Vec> rows;
    for (const MForm& f : fs) rows.push_back(f.coeff_vector());
    return rank(Mat::from_rows(ctx, rows));
}

// ---- lines -----------------------------------------------------------------------

void double_five(Workspace& ws, Witness& w) {
    const P3Scene& sc = ws.scene();
    w.set("incidence", incidence_profile(ws.ten_lines()));
    w.expect_true("double five incidences", is_double_five(sc.L, sc.Lp));
    w.expect("A5nst-orbit of L_1", line_orbit(sc.L[0], ws.u4_gens("A5nst")).size(), std::size_t{5});
    auto orb10 = line_orbit(sc.L[0], ws.u4_gens("S5nst"));
    w.expect("S5nst-orbit of L_1", orb10.size(), std::size_t{10});
    for (std::size_t j = 0; j < sc.Lp.size(); ++j)
        w.expect_true("L'_" + std::to_string(j + 1) + " in the S5nst-orbit of L_1", std::find(orb10.begin(), orb10.end(), sc.Lp[j]) != orb10.end());

    json trans = json::array();
    for (std::size_t skip = 0; skip < 5; ++skip) {
        for (int fam = 0; fam < 2; ++fam) {
            const auto& from = fam == 0 ? sc.L : sc.Lp;
            const auto& to = fam == 0 ? sc.Lp : sc.L;
            std::vector<ProjLine> four;
            for (std::size_t i = 0; i < 5; ++i)
                if (i != skip) four.push_back(from[i]);
            auto t = transversals({four[0], four[1], four[2], four[3]});
            bool matches = !t.degenerate && t.count == 1 && t.lines.size() == 1 && t.lines[0] == to[skip];
            trans.push_back({{"family", fam == 0 ? "L" : "L'"}, {"omitted", skip + 1}, {"degenerate", t.degenerate}, {"count", t.count}, {"double_root", t.double_root}});
            w.expect_true(std::string("unique transversal to the ") + (fam == 0 ? "L" : "L'") + " without index " + std::to_string(skip + 1) +
                              " is the matching line of the other family",
                          matches);
        }
    }
    w.set("transversals", trans);
}

void six_lines(Workspace& ws, Witness& w) {
    const P3Scene& sc = ws.scene();
    std::vector<ProjLine> all = sc.six1;
    all.insert(all.end(), sc.six2.begin(), sc.six2.end());
    auto prof = incidence_profile(all);
    int meets = 0;
    for (const auto& row : prof) meets += static_cast<int>(std::count(row.begin(), row.end(), 1));
    w.set("incidence", prof);
    w.expect("sextet sizes", std::pair{sc.six1.size(), sc.six2.size()}, std::pair{std::size_t{6}, std::size_t{6}});
    w.expect("meeting pairs among the twelve lines", meets, 0);
    auto a6 = ws.u4_gens("A6");
    w.expect("A6-orbit of L^1_1", line_orbit(sc.six1[0], a6).size(), std::size_t{6});
    w.expect("A6-orbit of L^2_1", line_orbit(sc.six2[0], a6).size(), std::size_t{6});
    w.expect("S6-orbit of L^1_1", line_orbit(sc.six1[0], ws.u4_gens("S6")).size(), std::size_t{12});
}

void geom_census(Workspace& ws, Witness& w) {
    const auto& a5 = ws.a5_census();
    auto a6 = census(ws, "A6", 15);
    auto s5 = census(ws, "S5nst", 11);
    w.set("A5nst_bound15", lengths(a5));
    w.set("A6_bound15", lengths(a6));
    w.set("S5nst_bound11", lengths(s5));
    w.expect("A5nst orbits of length <= 15", lengths(a5), std::vector<int>{10, 10, 12, 12});
    w.expect("A6 orbits of length <= 15", lengths(a6), std::vector<int>{});
    w.expect("S5nst orbits of length <= 11", lengths(s5), std::vector<int>{});
    auto gens = ws.u4_gens("A5nst");
    json reps = json::array();
    for (const auto& o : a5) {
        reps.push_back({{"length", o.length}, {"source", o.source}, {"rep", o.rep}});
        w.expect("orbit of " + o.source, static_cast<int>(point_orbit(o.rep, gens).size()), o.length);
    }
    w.set("A5nst_orbits", reps);
}

void cubics(Workspace& ws, Witness& w) {
    const P3Scene& sc = ws.scene();
    std::vector<int> dims;
    for (const auto& p : quadric_pieces(ws.cover(), named_group("A5nst"))) dims.push_back(static_cast<int>(p.size()));
    std::sort(dims.begin(), dims.end());
    w.set("quadric_pieces", dims);
    w.expect("A5nst pieces of the quadrics", dims, std::vector<int>{3, 3, 4});

    auto gens = ws.u4_gens("A5nst");
    for (std::size_t k = 0; k < 2; ++k) {
        const CurveParam& c = sc.cubics[k].param;
        std::string name = "C^" + std::to_string(k + 1);
        bool invariant = true;
        for (const Mat& m : gens)
            for (const MForm& q : sc.cubic_quadrics[k]) invariant = invariant && restrict(q, apply(m, c)).is_zero();
        w.expect_true(name + " is A5nst-invariant", invariant);
        int common = common_zero_degree(sc.cubic_quadrics[1 - k], c);
        w[name + "_meets_other_cubic"] = common;
        w.expect(name + " meets the other cubic in", common, 0);
    }

    json deg = json::array();
    auto record = [&](const std::string& what, const CurveParam& c, const std::vector<ProjLine>& lines, int want) {
        for (std::size_t j = 0; j < lines.size(); ++j) {
            int d = curve_line_intersection_degree(c, lines[j]);
            deg.push_back({{"pair", what}, {"line", j + 1}, {"degree", d}});
            if (d != want) w.mismatch({{"what", what}, {"line", j + 1}, {"expected", want}, {"actual", d}});
        }
    };
    record("C^1 with L^1", sc.cubics[0].param, sc.six1, 2);
    record("C^1 with L^2", sc.cubics[0].param, sc.six2, 0);
    record("C^2 with L^2", sc.cubics[1].param, sc.six2, 2);
    record("C^2 with L^1", sc.cubics[1].param, sc.six1, 0);
    w.expect("A6-orbit of C^1", sc.cubic_orbit1.size(), std::size_t{6});
    for (std::size_t i = 0; i < sc.cubic_orbit1.size(); ++i) {
        record("C^1_" + std::to_string(i + 1) + " with L^1", sc.cubic_orbit1[i], sc.six1, 2);
        record("C^1_" + std::to_string(i + 1) + " with L^2", sc.cubic_orbit1[i], sc.six2, 0);
    }
    w.set("intersection_degrees", deg);
}

void tangent_quadric(Workspace& ws, Witness& w) {
    const P3Scene& sc = ws.scene();
    Tangency a = quadric_tangency_check(sc.Lp[0], sc.Lp[1], sc.Lp[2], sc.Lp[3]);
    Tangency b = quadric_tangency_check(sc.Lp[0], sc.Lp[1], sc.Lp[2], sc.L[3]);
    w.set("L'_4", to_string(a));
    w.set("L_4", to_string(b));
    w.expect("quadric through L'_1, L'_2, L'_3 against L'_4", to_string(a), to_string(Tangency::Tangent));
    w.expect("quadric through L'_1, L'_2, L'_3 against L_4", to_string(b), to_string(Tangency::Contained));
}

void five_line_quartic(Workspace& ws, Witness& w) {
    const P3Scene& sc = ws.scene();
    auto sys = system_through_lines(sc.L, 4, ws.u4_gens("A5nst"));
    w.set("dimension", sys.size());
    w.expect("invariant quartics through L_1..L_5", sys.size(), std::size_t{1});
    if (sys.size() != 1) return;
    for (std::size_t j = 0; j < sc.Lp.size(); ++j)
        w.expect_true("the quartic does not contain L'_" + std::to_string(j + 1), !restrict(sys[0], line_param(sc.Lp[j].a, sc.Lp[j].b)).is_zero());
}

// Points of L_1..L_5 fixed by a non-scalar element of 2.A5 have orbits of
// length at least 20.  Projective fixed points of g are its eigenvectors.
void five_lines_orbits(Workspace& ws, Witness& w) {
    const P3Scene& sc = ws.scene();
    const CoverGroup& g = ws.cover();
    auto gens = ws.u4_gens("A5nst");
    std::vector<Vec> pts;
    for (int id : g.preimage(named_group("A5nst"))) {
        if (g.proj(id).is_identity()) continue;
        const Mat& m = g.matrix(id);
        int o = g.element_order(id);
        for (int k = 0; k < o; ++k) {
            auto e = eigenspace_root_of_unity(m, k, o);
            if (e.empty()) continue;
            for (std::size_t i = 0; i < sc.L.size(); ++i) {
                auto x = intersect_spans(ws.ctx(), e, {sc.L[i].a, sc.L[i].b}, 4);
                if (x.size() == 2) w.mismatch({{"what", "line fixed pointwise"}, {"line", i + 1}, {"element", id}});
                if (x.size() != 1) continue;
                Vec p = normalize_projective(x[0]);
                if (std::none_of(pts.begin(), pts.end(), [&](const Vec& q) { return q == p; })) pts.push_back(p);
            }
        }
    }
    std::map<int, int> hist;
    for (const Vec& p : pts) {
        int len = static_cast<int>(point_orbit(p, gens).size());
        ++hist[len];
        if (len < 20) w.mismatch({{"what", "short orbit on the five lines"}, {"point", p}, {"length", len}});
    }
    json h = json::object();
    for (auto [len, n] : hist) h[std::to_string(len)] = n;
    w.set("fixed_points_on_lines", pts.size());
    w.set("orbit_lengths", h);
}

// ---- the invariant pencil -----------------------------------------------------------

void invariant_quartics(Workspace& ws, Witness& w) {
    auto inv = invariant_forms(ws.u4_gens("A5nst"), 4);
    Rational predicted =
        trivial_multiplicity(ws.cover_counts("A5nst"), sym_power_character(ws.cover_classes(), dual(ws.u4_character()), 4));
    w.set("dimension", inv.size());
    w.set("character_prediction", predicted);
    w.expect("A5nst-invariant quartics", inv.size(), std::size_t{2});
    w.expect("character prediction", predicted, Rational(2));
}

void developables(Workspace& ws, Witness& w) {
    const P3Scene& sc = ws.scene();
    auto gens = ws.u4_gens("A5nst");
    auto inv = invariant_forms(gens, 4);
    const MForm &s1 = sc.developables[0], &s2 = sc.developables[1];
    w.expect_true("S^1 and S^2 are different surfaces", form_rank(ws.ctx(), {s1, s2}) == 2);
    for (std::size_t k = 0; k < 2; ++k) {
        const MForm& s = sc.developables[k];
        std::string name = "S^" + std::to_string(k + 1);
        bool invariant = std::all_of(gens.begin(), gens.end(), [&](const Mat& m) { return act(m, s) == s; });
        w.expect_true(name + " is A5nst-invariant", invariant);
        if (inv.size() == 2) w.expect(name + " lies in the invariant pencil", form_rank(ws.ctx(), {inv[0], inv[1], s}), 2);
        json samples = json::array();
        for (long u : {0L, 1L, -3L, 5L}) {
            Vec p = sc.cubics[k].param.point(CycNum(ws.ctx(), 1), CycNum(ws.ctx(), u));
            bool sing = is_zero(gradient(s, p));
            samples.push_back({{"u", u}, {"gradient_zero", sing}});
            w.expect_true(name + " singular at C^" + std::to_string(k + 1) + "(1, " + std::to_string(u) + ")", sing);
        }
        w[name + "_samples"] = samples;
        w.expect_true(name + " vanishes on C^" + std::to_string(k + 1), restrict(s, sc.cubics[k].param).is_zero());
    }
}

void nodal_members(Workspace& ws, Witness& w) {
    const P3Scene& sc = ws.scene();
    const auto& orbits = ws.a5_census();
    const MForm &s1 = sc.developables[0], &s2 = sc.developables[1];
    std::vector<Vec> dirs;
    for (int i = 0; i < 4; ++i) dirs.push_back(Mat::identity(ws.ctx(), 4).row(i));
    std::vector<MForm> members = {s1, s2};
    json rows = json::array();
    int k = 0;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (orbits[i].length != 10) continue;
        ++k;
        MForm r = pencil_member_through(s1, s2, orbits[i].rep);
        members.push_back(r);
        std::string name = "R^" + std::to_string(k);
        for (const Vec& p : orbits[i].points) {
            bool grad0 = is_zero(gradient(r, p));
            int hr = hessian_rank_affine(r, p, dirs);
            if (!grad0 || hr != 3)
                w.mismatch({{"what", name + " not nodal on its orbit"}, {"point", p}, {"gradient_zero", grad0}, {"hessian_rank", hr}});
        }
        // smooth (or absent) at every other short-orbit point
        int extra = 0;
        for (std::size_t j = 0; j < orbits.size(); ++j) {
            if (j == i) continue;
            for (const Vec& p : orbits[j].points)
                if (r.eval(p).is_zero() && is_zero(gradient(r, p))) ++extra;
        }
        w.expect(name + " singular points on other short orbits", extra, 0);
        rows.push_back({{"member", name}, {"orbit_length", orbits[i].length}, {"orbit_source", orbits[i].source}});
    }
    w.expect("length-10 orbits", k, 2);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            w.expect_true("pencil members " + std::to_string(i) + " and " + std::to_string(j) + " differ", form_rank(ws.ctx(), {members[i], members[j]}) == 2);
    w.set("nodal_members", rows);
}

void base_curve(Workspace& ws, Witness& w) {
    const P3Scene& sc = ws.scene();
    const auto& orbits = ws.a5_census();
    json rows = json::array();
    for (std::size_t k = 0; k < 2; ++k) {
        MForm r = restrict(sc.developables[k], sc.cubics[1 - k].param);
        std::string name = "S^" + std::to_string(k + 1) + " on C^" + std::to_string(2 - k);
        bool sqf = is_squarefree(r);
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
        rows.push_back({{"restriction", name}, {"degree", r.degree()}, {"squarefree", sqf}, {"length12_orbits_hit", hits}});
        w.expect(name + ": degree", r.degree(), 12);
        w.expect_true(name + ": squarefree", sqf);
        // 12 distinct roots filled by one orbit of length 12
        w.expect(name + ": length-12 orbits contained", hits, 1);
    }
    w.set("restrictions", rows);
}

// ---- linear systems and images -------------------------------------------------------

void system_dim(Witness& w, const std::vector<MForm>& sys, const std::string& what, std::size_t want) {
    w.set("dimension", sys.size());
    w.expect(what, sys.size(), want);
}

void irreducible(Workspace& ws, Witness& w, const std::string& group, const std::vector<MForm>& sys) {
    auto m = induced_action(ws.cover(), named_group(group).gens(), sys);
    int c = static_cast<int>(commutant(m).size());
    w.set("commutant_dim", c);
    w.expect("commutant dimension of the induced " + group + "-action", c, 1);
}

void extract_t(Workspace& ws, Witness& w, const ImageResult& r, const CycNum& want) {
    w.set("found", r.found);
    w.set("attempts", r.attempts);
    w.expect_true("a proportionality P4 = t P2 was found", r.found);
    if (!r.found) return;
    w.set("t", rational_or_cyc(r.t));
    w.set("subgroup", r.subgroup);
    w.set("character", r.character);
    w.expect("t", r.t, want);
    MForm sum = r.q[0];
    for (std::size_t i = 1; i < r.q.size(); ++i) sum += r.q[i];
    w.expect_true("sum of q_i vanishes", sum.is_zero());
    w.expect("rank of q_0..q_5", form_rank(ws.ctx(), r.q), 5);
}

// ---- contractions ---------------------------------------------------------------------

void contract_cubics(Workspace& ws, Witness& w) {
    const P3Scene& sc = ws.scene();
    const ImageResult& r = ws.six_line_image();
    const P4Orbits& o = ws.p4_orbits();
    MForm s2 = power_sum6(ws.ctx(), 2);
    std::vector<Vec> images;
    for (std::size_t i = 0; i < sc.cubic_orbit1.size(); ++i) {
        Contraction k = contraction_check(r.q, sc.cubic_orbit1[i]);
        w.expect_true("C^1_" + std::to_string(i + 1) + " contracted", k.contracted);
        if (!k.contracted) continue;
        Vec p = normalize_projective(k.image);
        if (std::none_of(images.begin(), images.end(), [&](const Vec& q) { return q == p; })) images.push_back(p);
        w.expect_true("image of C^1_" + std::to_string(i + 1) + " is off s2 = 0", !s2.eval(p).is_zero());
        w.expect_true("image of C^1_" + std::to_string(i + 1) + " is singular on X_{7/10}", is_singular_point(p, ws.num(7, 10)));
    }
    w.set("images", points_json(images));
    w.expect("distinct image points", images.size(), std::size_t{6});
    w.expect_true("the image points form Sigma6", same_point_set(images, o.sigma6));
}

void contract_lambda(Workspace& ws, Witness& w) {
    const P3Scene& sc = ws.scene();
    const ImageResult& r = ws.ten_line_image();
    const P4Orbits& o = ws.p4_orbits();
    const PermGroup& d12 = named_group("D12nst");
    const PermGroup& s5 = named_group("S5nst");
    std::vector<Vec> images;
    json rows = json::array();
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            std::string name = "Lambda_" + std::to_string(i + 1) + std::to_string(j + 1);
            ProjLine lam = plane_intersection(sc.L[i], sc.Lp[j], sc.Lp[i], sc.L[j]);
            Contraction k = contraction_check(r.q, line_param(lam.a, lam.b));
            PermGroup st = line_stabilizer(ws.cover(), s5, lam);
            bool has_d12 = false;
            for (const Perm& x : named_group("S6").elements())
                if (d12.conjugate(x).is_subgroup_of(st)) {
                    has_d12 = true;
                    break;
                }
            rows.push_back({{"line", name}, {"contracted", k.contracted}, {"stabilizer_order", st.order()}, {"contains_D12", has_d12}});
            w.expect_true(name + " contracted", k.contracted);
            w.expect_true(name + " stabilizer contains a D12", has_d12);
            if (!k.contracted) continue;
            Vec p = normalize_projective(k.image);
            TCondition c = singular_t_condition(p);
            w.expect_true(name + " image singular on X_{1/6}", is_singular_point(p, ws.num(1, 6)));
            w.expect_true(name + " image is singular only at t = 1/6", c.kind == TCondition::Value && c.value == ws.num(1, 6));
            if (std::none_of(images.begin(), images.end(), [&](const Vec& q) { return q == p; })) images.push_back(p);
        }
    w.set("lines", rows);
    w.set("images", points_json(images));
    w.expect("distinct image points", images.size(), std::size_t{10});
    w.expect_true("the image points form Sigma10", same_point_set(images, o.sigma10));
}

void generic_line(Workspace& ws, Witness& w) {
    // a line through two seeded random integer points
    std::uniform_int_distribution<long> dist(-9, 9);
    Vec a, b;
    do {
        a.clear();
        b.clear();
        for (int i = 0; i < 4; ++i) {
            a.push_back(CycNum(ws.ctx(), dist(ws.rng())));
            b.push_back(CycNum(ws.ctx(), dist(ws.rng())));
        }
    } while (rank(Mat::from_rows(ws.ctx(), {a, b})) < 2);
    w.set("a", a);
    w.set("b", b);
    CurveParam c = line_param(a, b);
    w.expect_true("not contracted by the six-line system", !contraction_check(ws.six_line_image().q, c).contracted);
    w.expect_true("not contracted by the ten-line system", !contraction_check(ws.ten_line_image().q, c).contracted);
}

}  // namespace

void add_geometry_checks(std::vector<CheckSpec>& out) {
    add_check(out, "geom.double_five", 6, {}, "the lines L_i, L'_i form a double five; L'_i is the unique transversal to the other four L_j",
              double_five);
    add_check(out, "geom.six_lines", 6, {}, "the two A6-orbits of six lines are pairwise skew and swapped by S6", six_lines);
    add_check(out, "geom.census", 6, {}, "short orbits in P3: A5nst {10, 10, 12, 12} up to 15, none for A6 up to 15 or S5nst up to 11",
              geom_census);
    add_check(out, "geom.cubics", 6, {}, "two disjoint invariant twisted cubics, each meeting every line of one sextet twice", cubics);
    add_check(out, "geom.tangent_quadric", 6, {"geom.double_five"}, "the quadric through three lines L'_i is tangent to the fourth",
              tangent_quadric);
    add_check(out, "geom.five_line_quartic", 6, {"geom.double_five"},
              "a unique A5nst-invariant quartic contains L_1..L_5 and it contains none of the L'_i", five_line_quartic);
    add_check(out, "geom.five_lines_orbits", 6, {"geom.double_five"}, "points of L_1..L_5 with non-trivial stabilizer have orbits of length >= 20",
              five_lines_orbits);
    add_check(out, "pencil.invariant_quartics", 7, {}, "the A5nst-invariant quartics form a pencil", invariant_quartics);
    add_check(out, "pencil.developables", 7, {"geom.cubics", "pencil.invariant_quartics"},
              "the tangent developables of the cubics are distinct members of the pencil, singular along the cubics", developables);
    add_check(out, "pencil.nodal_members", 7, {"pencil.developables", "geom.census"},
              "the members through the two length-10 orbits are nodal exactly there", nodal_members);
    add_check(out, "pencil.base_curve", 7, {"pencil.developables", "geom.census"},
              "each developable cuts the other cubic in a single length-12 orbit", base_curve);
    add_check(out, "a6.system_dim", 5, {"geom.six_lines"}, "quartics through either sextet form a 5-dimensional space",
              [](Workspace& ws, Witness& w) {
                  system_dim(w, ws.six_line_system(), "quartics through L^1", 5);
                  w.expect("quartics through L^2", system_through_lines(ws.scene().six2, 4).size(), std::size_t{5});
              });
    add_check(out, "a6.irreducible", 5, {"a6.system_dim"}, "A6 acts irreducibly on the quartics through the sextet",
              [](Workspace& ws, Witness& w) { irreducible(ws, w, "A6", ws.six_line_system()); });
    add_check(out, "a6.extract_t", 5, {"a6.irreducible"}, "the image of P3 under the six-line system is X_t with t = 7/10",
              [](Workspace& ws, Witness& w) { extract_t(ws, w, ws.six_line_image(), ws.num(7, 10)); });
    add_check(out, "s5.system_dim", 5, {"geom.double_five"}, "quartics through the ten lines of the double five form a 5-dimensional space",
              [](Workspace& ws, Witness& w) { system_dim(w, ws.ten_line_system(), "quartics through the ten lines", 5); });
    add_check(out, "s5.irreducible", 5, {"s5.system_dim"}, "S5nst acts irreducibly on the quartics through the ten lines",
              [](Workspace& ws, Witness& w) { irreducible(ws, w, "S5nst", ws.ten_line_system()); });
    add_check(out, "s5.extract_t", 5, {"s5.irreducible"}, "the image of P3 under the ten-line system is X_t with t = 1/6",
              [](Workspace& ws, Witness& w) { extract_t(ws, w, ws.ten_line_image(), ws.num(1, 6)); });
    add_check(out, "contraction.cubics", 8, {"a6.extract_t", "geom.cubics", "p4.orbits"},
              "the six cubics C^1_i are contracted to the six points of Sigma6, off the quadric and singular on X_{7/10}", contract_cubics);
    add_check(out, "contraction.lambda", 8, {"s5.extract_t", "p4.orbits"},
              "the ten lines Lambda_ij are contracted to the ten nodes Sigma10 of X_{1/6}; their stabilizers contain D12", contract_lambda);
    add_check(out, "contraction.generic_line", 8, {"a6.extract_t", "s5.extract_t"}, "a random line is not contracted by either system",
              generic_line);
}

}  // namespace qv::pipeline
