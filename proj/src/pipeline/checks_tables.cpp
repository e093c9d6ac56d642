#include "workspace.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace qv::pipeline {

namespace {

using Key = std::tuple<int, std::vector<int>, bool>;

Key key_of(const ClassLabel& l) { return {l.order, l.cycle_type, l.central}; }
Key key_of(const Table1Row& r) { return {r.order, r.cycle_type, r.central}; }

// Assign each transcribed row a class with the same (order, cycle type,
// central) key.  Rows sharing a key are matched by the permutation with the
// smallest cost.  Unmatched rows get -1 and a mismatch entry.
std::vector<int> match_rows(const std::vector<Table1Row>& rows, const std::vector<ConjClass>& classes,
                            const std::function<int(std::size_t row, std::size_t cls)>& cost, Witness& w) {
    std::vector<int> out(rows.size(), -1);
    std::map<Key, std::vector<std::size_t>> by_row, by_class;
    for (std::size_t i = 0; i < rows.size(); ++i) by_row[key_of(rows[i])].push_back(i);
    for (std::size_t c = 0; c < classes.size(); ++c) by_class[key_of(classes[c].label)].push_back(c);
    for (auto& [key, rs] : by_row) {
        std::vector<std::size_t> cs = by_class[key];
        if (cs.size() != rs.size()) {
            for (std::size_t r : rs)
                w.mismatch({{"row", r + 1},
                            {"what", "number of classes with this order and cycle type"},
                            {"expected", rs.size()},
                            {"actual", cs.size()}});
            continue;
        }
        std::vector<std::size_t> best;
        int best_cost = -1;
        std::sort(cs.begin(), cs.end());
        do {
            int c = 0;
            for (std::size_t k = 0; k < rs.size(); ++k) c += cost(rs[k], cs[k]);
            if (best_cost < 0 || c < best_cost) best_cost = c, best = cs;
        } while (std::next_permutation(cs.begin(), cs.end()));
        for (std::size_t k = 0; k < rs.size(); ++k) out[rs[k]] = static_cast<int>(best[k]);
    }
    return out;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> piece_dims(const std::vector<std::vector<Vec>>& pieces) {
    std::vector<int> d;
    for (const auto& p : pieces) d.push_back(static_cast<int>(p.size()));
    return sorted(d);
}

std::vector<int> split_dims_u4(Workspace& ws, const std::string& group) {
    const CoverGroup& g = ws.cover();
    auto gens = g.lift_generators(named_group(group));
    auto elems = g.closure(gens);
    std::map<int, int> local;
    std::vector<Mat> mats;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        local[elems[i]] = static_cast<int>(i);
        mats.push_back(g.matrix(elems[i]));
    }
    auto cls = g.classes_within(gens);
    for (auto& c : cls)
        for (int& x : c) x = local.at(x);
    return piece_dims(split_isotypic(mats, cls));
}

std::vector<int> split_dims_w5(Workspace& ws, const std::string& group) {
    const PermGroup& h = named_group(group);
    std::vector<Mat> mats;
    std::map<int, int> local;
    for (std::size_t i = 0; i < h.elements().size(); ++i) {
        local[h.elements()[i].index()] = static_cast<int>(i);
        mats.push_back(w5_model(ws.ctx(), h.elements()[i]));
    }
    std::vector<std::vector<int>> cls;
    for (const auto& c : conjugacy_classes(h)) {
        std::vector<int> ids;
        for (int m : c.members) ids.push_back(local.at(m));
        cls.push_back(ids);
    }
    return piece_dims(split_isotypic(mats, cls));
}

int derived_order(const PermGroup& h) {
    std::set<Perm> comms;
    for (const Perm& a : h.elements())
        for (const Perm& b : h.gens()) comms.insert(a * b * a.inverse() * b.inverse());
    // commutators [a, s] with s a generator generate a normal subgroup whose
    // quotient is abelian, hence the derived subgroup
    return PermGroup::generate(std::vector<Perm>(comms.begin(), comms.end())).order();
}

int derived_order_cover(const CoverGroup& g, const std::vector<int>& elems, const std::vector<int>& gens) {
    std::set<int> comms;
    for (int a : elems)
        for (int b : gens) comms.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    return static_cast<int>(g.closure(std::vector<int>(comms.begin(), comms.end())).size());
}

// ---- Table 1 --------------------------------------------------------------------

void table1_classes(Workspace& ws, Witness& w) {
    const auto& cd = ws.cover_classes();
    const auto& rows = ws.table1_rows();
    json cls = json::array();
    int total = 0;
    for (const auto& c : cd.classes) {
        cls.push_back({{"class", c.label.str()}, {"size", c.size()}});
        total += c.size();
    }
    w.set("group_order", ws.cover().order());
    w.set("classes", cls);
    w.expect("group order", ws.cover().order(), 1440);
    w.expect("number of classes", static_cast<int>(cd.classes.size()), static_cast<int>(rows.size()));
    w.expect("sum of class sizes", total, ws.cover().order());
    auto match = match_rows(rows, cd.classes, [&](std::size_t r, std::size_t c) { return cd.classes[c].size() != rows[r].counts[0]; }, w);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (match[r] < 0) continue;
        const auto& c = cd.classes[static_cast<std::size_t>(match[r])];
        if (c.size() != rows[r].counts[0])
            w.mismatch({{"row", r + 1}, {"class", c.label.str()}, {"column", "size"}, {"expected", rows[r].counts[0]}, {"actual", c.size()}});
    }
}

void table1_characters(Workspace& ws, Witness& w) {
    const auto& cd = ws.cover_classes();
    const auto& rows = ws.table1_rows();
    const CoverGroup& g = ws.cover();
    const FieldCtx& ctx = ws.ctx();

    struct Values {
        CycNum w, w5, u4;
    };
    std::vector<Values> actual;
    json matrix = json::array();
    for (const auto& c : cd.classes) {
        const Perm& p = g.proj(c.rep());
        Values v{perm_matrix(ctx, p).trace(), w5_model(ctx, p).trace(), g.matrix(c.rep()).trace()};
        matrix.push_back({{"class", c.label.str()}, {"W", v.w}, {"W5", v.w5}, {"U4", v.u4}});
        actual.push_back(v);
    }
    w.set("characters", matrix);

    auto expected = [&](std::size_t r) {
        return Values{CycNum(ctx, rows[r].w), CycNum(ctx, rows[r].w5), rows[r].u4_value(ctx)};
    };
    auto cost = [&](std::size_t r, std::size_t c) {
        Values e = expected(r);
        const Values& a = actual[c];
        return (a.w != e.w) + (a.w5 != e.w5) + (a.u4 != e.u4);
    };
    auto match = match_rows(rows, cd.classes, cost, w);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (match[r] < 0) continue;
        std::size_t c = static_cast<std::size_t>(match[r]);
        Values e = expected(r);
        const Values& a = actual[c];
        const std::pair<const char*, std::pair<const CycNum*, const CycNum*>> cells[] = {
            {"W", {&a.w, &e.w}}, {"W5", {&a.w5, &e.w5}}, {"U4", {&a.u4, &e.u4}}};
        for (const auto& [col, ae] : cells)
            if (*ae.first != *ae.second)
                w.mismatch({{"row", r + 1},
                            {"class", cd.classes[c].label.str()},
                            {"column", col},
                            {"expected", *ae.second},
                            {"actual", *ae.first},
                            {"expected_text", ae.second->str()},
                            {"actual_text", ae.first->str()}});
    }
}

void table1_order12(Workspace& ws, Witness& w) {
    const auto& cd = ws.cover_classes();
    const CoverGroup& g = ws.cover();
    json seen = json::array();
    for (std::size_t c = 0; c < cd.classes.size(); ++c) {
        if (cd.classes[c].label.order != 12) continue;
        int r = cd.classes[c].rep();
        CycNum tr = g.matrix(r).trace();
        seen.push_back({{"class", cd.classes[c].label.str()}, {"U4", tr}, {"text", tr.str()}});
        w.expect_true(cd.classes[c].label.str() + " is closed under inversion", cd.class_of.at(g.inv(r)) == static_cast<int>(c));
        w.expect_true(cd.classes[c].label.str() + " trace is real", tr == tr.conj());
        w.expect(cd.classes[c].label.str() + " trace squared", tr * tr, CycNum(ws.ctx(), 3));
    }
    w.set("order12_classes", seen);
    w.expect("number of order-12 classes", static_cast<int>(seen.size()), 2);
}

void table1_subgroups(Workspace& ws, Witness& w) {
    const auto& cd = ws.cover_classes();
    const auto& rows = ws.table1_rows();
    const auto& cols = table1_columns();
    auto cost = [&](std::size_t r, std::size_t c) {
        int k = 0;
        for (std::size_t j = 0; j < cols.size(); ++j) k += ws.cover_counts(cols[j])[c] != rows[r].counts[j];
        return k;
    };
    auto match = match_rows(rows, cd.classes, cost, w);
    json table = json::array();
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& counts = ws.cover_counts(cols[j]);
        int total = std::accumulate(counts.begin(), counts.end(), 0);
        w.expect("preimage order of " + cols[j], total, 2 * named_group(cols[j]).order());
        json col = json::object();
        for (std::size_t c = 0; c < cd.classes.size(); ++c) col[cd.classes[c].label.str()] = counts[c];
        table.push_back({{"subgroup", cols[j]}, {"order", total}, {"counts", col}});
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (match[r] < 0) continue;
            std::size_t c = static_cast<std::size_t>(match[r]);
            if (counts[c] != rows[r].counts[j])
                w.mismatch({{"row", r + 1}, {"class", cd.classes[c].label.str()}, {"column", cols[j]}, {"expected", rows[r].counts[j]}, {"actual", counts[c]}});
        }
    }
    w.set("fusion", table);
}

void table2_fusion(Workspace& ws, Witness& w) {
    const CoverGroup& g = ws.cover();
    const auto& cols = table2_columns();
    const auto& rows = table2();
    const PermGroup& a5 = named_group("A5nst");
    json table = json::array();
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const PermGroup& h = named_group(cols[j]);
        w.expect_true(cols[j] + " lies in A5nst", h.is_subgroup_of(a5));
        std::map<Key, int> counts;
        auto ids = g.preimage(h);
        for (int id : ids) {
            const Perm& p = g.proj(id);
            bool central = id == g.central();
            counts[{g.element_order(id), central ? std::vector<int>{} : p.cycle_type(), central}]++;
        }
        json col = json::array();
        int listed = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Key k{rows[r].order, rows[r].cycle_type, rows[r].order == 2 && rows[r].cycle_type.empty()};
            int actual = counts.count(k) ? counts[k] : 0;
            listed += actual;
            col.push_back(actual);
            if (actual != rows[r].counts[j])
                w.mismatch({{"row", r + 1}, {"column", cols[j]}, {"expected", rows[r].counts[j]}, {"actual", actual}});
        }
        // every element of the preimage falls in one of the listed rows
        w.expect("elements of the preimage of " + cols[j] + " covered by the rows", listed, static_cast<int>(ids.size()));
        table.push_back({{"subgroup", cols[j]}, {"order", ids.size()}, {"counts", col}});
    }
    // the preimage of a 5-cycle subgroup is cyclic of order 10
    bool cyclic = false;
    for (int id : g.preimage(named_group("mu5"))) cyclic = cyclic || g.element_order(id) == 10;
    w.expect_true("preimage of mu5 is cyclic", cyclic);
    w.set("fusion", table);
}

// ---- restrictions and symmetric powers --------------------------------------------

struct U4Restriction {
    Rational norm;
    int commutant;
    std::vector<int> dims;
};

U4Restriction restrict_u4(Workspace& ws, const std::string& group) {
    const Character& chi = ws.u4_character();
    return {inner_product(ws.cover_counts(group), chi, chi), static_cast<int>(commutant(ws.u4_gens(group)).size()), split_dims_u4(ws, group)};
}

json to_json(const U4Restriction& r) { return {{"norm", r.norm}, {"commutant_dim", r.commutant}, {"pieces", r.dims}}; }

void expect_restriction(Witness& w, const std::string& group, const U4Restriction& r, int norm, std::vector<int> dims) {
    w[group] = to_json(r);
    w.expect(group + ": <chi, chi>", r.norm, Rational(norm));
    // dim End_G(V) = sum m_i^2 = <chi, chi>
    w.expect(group + ": commutant dimension", r.commutant, norm);
    w.expect(group + ": constituent dimensions", r.dims, dims);
}

void corollary_characters(Workspace& ws, Witness& w) {
    for (const char* g : {"A6", "S5nst", "A5nst", "S4nst", "F36", "F20"}) expect_restriction(w, g, restrict_u4(ws, g), 1, {4});
    for (const char* g : {"A5st", "A4nst", "D12nst"}) expect_restriction(w, g, restrict_u4(ws, g), 2, {2, 2});
}

void corollary_characters_p4(Workspace& ws, Witness& w) {
    const Character& chi = ws.w5_character();
    const Character triv(chi.size(), CycNum(ws.ctx(), 1));
    struct Case {
        const char* group;
        int norm, trivial;
        std::vector<int> dims;
    };
    for (const Case& c : {Case{"A6", 1, 0, {5}}, Case{"S5nst", 1, 0, {5}}, Case{"A5nst", 1, 0, {5}}, Case{"A5st", 2, 1, {1, 4}},
                          Case{"D12nst", 3, 1, {1, 2, 2}}}) {
        const auto& counts = ws.s6_counts(c.group);
        Rational norm = inner_product(counts, chi, chi), t = inner_product(counts, chi, triv);
        int comm = static_cast<int>(commutant(ws.w5_gens(c.group)).size());
        auto dims = split_dims_w5(ws, c.group);
        w[c.group] = {{"norm", norm}, {"trivial_multiplicity", t}, {"commutant_dim", comm}, {"pieces", dims}};
        w.expect(std::string(c.group) + ": <chi, chi>", norm, Rational(c.norm));
        w.expect(std::string(c.group) + ": trivial multiplicity", t, Rational(c.trivial));
        w.expect(std::string(c.group) + ": commutant dimension", comm, c.norm);
        w.expect(std::string(c.group) + ": constituent dimensions", dims, c.dims);
    }
}

void corollary_sym_u4(Workspace& ws, Witness& w) {
    const ClassData& cd = ws.cover_classes();
    const CoverGroup& g = ws.cover();
    Character dual_u4 = dual(ws.u4_character());
    Character sym2 = sym_power_character(cd, dual_u4, 2), sym3 = sym_power_character(cd, dual_u4, 3),
              sym4 = sym_power_character(cd, dual_u4, 4);

    // perfect groups have no non-trivial one-dimensional representations
    for (const char* name : {"A6", "A5nst"}) {
        const PermGroup& h = named_group(name);
        int d = derived_order(h);
        w[std::string("derived_order_") + name] = d;
        w.expect(std::string(name) + " is perfect", d, h.order());
    }
    {
        auto ids = g.preimage(named_group("A5nst"));
        int d = derived_order_cover(g, ids, g.lift_generators(named_group("A5nst")));
        w["derived_order_2.A5nst"] = d;
        w.expect("2.A5nst is perfect", d, static_cast<int>(ids.size()));
    }

    const auto& a6 = ws.cover_counts("A6");
    const auto& a5 = ws.cover_counts("A5nst");
    Rational i = trivial_multiplicity(a6, sym2), ii = trivial_multiplicity(a6, sym4), iv = trivial_multiplicity(a5, sym3),
             v = trivial_multiplicity(a5, sym4);
    w["i_A6_sym2_trivial"] = i;
    w["ii_A6_sym4_trivial"] = ii;
    w["iv_2A5_sym3_trivial"] = iv;
    w["v_A5_sym4_trivial"] = v;
    w.expect("(i) A6 on Sym2: trivial multiplicity", i, Rational(0));
    w.expect("(ii) A6 on Sym4: trivial multiplicity", ii, Rational(0));
    w.expect("(iv) 2.A5nst on Sym3: trivial multiplicity", iv, Rational(0));

    // (iii): three pieces and <chi, chi> = 3, so three distinct irreducibles
    Rational n2 = inner_product(a5, sym2, sym2);
    std::vector<int> dims;
    for (const auto& p : quadric_pieces(g, named_group("A5nst"))) dims.push_back(static_cast<int>(p.size()));
    dims = sorted(dims);
    w["iii_A5_sym2"] = {{"norm", n2}, {"pieces", dims}};
    w.expect("(iii) A5nst on Sym2: <chi, chi>", n2, Rational(3));
    w.expect("(iii) A5nst on Sym2: constituent dimensions", dims, std::vector<int>{3, 3, 4});

    // (v): the irreducible dimensions of A5 are 1, the pieces above, and
    // whatever the class count and sum of squares leave; none of them is 2,
    // so a 2-dimensional subrepresentation is a sum of two trivial ones.
    int nclasses = static_cast<int>(conjugacy_classes(named_group("A5nst")).size());
    int rest = 60 - 1;
    for (int d : dims) rest -= d * d;
    int missing = nclasses - 1 - static_cast<int>(dims.size());
    std::vector<int> irr = {1};
    irr.insert(irr.end(), dims.begin(), dims.end());
    if (missing == 1) {
        int d = 0;
        while ((d + 1) * (d + 1) <= rest) ++d;
        if (d * d == rest) irr.push_back(d);
    }
    irr = sorted(irr);
    w["v_A5_irreducible_dims"] = irr;
    w.expect("(v) A5nst irreducible dimensions", irr, std::vector<int>{1, 3, 3, 4, 5});
    w.expect("(v) A5nst on Sym4: trivial multiplicity", v, Rational(2));
    int inv4 = static_cast<int>(invariant_forms(ws.u4_gens("A5nst"), 4).size());
    w["v_A5_invariant_quartics"] = inv4;
    w.expect("(v) A5nst invariant quartics", inv4, 2);
}

void corollary_sym_w5(Workspace& ws, Witness& w) {
    const ClassData& cd = ws.s6_classes();
    const Character& chi = ws.w5_character();
    const Character& sgn = ws.sign_character();
    Character sym2 = sym_power_character(cd, chi, 2), sym4 = sym_power_character(cd, chi, 4);
    for (const char* name : {"S6", "A6", "S5nst"}) {
        const PermGroup& h = named_group(name);
        const auto& counts = ws.s6_counts(name);
        int d = derived_order(h);
        // the linear characters are trivial, plus sign when the derived subgroup has index 2
        bool has_sign = d * 2 == h.order();
        w.expect_true(std::string(name) + ": derived subgroup has index 1 or 2", d == h.order() || has_sign);
        Rational t2 = trivial_multiplicity(counts, sym2), t4 = trivial_multiplicity(counts, sym4);
        Rational s2 = has_sign ? inner_product(counts, sym2, sgn) : Rational(0);
        Rational s4 = has_sign ? inner_product(counts, sym4, sgn) : Rational(0);
        int f2 = static_cast<int>(invariant_forms(ws.w5_gens(name), 2).size());
        int f4 = static_cast<int>(invariant_forms(ws.w5_gens(name), 4).size());
        w[name] = {{"derived_order", d},        {"sym2_trivial", t2},          {"sym2_sign", s2},
                   {"sym4_trivial", t4},        {"sym4_sign", s4},             {"invariant_quadrics", f2},
                   {"invariant_quartics", f4}};
        std::string n(name);
        w.expect(n + ": (i) Sym2 one-dimensional constituents", Rational(t2 + s2), Rational(1));
        w.expect(n + ": (i) Sym2 trivial multiplicity", t2, Rational(1));
        w.expect(n + ": (ii) Sym4 one-dimensional constituents", Rational(t4 + s4), Rational(2));
        w.expect(n + ": (ii) Sym4 trivial multiplicity", t4, Rational(2));
        w.expect(n + ": invariant quadrics", f2, 1);
        w.expect(n + ": invariant quartics", f4, 2);
    }
}

void corollary_a5_reps(Workspace& ws, Witness& w) {
    expect_restriction(w, "D10", restrict_u4(ws, "D10"), 2, {2, 2});
    expect_restriction(w, "S3'", restrict_u4(ws, "S3'"), 3, {1, 1, 2});
    // one isotypic block of dimension 4 with <chi, chi> = 4 = m^2: twice a 2-dimensional irreducible
    expect_restriction(w, "V4", restrict_u4(ws, "V4"), 4, {4});
    expect_restriction(w, "mu5", restrict_u4(ws, "mu5"), 4, {1, 1, 1, 1});
}

void invariant_dims(Workspace& ws, Witness& w) {
    const ClassData& cd = ws.cover_classes();
    Character dual_u4 = dual(ws.u4_character());
    json rows = json::array();
    for (const char* name : {"A6", "S5nst", "A5nst"})
        for (int d = 2; d <= 4; ++d) {
            Rational predicted = trivial_multiplicity(ws.cover_counts(name), sym_power_character(cd, dual_u4, d));
            int actual = static_cast<int>(invariant_forms(ws.u4_gens(name), d).size());
            rows.push_back({{"group", name}, {"degree", d}, {"character", predicted}, {"forms", actual}});
            w.expect(std::string(name) + " degree " + std::to_string(d), Rational(actual), predicted);
        }
    w.set("invariant_dimensions", rows);
}

}  // namespace

void add_table_checks(std::vector<CheckSpec>& out) {
    add_check(out, "table1.classes", 1, {}, "the constructed double cover of S6 has order 1440 and 17 classes with the transcribed sizes", table1_classes);
    add_check(out, "table1.characters", 1, {"table1.classes"}, "characters of W, W5 and U4 on the 17 classes agree with the transcribed table",
        table1_characters);
    add_check(out, "table1.order12_real", 1, {"table1.classes"}, "the order-12 classes are real and U4 takes the values +-sqrt(3) there",
        table1_order12);
    add_check(out, "table1.subgroups", 2, {"table1.classes"}, "fusion counts of the ten subgroup preimages into the classes of 2.S6", table1_subgroups);
    add_check(out, "table2.fusion", 2, {}, "element counts by order and type in four subgroups of 2.A5nst", table2_fusion);
    add_check(out, "corollaries.characters", 3, {}, "restrictions of U4: irreducible for six subgroups, two non-isomorphic planes for three",
        corollary_characters);
    add_check(out, "corollaries.characters_p4", 3, {}, "restrictions of W5 to A6, S5nst, A5nst, A5st and D12nst", corollary_characters_p4);
    add_check(out, "corollaries.sym_u4", 3, {}, "one-dimensional pieces of Sym^2, Sym^3, Sym^4 of the dual of U4 under A6 and A5nst", corollary_sym_u4);
    add_check(out, "corollaries.sym_w5", 3, {}, "Sym^2 and Sym^4 of W5 under S6, A6 and S5nst: one invariant quadric, two invariant quartics",
        corollary_sym_w5);
    add_check(out, "corollaries.a5_reps", 3, {}, "restrictions of U4 to D10, S3', V4 and mu5 inside 2.A5nst", corollary_a5_reps);
    add_check(out, "corollaries.invariant_dims", 3, {}, "dimensions of invariant forms of degree 2 to 4 agree with character predictions",
        invariant_dims);
}

}  // namespace qv::pipeline
