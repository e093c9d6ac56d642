#include "qv/quartic4.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace qv {

namespace {

struct VecHash {
    std::size_t operator()(const Vec& v) const {
        std::size_t h = 17;
        for (const CycNum& x : v) h = h * 31 + x.hash();
        return h;
    }
};

Vec mod_ones(Vec v) {
    CycNum v0 = v.front();
    for (CycNum& x : v) x -= v0;
    return v;
}

Vec concat_coeffs(const std::vector<MForm>& fs) {
    Vec out;
    for (const MForm& f : fs) {
        Vec c = f.coeff_vector();
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

bool conjugate_in(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return false;
    for (const Perm& x : g.elements())
        if (a.conjugate(x) == b) return true;
    return false;
}

std::string subgroup_label(const PermGroup& g, const PermGroup& s) {
    for (const std::string& name : named_group_names()) {
        const PermGroup& n = named_group(name);
        if (n.is_subgroup_of(g) && conjugate_in(g, s, n)) return name;
    }
    return "order " + std::to_string(s.order());
}

}  // namespace

MForm power_sum6(const FieldCtx& ctx, int k) {
    MForm f(ctx, 6, k);
    for (int i = 0; i < 6; ++i) {
        Exponent e(6, 0);
        e[static_cast<std::size_t>(i)] = k;
        f += MForm::monomial(ctx, e, CycNum(ctx, 1));
    }
    return f;
}

MForm quartic_ft(const FieldCtx& ctx, const CycNum& t) {
    MForm s2 = power_sum6(ctx, 2);
    return power_sum6(ctx, 4) - (s2 * s2) * t;
}

Vec hyperplane_to_six(const Vec& y) {
    if (y.size() != 5) throw std::invalid_argument("hyperplane_to_six: expected 5 coordinates");
    Vec x = y;
    CycNum s;
    for (const CycNum& v : y) s += v;
    x.push_back(-s);
    return x;
}

std::vector<Vec> sum_zero_directions(const FieldCtx& ctx) {
    std::vector<Vec> out;
    for (int i = 0; i < 5; ++i) {
        Vec v(6, CycNum(ctx, 0));
        v[static_cast<std::size_t>(i)] = CycNum(ctx, 1);
        v[5] = CycNum(ctx, -1);
        out.push_back(v);
    }
    return out;
}

Line6 Line6::through(const Vec& a, const Vec& b) {
    const FieldCtx& ctx = *a.front().ctx();
    RREF r = rref(Mat::from_rows(ctx, {a, b}));
    if (r.rank() != 2) throw std::invalid_argument("Line6: dependent points");
    Vec key = r.m.row(0), r1 = r.m.row(1);
    key.insert(key.end(), r1.begin(), r1.end());
    return Line6{a, b, key};
}

bool Line6::contains(const Vec& p) const {
    return rank(Mat::from_rows(*a.front().ctx(), {a, b, p})) == 2;
}

std::vector<Vec> coordinate_orbit(const Vec& p, const PermGroup& g) {
    const FieldCtx& ctx = *p.front().ctx();
    std::vector<Vec> out;
    std::unordered_set<Vec, VecHash> seen;
    for (const Perm& s : g.elements()) {
        Vec q = normalize_projective(perm_matrix(ctx, s) * p);
        if (seen.insert(q).second) out.push_back(q);
    }
    return out;
}

std::vector<Line6> coordinate_orbit(const Line6& l, const PermGroup& g) {
    const FieldCtx& ctx = *l.a.front().ctx();
    std::vector<Line6> out;
    std::unordered_set<Vec, VecHash> seen;
    for (const Perm& s : g.elements()) {
        Mat m = perm_matrix(ctx, s);
        Line6 k = Line6::through(m * l.a, m * l.b);
        if (seen.insert(k.key).second) out.push_back(k);
    }
    return out;
}

P4Orbits build_orbits(const FieldCtx& ctx) {
    const PermGroup& s6 = named_group("S6");
    auto ints = [&](std::initializer_list<long> xs) {
        Vec v;
        for (long x : xs) v.push_back(CycNum(ctx, x));
        return v;
    };
    CycNum one(ctx, 1), w = CycNum::root_of_unity(ctx, 1, 3);
    P4Orbits o;
    o.sigma6 = coordinate_orbit(ints({-5, 1, 1, 1, 1, 1}), s6);
    o.sigma10 = coordinate_orbit(ints({-1, -1, -1, 1, 1, 1}), s6);
    o.sigma15 = coordinate_orbit(ints({1, -1, 0, 0, 0, 0}), s6);
    o.sigma30 = coordinate_orbit(Vec{one, one, w, w, w * w, w * w}, s6);
    o.lines15 = coordinate_orbit(Line6::through(ints({1, 0, -1, 1, 0, -1}), ints({0, 1, -1, 0, 1, -1})), s6);
    auto expect = [](const char* what, std::size_t got, std::size_t want) {
        if (got != want)
            throw std::logic_error(std::string("build_orbits: ") + what + " has length " + std::to_string(got) + ", expected " + std::to_string(want));
    };
    expect("Sigma6", o.sigma6.size(), 6);
    expect("Sigma10", o.sigma10.size(), 10);
    expect("Sigma15", o.sigma15.size(), 15);
    expect("Sigma30", o.sigma30.size(), 30);
    expect("L15", o.lines15.size(), 15);
    return o;
}

std::string TCondition::str() const {
    switch (kind) {
        case All: return "all t";
        case None: return "none";
        case Value: return "t = " + value.str();
    }
    return "?";
}

TCondition solve_proportional(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_proportional: length mismatch");
    TCondition c;
    std::size_t k = 0;
    while (k < b.size() && b[k].is_zero()) ++k;
    if (k == b.size()) {
        c.kind = is_zero(a) ? TCondition::All : TCondition::None;
        return c;
    }
    CycNum t = a[k] / b[k];
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i] * t) return c;
    c.kind = TCondition::Value;
    c.value = t;
    return c;
}

TCondition singular_t_condition(const Vec& p) {
    const FieldCtx& ctx = *p.front().ctx();
    MForm s2 = power_sum6(ctx, 2);
    return solve_proportional(mod_ones(gradient(power_sum6(ctx, 4), p)), mod_ones(gradient(s2 * s2, p)));
}

TCondition line_singular_t_condition(const Line6& l) {
    const FieldCtx& ctx = *l.a.front().ctx();
    MForm s4 = power_sum6(ctx, 4), s2 = power_sum6(ctx, 2), s22 = s2 * s2;
    CurveParam c = line_param(l.a, l.b);
    std::vector<MForm> da, db;
    for (int i = 1; i < 6; ++i) {
        da.push_back(restrict(s4.derivative(i) - s4.derivative(0), c));
        db.push_back(restrict(s22.derivative(i) - s22.derivative(0), c));
    }
    return solve_proportional(concat_coeffs(da), concat_coeffs(db));
}

bool singular_along_line(const Line6& l, const CycNum& t) {
    MForm f = quartic_ft(*l.a.front().ctx(), t);
    CurveParam c = line_param(l.a, l.b);
    MForm d0 = f.derivative(0);
    for (int i = 1; i < 6; ++i)
        if (!restrict(f.derivative(i) - d0, c).is_zero()) return false;
    return true;
}

bool is_singular_point(const Vec& p, const CycNum& t) {
    return is_zero(mod_ones(gradient(quartic_ft(*p.front().ctx(), t), p)));
}

int node_rank(const Vec& p, const CycNum& t) {
    const FieldCtx& ctx = *p.front().ctx();
    return hessian_rank_affine(quartic_ft(ctx, t), p, sum_zero_directions(ctx));
}

std::vector<std::vector<Vec>> orbit_census_p4(const FieldCtx& ctx, const PermGroup& g, int bound) {
    std::vector<Mat> gens;
    for (const Perm& p : g.gens()) gens.push_back(w5_model(ctx, p));
    std::vector<std::vector<Vec>> out;
    for (const OrbitInfo& o : small_orbit_census(gens, census_candidates(ctx, nullptr, g, bound), bound)) {
        std::vector<Vec> pts;
        for (const Vec& y : o.points) pts.push_back(normalize_projective(hyperplane_to_six(y)));
        out.push_back(pts);
    }
    return out;
}

// ---- image identification ----------------------------------------------------------

std::vector<Mat> induced_action(const CoverGroup& cover, const std::vector<Perm>& gens, const std::vector<MForm>& basis) {
    const FieldCtx& ctx = cover.ctx();
    std::vector<Vec> cols;
    for (const MForm& f : basis) cols.push_back(f.coeff_vector());
    Mat B = Mat::from_columns(ctx, cols, static_cast<int>(cols.front().size()));
    std::vector<Mat> out;
    for (const Perm& p : gens) {
        const Mat& u = cover.matrix(cover.preimages(p).front());
        Mat m(ctx, static_cast<int>(basis.size()), static_cast<int>(basis.size()));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto x = solve(B, act(u, basis[j]).coeff_vector());
            if (!x) throw std::invalid_argument("induced_action: span is not invariant under " + p.str());
            for (std::size_t i = 0; i < basis.size(); ++i) m(static_cast<int>(i), static_cast<int>(j)) = (*x)[i];
        }
        out.push_back(m);
    }
    return out;
}

ImageResult identify_image(const CoverGroup& cover, const PermGroup& g, const std::vector<MForm>& basis) {
    if (basis.size() != 5) throw std::invalid_argument("identify_image: linear system must have dimension 5");
    const FieldCtx& ctx = cover.ctx();
    if (commutant(induced_action(cover, g.gens(), basis)).size() != 1)
        throw std::invalid_argument("identify_image: induced action is reducible");

    ImageResult res;
    for (const PermGroup& h : subgroup_classes(g, g.order() / 6)) {
        if (h.order() * 6 != g.order()) continue;
        std::string label = subgroup_label(g, h);
        auto act_h = induced_action(cover, h.gens(), basis);
        for (int sign_char = 0; sign_char <= 1; ++sign_char) {
            std::string chname = sign_char ? "sign" : "trivial";
            auto chi = [&](const Perm& p) { return sign_char ? p.sign() : 1; };
            std::vector<Vec> rows;
            for (std::size_t k = 0; k < act_h.size(); ++k) {
                Mat m = act_h[k] - Mat::identity(ctx, 5) * CycNum(ctx, chi(h.gens()[k]));
                for (int i = 0; i < 5; ++i) rows.push_back(m.row(i));
            }
            auto fixed = kernel(Mat::from_rows(ctx, rows));
            std::string prefix = label + "/" + chname + ": ";
            if (fixed.size() != 1) {
                res.attempts.push_back(prefix + "fixed space of dimension " + std::to_string(fixed.size()));
                continue;
            }
            MForm q0(ctx, 4, 4);
            for (std::size_t j = 0; j < 5; ++j) q0 += basis[j] * fixed[0][j];
            std::vector<MForm> q;
            for (const Perm& r : g.left_coset_reps(h))
                q.push_back(act(cover.matrix(cover.preimages(r).front()), q0) * CycNum(ctx, chi(r)));
            MForm sum(ctx, 4, 4);
            for (const MForm& f : q) sum += f;
            std::vector<Vec> qv;
            for (const MForm& f : q) qv.push_back(f.coeff_vector());
            if (!sum.is_zero() || rank(Mat::from_rows(ctx, qv)) != 5) {
                res.attempts.push_back(prefix + "q_i do not satisfy sum = 0 with rank 5");
                continue;
            }
            MForm p4(ctx, 4, 16), s(ctx, 4, 8);
            for (const MForm& f : q) {
                MForm f2 = f * f;
                s += f2;
                p4 += f2 * f2;
            }
            MForm p2 = s * s;
            if (p2.is_zero()) throw std::runtime_error("identify_image: (sum q_i^2)^2 vanishes");
            TCondition tc = solve_proportional(p4.coeff_vector(), p2.coeff_vector());
            if (tc.kind != TCondition::Value) {
                res.attempts.push_back(prefix + "sum q^4 is not proportional to (sum q^2)^2");
                continue;
            }
            res.attempts.push_back(prefix + tc.str());
            if (!res.found) {
                res.found = true;
                res.t = tc.value;
                res.subgroup = label;
                res.character = chname;
                res.q = q;
            }
        }
    }
    return res;
}

Contraction contraction_check(const std::vector<MForm>& q, const CurveParam& c) {
    std::vector<Vec> r;
    int ref = -1;
    for (std::size_t i = 0; i < q.size(); ++i) {
        r.push_back(restrict(q[i], c).coeff_vector());
        if (ref < 0 && !is_zero(r.back())) ref = static_cast<int>(i);
    }
    if (ref < 0) throw std::invalid_argument("contraction_check: curve lies in the base locus");
    Contraction out;
    const Vec& base = r[static_cast<std::size_t>(ref)];
    for (const Vec& v : r) {
        TCondition tc = solve_proportional(v, base);
        if (tc.kind != TCondition::Value) return out;
        out.image.push_back(tc.value);
    }
    out.contracted = true;
    out.image = normalize_projective(out.image);
    return out;
}

// ---- arithmetic ------------------------------------------------------------------

std::set<int> rh_search(int group_order, const std::vector<int>& orbit_lengths, int g_min, int g_max) {
    std::set<int> out;
    if (g_max < g_min) return out;
    const long top = 2L * g_max - 2;
    std::vector<long> weights;
    for (int len : orbit_lengths) {
        if (len <= 0 || group_order % len != 0) throw std::invalid_argument("rh_search: orbit length must divide the group order");
        weights.push_back(group_order - len);
    }
    // 2g - 2 = |G| (2 gq - 2) + sum a_k w_k; the sum is nonnegative, so gq is bounded by top.
    for (long gq = 0; static_cast<long>(group_order) * (2 * gq - 2) <= top; ++gq) {
        long base = static_cast<long>(group_order) * (2 * gq - 2);
        std::function<void(std::size_t, long)> rec = [&](std::size_t k, long acc) {
            if (acc > top) return;
            if (k == weights.size()) {
                if (acc % 2 == 0) {
                    long g = acc / 2 + 1;
                    if (g >= g_min && g <= g_max) out.insert(static_cast<int>(g));
                }
                return;
            }
            if (weights[k] == 0) {
                rec(k + 1, acc);
                return;
            }
            for (long a = 0; acc + a * weights[k] <= top; ++a) rec(k + 1, acc + a * weights[k]);
        };
        rec(0, base);
    }
    return out;
}

NumericIdentities numeric_identities() {
    const FieldCtx& ctx = FieldCtx::default_ctx();
    NumericIdentities n;
    n.det = det(Mat::from_integers(ctx, {{-10, 20, 5}, {20, -10, 5}, {5, 5, 4}})).rational_value();
    n.six_line_degree = 64 - 72 + 12;
    n.ten_line_degree = 64 - 60 + 10;
    return n;
}

}  // namespace qv
