#include "qv/geom3.hpp"

#include "qv/monomial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace qv {

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

struct VecHash {
    std::size_t operator()(const Vec& v) const {
        std::size_t h = 0x9e3779b9;
        for (const CycNum& x : v) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

const FieldCtx& ctx_of(const Vec& v) {
    for (const CycNum& x : v)
        if (x.bound()) return *x.ctx();
    throw std::invalid_argument("vector has no field context");
}

Vec bind_all(const FieldCtx& ctx, Vec v) {
    for (CycNum& x : v)
        if (!x.bound()) x = CycNum(ctx, 0);
    return v;
}

// Elements of the preimage of h, plus its classes in local numbering.
struct LocalGroup {
    std::vector<int> ids;
    std::vector<Mat> mats;
    std::vector<std::vector<int>> classes;
    std::vector<int> gens;
};

LocalGroup local_group(const CoverGroup& g, const PermGroup& h) {
    LocalGroup lg;
    lg.gens = g.lift_generators(h);
    lg.ids = g.closure(lg.gens);
    std::map<int, int> local;
    for (std::size_t i = 0; i < lg.ids.size(); ++i) {
        local[lg.ids[i]] = static_cast<int>(i);
        lg.mats.push_back(g.matrix(lg.ids[i]));
    }
    lg.classes = g.classes_within(lg.gens);
    for (auto& c : lg.classes)
        for (int& x : c) x = local.at(x);
    return lg;
}

// Sample points s a + t b on a line: (0:1) first, then (1:u) for u = 0, 1, -1, 2, -2, ...
std::vector<Vec> line_samples(const ProjLine& l, int count) {
    const FieldCtx& ctx = ctx_of(l.a);
    std::vector<Vec> pts = {l.b};
    for (int k = 0; static_cast<int>(pts.size()) < count; ++k) {
        long u = (k == 0) ? 0 : ((k % 2 == 1) ? (k + 1) / 2 : -(k / 2));
        pts.push_back(add(l.a, scale(l.b, CycNum(ctx, u))));
    }
    return pts;
}

// Values of all monomials of degree d at p, in monomials(n, d) order.
Vec monomial_values(const Vec& p, int d) {
    const FieldCtx& ctx = ctx_of(p);
    int n = static_cast<int>(p.size());
    std::vector<Vec> pw(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        pw[static_cast<std::size_t>(i)].push_back(CycNum(ctx, 1));
        for (int k = 1; k <= d; ++k) pw[static_cast<std::size_t>(i)].push_back(pw[static_cast<std::size_t>(i)].back() * p[static_cast<std::size_t>(i)]);
    }
    Vec out;
    for (const Exponent& e : monomials(n, d)) {
        CycNum v(ctx, 1);
        for (int i = 0; i < n; ++i)
            if (e[static_cast<std::size_t>(i)] > 0) v = v * pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[static_cast<std::size_t>(i)])];
        out.push_back(v);
    }
    return out;
}

}  // namespace

// ---- lines ------------------------------------------------------------------------

Vec plucker(const Vec& a, const Vec& b) {
    Vec p;
    for (const auto& ij : kPairs) {
        auto i = static_cast<std::size_t>(ij[0]), j = static_cast<std::size_t>(ij[1]);
        p.push_back(a[i] * b[j] - a[j] * b[i]);
    }
    return p;
}

CycNum plucker_pairing(const Vec& p, const Vec& q) {
    return p[0] * q[5] + p[5] * q[0] - p[1] * q[4] - p[4] * q[1] + p[2] * q[3] + p[3] * q[2];
}

CycNum plucker_quadric(const Vec& p) { return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]; }

ProjLine ProjLine::through(const Vec& a, const Vec& b) {
    Vec p = plucker(a, b);
    if (is_zero(p)) throw std::invalid_argument("ProjLine: dependent spanning points");
    return ProjLine{normalize_projective(a), normalize_projective(b), normalize_projective(p)};
}

ProjLine ProjLine::from_plucker(const Vec& p) {
    if (is_zero(p)) throw std::invalid_argument("ProjLine: zero Plucker vector");
    if (!plucker_quadric(p).is_zero()) throw std::invalid_argument("ProjLine: not a decomposable Plucker vector");
    const FieldCtx& ctx = ctx_of(p);
    // skew matrix P with P_ij = p_ij; for p = a ^ b its columns lie in span(a, b)
    Mat P(ctx, 4, 4);
    for (int k = 0; k < 6; ++k) {
        P(kPairs[k][0], kPairs[k][1]) = p[static_cast<std::size_t>(k)];
        P(kPairs[k][1], kPairs[k][0]) = -p[static_cast<std::size_t>(k)];
    }
    for (int k = 0; k < 6; ++k)
        if (!p[static_cast<std::size_t>(k)].is_zero()) {
            Vec a = bind_all(ctx, P.col(kPairs[k][0])), b = bind_all(ctx, P.col(kPairs[k][1]));
            ProjLine l = through(a, b);
            if (l.coords != normalize_projective(p)) throw std::logic_error("ProjLine::from_plucker: reconstruction mismatch");
            return l;
        }
    throw std::logic_error("unreachable");
}

bool ProjLine::contains(const Vec& x) const {
    return rank(Mat::from_rows(ctx_of(a), {a, b, x})) == 2;
}

bool lines_meet(const ProjLine& l, const ProjLine& m) { return plucker_pairing(l.coords, m.coords).is_zero(); }

ProjLine apply(const Mat& g, const ProjLine& l) { return ProjLine::through(g * l.a, g * l.b); }

std::vector<ProjLine> line_orbit(const ProjLine& l, const std::vector<Mat>& gens) {
    std::vector<ProjLine> out = {l};
    std::unordered_set<Vec, VecHash> seen = {l.coords};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const Mat& g : gens) {
            ProjLine m = apply(g, out[i]);
            if (seen.insert(m.coords).second) out.push_back(m);
        }
    return out;
}

std::vector<Vec> point_orbit(const Vec& p, const std::vector<Mat>& gens, int cap) {
    std::vector<Vec> out = {normalize_projective(p)};
    std::unordered_set<Vec, VecHash> seen = {out.front()};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const Mat& g : gens) {
            Vec q = normalize_projective(g * out[i]);
            if (seen.insert(q).second) {
                out.push_back(q);
                if (static_cast<int>(out.size()) > cap) return out;
            }
        }
    return out;
}

std::vector<std::vector<int>> incidence_profile(const std::vector<ProjLine>& lines) {
    std::size_t n = lines.size();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (lines[i] == lines[j]) throw std::invalid_argument("incidence_profile: repeated line");
            m[i][j] = m[j][i] = lines_meet(lines[i], lines[j]) ? 1 : 0;
        }
    return m;
}

bool is_double_five(const std::vector<ProjLine>& L, const std::vector<ProjLine>& Lp) {
    if (L.size() != 5 || Lp.size() != 5) return false;
    std::vector<ProjLine> all = L;
    all.insert(all.end(), Lp.begin(), Lp.end());
    auto m = incidence_profile(all);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            if (i != j && (m[i][j] != 0 || m[5 + i][5 + j] != 0)) return false;
            if (m[i][5 + j] != (i == j ? 0 : 1)) return false;
        }
    return true;
}

TransversalResult transversals(const std::array<ProjLine, 4>& ls) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (lines_meet(ls[i], ls[j])) throw std::invalid_argument("transversals: input lines are not pairwise skew");
    const FieldCtx& ctx = ctx_of(ls[0].a);
    // pairing(q, p) = q . (p reversed with signs)
    std::vector<Vec> rows;
    for (const ProjLine& l : ls) {
        const Vec& p = l.coords;
        rows.push_back({p[5], -p[4], p[3], p[2], -p[1], p[0]});
    }
    auto ker = kernel(Mat::from_rows(ctx, rows));
    TransversalResult r;
    if (ker.size() > 2) {
        r.degenerate = true;
        return r;
    }
    const Vec &u = ker[0], &v = ker[1];
    // Q(x u + y v) = a x^2 + b x y + c y^2
    CycNum a = plucker_quadric(u), b = plucker_pairing(u, v), c = plucker_quadric(v);
    if (a.is_zero() && b.is_zero() && c.is_zero()) {
        r.degenerate = true;
        return r;
    }
    CycNum disc = b * b - a * c * Rational(4);
    if (!disc.is_zero()) {
        r.count = 2;
        // roots in the field are found only in the easy cases a = 0 or c = 0
        if (a.is_zero()) {
            r.lines.push_back(ProjLine::from_plucker(v));
            r.lines.push_back(ProjLine::from_plucker(sub(scale(u, c), scale(v, b))));
        } else if (c.is_zero()) {
            r.lines.push_back(ProjLine::from_plucker(u));
            r.lines.push_back(ProjLine::from_plucker(sub(scale(v, a), scale(u, b))));
        }
        return r;
    }
    r.count = 1;
    r.double_root = true;
    Vec q = a.is_zero() ? u : add(scale(u, -b / (a * Rational(2))), v);
    r.lines.push_back(ProjLine::from_plucker(q));
    return r;
}

ProjLine plane_intersection(const ProjLine& l1, const ProjLine& m1, const ProjLine& l2, const ProjLine& m2) {
    const FieldCtx& ctx = ctx_of(l1.a);
    std::vector<Vec> p1 = span_basis(ctx, {l1.a, l1.b, m1.a, m1.b}, 4), p2 = span_basis(ctx, {l2.a, l2.b, m2.a, m2.b}, 4);
    if (p1.size() != 3 || p2.size() != 3) throw std::invalid_argument("plane_intersection: lines do not span a plane");
    auto common = intersect_spans(ctx, p1, p2, 4);
    if (common.size() != 2) throw std::invalid_argument("plane_intersection: planes do not meet in a line");
    return ProjLine::through(common[0], common[1]);
}

// ---- invariant subspaces ------------------------------------------------------------

std::pair<ProjLine, ProjLine> fixed_lines(const CoverGroup& g, const PermGroup& h) {
    LocalGroup lg = local_group(g, h);
    auto pieces = split_isotypic(lg.mats, lg.classes);
    if (pieces.size() != 2 || pieces[0].size() != 2 || pieces[1].size() != 2)
        throw std::invalid_argument("fixed_lines: U4 does not split as 2 + 2 under " + h.name());
    std::vector<Mat> gens;
    for (int id : lg.gens) gens.push_back(g.matrix(id));
    ProjLine l = ProjLine::through(pieces[0][0], pieces[0][1]), m = ProjLine::through(pieces[1][0], pieces[1][1]);
    for (const Mat& x : gens)
        if (apply(x, l) != l || apply(x, m) != m) throw std::logic_error("fixed_lines: split piece is not invariant");
    return {l, m};
}

PermGroup line_stabilizer(const CoverGroup& g, const PermGroup& h, const ProjLine& l) {
    ElementSet s;
    for (const Perm& p : h.elements())
        if (apply(g.matrix(g.preimages(p).front()), l) == l) s.set(static_cast<std::size_t>(p.index()));
    return PermGroup::from_set(s, "Stab");
}

std::vector<Vec> joint_eigenvectors(const std::vector<Mat>& gens, int* max_dim) {
    if (gens.empty()) throw std::invalid_argument("joint_eigenvectors: no generators");
    const FieldCtx& ctx = gens.front().ctx();
    int n = gens.front().rows();
    std::vector<std::vector<Vec>> spaces;
    {
        std::vector<Vec> full;
        for (int i = 0; i < n; ++i) full.push_back(Mat::identity(ctx, n).row(i));
        spaces.push_back(full);
    }
    for (const Mat& g : gens) {
        int e = matrix_order(g);
        if (e == 0) throw std::invalid_argument("joint_eigenvectors: generator of infinite or large order");
        std::vector<std::vector<Vec>> next;
        for (long k = 0; k < e; ++k) {
            auto eig = eigenspace_root_of_unity(g, k, e);
            if (eig.empty()) continue;
            for (const auto& s : spaces) {
                auto common = intersect_spans(ctx, s, eig, n);
                if (!common.empty()) next.push_back(common);
            }
        }
        spaces = std::move(next);
    }
    std::vector<Vec> out;
    int md = 0;
    for (const auto& s : spaces) {
        md = std::max(md, static_cast<int>(s.size()));
        if (s.size() == 1) out.push_back(normalize_projective(s[0]));
    }
    if (max_dim) *max_dim = md;
    return out;
}

std::vector<std::pair<std::string, std::vector<Mat>>> census_candidates(const FieldCtx& ctx, const CoverGroup* cover, const PermGroup& h, int bound) {
    int min_order = (h.order() + bound - 1) / bound;
    std::vector<std::pair<std::string, std::vector<Mat>>> out;
    for (const PermGroup& s : subgroup_classes(h, std::max(min_order, 2))) {
        std::vector<Mat> mats;
        if (cover) {
            for (int id : cover->lift_generators(s)) mats.push_back(cover->matrix(id));
        } else {
            for (const Perm& p : s.gens()) mats.push_back(w5_model(ctx, p));
        }
        std::string label = "order " + std::to_string(s.order());
        if (!s.gens().empty()) {
            label += " <";
            for (std::size_t i = 0; i < s.gens().size(); ++i) label += (i ? "," : "") + s.gens()[i].str();
            label += ">";
        }
        out.emplace_back(label, mats);
    }
    return out;
}

std::vector<OrbitInfo> small_orbit_census(const std::vector<Mat>& gens,
                                          const std::vector<std::pair<std::string, std::vector<Mat>>>& candidates, int bound) {
    // Completeness: a point on an orbit of length <= bound has a stabilizer S
    // of order >= |G| / bound.  Some orbit point has S equal to a listed
    // representative, and is then a joint eigenvector of its generators.
    std::vector<OrbitInfo> out;
    std::unordered_set<Vec, VecHash> covered;
    for (const auto& [label, mats] : candidates) {
        if (mats.empty()) continue;
        int md = 0;
        auto vs = joint_eigenvectors(mats, &md);
        if (md >= 2) throw std::runtime_error("small_orbit_census: positive-dimensional fixed locus for " + label);
        for (const Vec& v : vs) {
            if (covered.count(v)) continue;
            auto orb = point_orbit(v, gens, bound);
            for (const Vec& q : orb) covered.insert(q);
            if (static_cast<int>(orb.size()) > bound) continue;
            out.push_back(OrbitInfo{static_cast<int>(orb.size()), v, orb, label});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const OrbitInfo& a, const OrbitInfo& b) { return a.length < b.length; });
    return out;
}

// ---- curves and surfaces ------------------------------------------------------------

CurveParam apply(const Mat& g, const CurveParam& c) {
    CurveParam out;
    for (int i = 0; i < g.rows(); ++i) {
        MForm f(g.ctx(), 2, c.degree());
        for (int j = 0; j < g.cols(); ++j)
            if (!g(i, j).is_zero()) f += c.comps[static_cast<std::size_t>(j)] * g(i, j);
        out.comps.push_back(f);
    }
    return out;
}

std::array<TwistedCubic, 2> twisted_cubics(const CoverGroup& g, const PermGroup& a5) {
    std::array<TwistedCubic, 2> out;
    auto target = g.preimage(a5);
    // The two curves come from the two 2-dimensional representations.  They
    // take different traces on an element of order 5, so the second search
    // sends its order-5 generator to the same element as the first one did;
    // an unconstrained search may land on the first representation again.
    std::vector<int> first;
    for (int gal = 1; gal <= 2; ++gal) {
        auto bi = binary_icosahedral_generators(g.ctx(), gal);
        std::vector<Mat> sym3 = {sym_power_matrix(bi[0], 3), sym_power_matrix(bi[1], 3)};
        auto iso = find_isomorphism(sym3, g, target, [&](int i, int id) {
            if (i == 0 && !first.empty()) return id == first[0];
            return sym3[static_cast<std::size_t>(i)].trace() == g.matrix(id).trace();
        });
        if (iso.size() != 2) throw std::runtime_error("twisted_cubics: no isomorphism onto the preimage of " + a5.name());
        if (first.empty()) first = iso;
        auto X = intertwiners(sym3, {g.matrix(iso[0]), g.matrix(iso[1])});
        if (X.size() != 1) throw std::runtime_error("twisted_cubics: intertwiner space has dimension " + std::to_string(X.size()));
        TwistedCubic& tc = out[static_cast<std::size_t>(gal - 1)];
        tc.galois = gal;
        tc.iso = iso;
        tc.intertwiner = X[0];
        for (int i = 0; i < 4; ++i) tc.param.comps.push_back(MForm::from_coeffs(g.ctx(), 2, 3, bind_all(g.ctx(), X[0].row(i))));
    }
    return out;
}

std::vector<std::vector<MForm>> quadric_pieces(const CoverGroup& g, const PermGroup& h) {
    LocalGroup lg = local_group(g, h);
    std::vector<Mat> on_coeffs;
    for (int id : lg.ids) on_coeffs.push_back(sym_power_matrix(g.matrix(g.inv(id)), 2).transpose());
    auto pieces = split_isotypic(on_coeffs, lg.classes);
    std::vector<std::vector<MForm>> out;
    for (const auto& p : pieces) {
        std::vector<MForm> fs;
        for (const Vec& v : p) fs.push_back(MForm::from_coeffs(g.ctx(), 4, 2, v));
        out.push_back(fs);
    }
    return out;
}

namespace {

// Tangent lines of a parametrized curve at (s : 1), s = 0, 1, -1, 2, ...
std::vector<ProjLine> tangent_lines(const CurveParam& c, int count) {
    const FieldCtx& ctx = c.comps.front().ctx();
    std::vector<ProjLine> out;
    CycNum one(ctx, 1);
    for (int k = 0; static_cast<int>(out.size()) < count; ++k) {
        CycNum s(ctx, (k % 2 == 1) ? (k + 1) / 2 : -(k / 2));
        Vec p, dp;
        for (const MForm& f : c.comps) {
            p.push_back(f.eval({s, one}));
            dp.push_back(f.derivative(0).eval({s, one}));
        }
        out.push_back(ProjLine::through(p, dp));
    }
    return out;
}

}  // namespace

MForm tangent_developable(const CurveParam& c) {
    // Quartics singular along a twisted cubic form a 6-dimensional space
    // (products of two quadrics through it), so the surface is pinned down by
    // its rulings instead: it contains every tangent line.  The kernel is
    // computed for the standard curve (s^3, s^2 t, s t^2, t^3), where all
    // entries are rational, and moved to c by its coefficient matrix X.
    if (c.comps.size() != 4 || c.degree() != 3) throw std::invalid_argument("tangent_developable: not a space cubic");
    const FieldCtx& ctx = c.comps.front().ctx();
    std::vector<Vec> rows;
    for (const MForm& f : c.comps) rows.push_back(f.coeff_vector());
    Mat X = Mat::from_rows(ctx, rows);
    if (!inverse(X)) throw std::invalid_argument("tangent_developable: curve spans a plane");

    CurveParam standard;
    for (int i = 0; i < 4; ++i) standard.comps.push_back(MForm::monomial(ctx, monomials(2, 3)[static_cast<std::size_t>(i)], CycNum(ctx, 1)));
    auto ker = system_through_lines(tangent_lines(standard, 14), 4);
    if (ker.size() != 1) throw std::runtime_error("tangent_developable: kernel has dimension " + std::to_string(ker.size()));
    MForm f = act(X, ker[0]);
    for (int i = 0; i < 4; ++i)
        if (!restrict(f.derivative(i), c).is_zero()) throw std::logic_error("tangent_developable: surface is not singular along the curve");
    for (const ProjLine& l : tangent_lines(c, 2))
        if (!restrict(f, line_param(l.a, l.b)).is_zero()) throw std::logic_error("tangent_developable: surface misses a tangent line");
    return f;
}

int common_zero_degree(const std::vector<MForm>& forms, const CurveParam& c) {
    MForm g;
    bool any = false;
    for (const MForm& f : forms) {
        MForm r = restrict(f, c);
        if (r.is_zero()) continue;
        g = any ? binary_gcd(g, r) : r;
        any = true;
        if (g.degree() == 0) return 0;
    }
    return any ? g.degree() : -1;
}

int curve_line_intersection_degree(const CurveParam& c, const ProjLine& l) {
    const FieldCtx& ctx = ctx_of(l.a);
    std::vector<MForm> eqs;
    for (const Vec& v : kernel(Mat::from_rows(ctx, {l.a, l.b}))) eqs.push_back(MForm::linear(ctx, v));
    return common_zero_degree(eqs, c);
}

std::vector<MForm> system_through_lines(const std::vector<ProjLine>& lines, int degree, const std::vector<Mat>& invariant_under) {
    if (lines.empty()) throw std::invalid_argument("system_through_lines: no lines");
    const FieldCtx& ctx = ctx_of(lines.front().a);
    int n = static_cast<int>(lines.front().a.size());
    std::vector<Vec> rows;
    for (const ProjLine& l : lines)
        for (const Vec& p : line_samples(l, degree + 1)) rows.push_back(monomial_values(p, degree));
    for (const Mat& g : invariant_under) {
        auto inv = inverse(g);
        if (!inv) throw std::invalid_argument("system_through_lines: singular matrix");
        Mat m = sym_power_matrix(*inv, degree).transpose() - Mat::identity(ctx, static_cast<int>(monomial_count(n, degree)));
        for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    }
    std::vector<MForm> out;
    for (const Vec& v : kernel(Mat::from_rows(ctx, rows))) out.push_back(MForm::from_coeffs(ctx, n, degree, v));
    for (const MForm& f : out)
        for (const ProjLine& l : lines)
            if (!restrict(f, line_param(l.a, l.b)).is_zero()) throw std::logic_error("system_through_lines: basis form misses a line");
    return out;
}

std::string to_string(Tangency t) {
    switch (t) {
        case Tangency::Tangent: return "tangent";
        case Tangency::Contained: return "contained";
        case Tangency::Transversal: return "transversal";
    }
    return "?";
}

Tangency quadric_tangency_check(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3, const ProjLine& l4) {
    if (lines_meet(l1, l2) || lines_meet(l1, l3) || lines_meet(l2, l3))
        throw std::invalid_argument("quadric_tangency_check: first three lines must be pairwise skew");
    auto qs = system_through_lines({l1, l2, l3}, 2);
    if (qs.size() != 1) throw std::runtime_error("quadric_tangency_check: quadric space has dimension " + std::to_string(qs.size()));
    MForm r = restrict(qs[0], line_param(l4.a, l4.b));
    if (r.is_zero()) return Tangency::Contained;
    return is_square_quadratic(r) ? Tangency::Tangent : Tangency::Transversal;
}

MForm pencil_member_through(const MForm& f1, const MForm& f2, const Vec& p) {
    CycNum a = f2.eval(p), b = -f1.eval(p);
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("pencil_member_through: point in the base locus");
    return f1 * a + f2 * b;
}

// ---- the configuration ------------------------------------------------------------

std::vector<Mat> lift_matrices(const CoverGroup& g, const std::vector<Perm>& ps) {
    std::vector<Mat> out;
    for (const Perm& p : ps) out.push_back(g.matrix(g.preimages(p).front()));
    return out;
}

std::vector<Mat> generator_matrices(const CoverGroup& g, const PermGroup& h) { return lift_matrices(g, h.gens()); }

namespace {

P3Scene build_scene(const FieldCtx& ctx) {
    const CoverGroup& g = spin_cover(ctx);
    const PermGroup &a5 = named_group("A5nst"), &a6 = named_group("A6");
    P3Scene sc;

    auto [l1, l1p] = fixed_lines(g, named_group("A4nst"));
    for (const Mat& r : lift_matrices(g, a5.left_coset_reps(named_group("A4nst")))) {
        sc.L.push_back(apply(r, l1));
        sc.Lp.push_back(apply(r, l1p));
    }

    auto [m1, m2] = fixed_lines(g, named_group("A5st"));
    for (const Mat& r : lift_matrices(g, a6.left_coset_reps(named_group("A5st")))) {
        sc.six1.push_back(apply(r, m1));
        sc.six2.push_back(apply(r, m2));
    }

    sc.cubics = twisted_cubics(g, a5);
    if (curve_line_intersection_degree(sc.cubics[0].param, sc.six1.front()) == 0) std::swap(sc.six1, sc.six2);
    for (const Mat& r : lift_matrices(g, a6.left_coset_reps(a5))) sc.cubic_orbit1.push_back(apply(r, sc.cubics[0].param));

    auto pieces = quadric_pieces(g, a5);
    for (std::size_t k = 0; k < 2; ++k) {
        for (const auto& piece : pieces) {
            bool all = piece.size() == 3;
            for (const MForm& q : piece) all = all && restrict(q, sc.cubics[k].param).is_zero();
            if (all) sc.cubic_quadrics[k] = piece;
        }
        if (sc.cubic_quadrics[k].empty()) throw std::logic_error("p3_scene: no quadric piece vanishes on a twisted cubic");
        sc.developables[k] = tangent_developable(sc.cubics[k].param);
    }
    return sc;
}

}  // namespace

const P3Scene& p3_scene(const FieldCtx& ctx) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<P3Scene>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[ctx.order()];
    if (!slot) slot = std::make_unique<P3Scene>(build_scene(ctx));
    return *slot;
}

}  // namespace qv
