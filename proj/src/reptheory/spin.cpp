#include "qv/rep.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace qv {

namespace {

Mat pauli(const FieldCtx& ctx, char which) {
    Mat m(ctx, 2, 2);
    switch (which) {
        case 'I':
            m(0, 0) = CycNum(ctx, 1);
            m(1, 1) = CycNum(ctx, 1);
            break;
        case 'X':
            m(0, 1) = CycNum(ctx, 1);
            m(1, 0) = CycNum(ctx, 1);
            break;
        case 'Y': {
            CycNum i = CycNum::root_of_unity(ctx, 1, 4);
            m(0, 1) = -i;
            m(1, 0) = i;
            break;
        }
        case 'Z':
            m(0, 0) = CycNum(ctx, 1);
            m(1, 1) = CycNum(ctx, -1);
            break;
    }
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.ctx(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

Mat restrict_even(const Mat& h8) {
    const auto& ev = even_half_spinor_states();
    Mat h(h8.ctx(), 4, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) h(a, b) = h8(ev[static_cast<std::size_t>(a)], ev[static_cast<std::size_t>(b)]);
    return h;
}

Vec unit(const FieldCtx& ctx, int k, int n = 6) {
    Vec v(static_cast<std::size_t>(n), CycNum(ctx, 0));
    v[static_cast<std::size_t>(k)] = CycNum(ctx, 1);
    return v;
}

std::mutex spin_mu;

}  // namespace

const std::vector<int>& even_half_spinor_states() {
    static const std::vector<int> states = [] {
        std::vector<int> s;
        for (int b = 0; b < 8; ++b)
            if (__builtin_popcount(static_cast<unsigned>(b)) % 2 == 0) s.push_back(b);
        return s;
    }();
    return states;
}

Mat clifford_gamma(const FieldCtx& ctx, int k) {
    // Jordan-Wigner: gamma_{2m} = Z..Z X I..I, gamma_{2m+1} = Z..Z Y I..I.
    static const char* words[6] = {"XII", "YII", "ZXI", "ZYI", "ZZX", "ZZY"};
    const char* w = words[k];
    return kron(kron(pauli(ctx, w[0]), pauli(ctx, w[1])), pauli(ctx, w[2]));
}

Mat clifford_of(const FieldCtx& ctx, const Vec& v) {
    Mat m(ctx, 8, 8);
    for (int k = 0; k < 6; ++k)
        if (!v[static_cast<std::size_t>(k)].is_zero()) m += clifford_gamma(ctx, k) * v[static_cast<std::size_t>(k)];
    return m;
}

Mat reflection(const Vec& v) {
    const FieldCtx& ctx = *v.front().ctx();
    const int n = static_cast<int>(v.size());
    CycNum q = dot(v, v);
    if (q.is_zero()) throw std::domain_error("reflection: isotropic vector");
    CycNum f = CycNum(ctx, -2) / q;
    Mat r = Mat::identity(ctx, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) += f * v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
    return r;
}

std::vector<Vec> cartan_dieudonne(const Mat& m) {
    const FieldCtx& ctx = m.ctx();
    const int n = m.rows();
    Mat a = m;
    std::vector<Vec> vs;
    for (int k = 0; k < n; ++k) {
        Vec v = sub(a.col(k), unit(ctx, k, n));
        if (is_zero(v)) continue;
        vs.push_back(v);
        a = reflection(v) * a;
    }
    if (!a.is_identity()) throw std::logic_error("cartan_dieudonne: factorization did not terminate at the identity");
    return vs;
}

Mat plucker_identification(const FieldCtx& ctx) {
    // Pairs of reflections whose products generate SO6: all coordinate pairs
    // plus a few non-coordinate unit vectors.
    std::vector<std::pair<Vec, Vec>> pairs;
    for (int k = 0; k < 6; ++k)
        for (int l = k + 1; l < 6; ++l) pairs.emplace_back(unit(ctx, k), unit(ctx, l));
    for (int k = 0; k < 5; ++k) {
        Vec w(6, CycNum(ctx, 0));
        w[static_cast<std::size_t>(k)] = CycNum(ctx, make_rational(3, 5));
        w[static_cast<std::size_t>(k + 1)] = CycNum(ctx, make_rational(4, 5));
        pairs.emplace_back(unit(ctx, k), w);
    }
    Mat A(ctx, 36 * static_cast<int>(pairs.size()), 36);
    int row = 0;
    for (const auto& [u, v] : pairs) {
        Mat h = restrict_even(clifford_of(ctx, u) * clifford_of(ctx, v));
        Mat M = reflection(u) * reflection(v);
        Mat L = wedge2(h);
        // (T L - M T)(a, b) = 0, unknown T(a, c) at position 6a + c.
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b, ++row)
                for (int c = 0; c < 6; ++c) {
                    A(row, 6 * a + c) += L(c, b);
                    A(row, 6 * c + b) -= M(a, c);
                }
    }
    auto K = kernel(A);
    if (K.size() != 1) throw std::logic_error("plucker_identification: kernel dimension " + std::to_string(K.size()));
    Vec t = normalize_projective(K[0]);
    Mat T(ctx, 6, 6);
    for (int a = 0; a < 6; ++a)
        for (int c = 0; c < 6; ++c) T(a, c) = t[static_cast<std::size_t>(6 * a + c)];
    return T;
}

SpinLiftResult spin_lift(const std::vector<Mat>& targets) {
    if (targets.empty()) return {};
    const FieldCtx& ctx = targets.front().ctx();
    SpinLiftResult out;
    out.plucker_basis = plucker_identification(ctx);
    const Mat& T = out.plucker_basis;
    for (const Mat& M : targets) {
        if (!is_orthogonal(M)) throw std::invalid_argument("spin_lift: target is not orthogonal for sum x_i^2");
        if (!det(M).is_one()) throw std::invalid_argument("spin_lift: target has determinant != 1");
        auto vs = cartan_dieudonne(M);
        Mat h8 = Mat::identity(ctx, 8);
        for (const Vec& v : vs) h8 = h8 * clifford_of(ctx, v);
        Mat h = restrict_even(h8);
        Mat R = T * wedge2(h), S = M * T;
        CycNum ratio;
        for (int i = 0; i < 6 && !ratio.bound(); ++i)
            for (int j = 0; j < 6; ++j)
                if (!S(i, j).is_zero()) {
                    ratio = R(i, j) / S(i, j);
                    break;
                }
        if (R != S * ratio) throw std::logic_error("spin_lift: wedge2 of the spinor product is not proportional to the target");
        if (!ratio.is_rational()) throw std::logic_error("spin_lift: normalization " + ratio.str() + " is not rational");
        Rational N = ratio.rational_value();
        Mat lift = h * sqrt_rational(ctx, N).inverse();
        CycNum d = det(lift);
        if (!d.is_one()) throw std::logic_error("spin_lift: lift has determinant " + d.str());
        // Deterministic sign: first nonzero entry has positive leading coefficient.
        for (int i = 0, done = 0; i < 4 && !done; ++i)
            for (int j = 0; j < 4; ++j)
                if (!lift(i, j).is_zero()) {
                    if (leading_sign(lift(i, j)) < 0) lift = -lift;
                    done = 1;
                    break;
                }
        if (T * wedge2(lift) != M * T) throw std::logic_error("spin_lift: verification of wedge2(lift) failed");
        out.lifts.push_back(lift);
        out.scale.push_back(N);
        out.reflections.push_back(static_cast<int>(vs.size()));
    }
    try {
        out.group_order = static_cast<int>(matrix_closure(out.lifts).size());
    } catch (const std::length_error&) {
        out.group_order = 0;
    }
    return out;
}

const SpinLiftResult& spin_data(const FieldCtx& ctx) {
    static std::map<long, std::unique_ptr<SpinLiftResult>> cache;
    std::lock_guard<std::mutex> lock(spin_mu);
    auto& slot = cache[ctx.order()];
    if (!slot)
        slot = std::make_unique<SpinLiftResult>(
            spin_lift({so6_model(ctx, Perm::parse("(01)")), so6_model(ctx, Perm::parse("(012345)"))}));
    return *slot;
}

const CoverGroup& spin_cover(const FieldCtx& ctx) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<CoverGroup>> cache;
    const SpinLiftResult& sd = spin_data(ctx);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[ctx.order()];
    if (!slot) slot = std::make_unique<CoverGroup>(ctx, sd.lifts, std::vector<Perm>{Perm::parse("(01)"), Perm::parse("(012345)")});
    return *slot;
}

}  // namespace qv
