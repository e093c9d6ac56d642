#include "qv/monomial.hpp"
#include "qv/rep.hpp"

#include <map>

namespace qv {

Mat perm_matrix(const FieldCtx& ctx, const Perm& p) {
    Mat m(ctx, kDegree, kDegree);
    for (int i = 0; i < kDegree; ++i) m(p(i), i) = CycNum(ctx, 1);
    return m;
}

Mat so6_model(const FieldCtx& ctx, const Perm& p) {
    int s = p.sign();
    Mat m = perm_matrix(ctx, p) * CycNum(ctx, s);
    if (s == -1) {
        CycNum third(ctx, make_rational(1, 3));  // (1 - (-1))/6
        for (int i = 0; i < kDegree; ++i)
            for (int j = 0; j < kDegree; ++j) m(i, j) += third;
    }
    return m;
}

Mat w5_model(const FieldCtx& ctx, const Perm& p) {
    // sign(p) times the permutation action on the sum-zero hyperplane, the
    // same action so6_model has there.
    CycNum s(ctx, p.sign());
    Mat m(ctx, 5, 5);
    for (int i = 0; i < 5; ++i) {
        if (p(i) != 5) m(p(i), i) += s;
        if (p(5) != 5) m(p(5), i) -= s;
    }
    return m;
}

Mat wedge2(const Mat& h) {
    const int n = h.rows();
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) idx.emplace_back(i, j);
    const int N = static_cast<int>(idx.size());
    Mat w(h.ctx(), N, N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            auto [i, j] = idx[static_cast<std::size_t>(a)];
            auto [k, l] = idx[static_cast<std::size_t>(b)];
            w(a, b) = h(i, k) * h(j, l) - h(i, l) * h(j, k);
        }
    return w;
}

Mat sym_power_matrix(const Mat& g, int d) {
    const int n = g.rows();
    const auto& mons = monomials(n, d);
    const int N = static_cast<int>(mons.size());
    Mat out(g.ctx(), N, N);
    for (int r = 0; r < N; ++r) {
        // Expand prod_k (row k of g . x)^{e_k}.
        std::map<std::uint64_t, CycNum> poly;
        poly[pack_exponent(Exponent(static_cast<std::size_t>(n), 0))] = CycNum(g.ctx(), 1);
        for (int k = 0; k < n; ++k)
            for (int rep = 0; rep < mons[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]; ++rep) {
                std::map<std::uint64_t, CycNum> next;
                for (const auto& [key, c] : poly)
                    for (int l = 0; l < n; ++l) {
                        if (g(k, l).is_zero()) continue;
                        Exponent e = unpack_exponent(key, n);
                        ++e[static_cast<std::size_t>(l)];
                        CycNum& slot = next[pack_exponent(e)];
                        if (!slot.bound()) slot = CycNum(g.ctx(), 0);
                        slot.add_product(c, g(k, l));
                    }
                poly.swap(next);
            }
        for (const auto& [key, c] : poly) {
            if (c.is_zero()) continue;
            out(r, monomial_index(unpack_exponent(key, n))) = c;
        }
    }
    return out;
}

bool is_orthogonal(const Mat& m) { return m.rows() == m.cols() && (m.transpose() * m).is_identity(); }

}  // namespace qv
