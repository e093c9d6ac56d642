#include "qv/rep.hpp"

#include <stdexcept>

namespace qv {

std::vector<Mat> intertwiners(const std::vector<Mat>& gens1, const std::vector<Mat>& gens2) {
    if (gens1.empty() || gens1.size() != gens2.size()) throw std::invalid_argument("intertwiners: generator lists differ");
    const FieldCtx& ctx = gens1.front().ctx();
    const int n = gens1.front().rows(), m = gens2.front().rows();
    // X is m x n, unknown X(a, c) at a n + c; rows encode (X A - B X)(a, b).
    Mat sys(ctx, static_cast<int>(gens1.size()) * m * n, m * n);
    int row = 0;
    for (std::size_t g = 0; g < gens1.size(); ++g) {
        const Mat &A = gens1[g], &B = gens2[g];
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < n; ++b, ++row) {
                for (int c = 0; c < n; ++c)
                    if (!A(c, b).is_zero()) sys(row, a * n + c) += A(c, b);
                for (int c = 0; c < m; ++c)
                    if (!B(a, c).is_zero()) sys(row, c * n + b) -= B(a, c);
            }
    }
    std::vector<Mat> out;
    for (const Vec& v : kernel(sys)) {
        Mat X(ctx, m, n);
        for (int a = 0; a < m; ++a)
            for (int c = 0; c < n; ++c) X(a, c) = v[static_cast<std::size_t>(a * n + c)];
        out.push_back(std::move(X));
    }
    return out;
}

std::vector<Mat> commutant(const std::vector<Mat>& gens) { return intertwiners(gens, gens); }

bool is_invariant_subspace(const std::vector<Mat>& gens, const std::vector<Vec>& basis) {
    if (basis.empty()) return true;
    const FieldCtx& ctx = gens.front().ctx();
    int r = rank(Mat::from_rows(ctx, basis));
    for (const Mat& g : gens) {
        std::vector<Vec> ext = basis;
        for (const Vec& v : basis) ext.push_back(g * v);
        if (rank(Mat::from_rows(ctx, ext)) != r) return false;
    }
    return true;
}

namespace {

CycNum eval_poly(const std::vector<CycNum>& p, const CycNum& x) {
    CycNum r = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) r = r * x + p[i];
    return r;
}

// Distinct values |C|/d * (sum of a d-element sub-multiset of eigenvalues).
std::vector<CycNum> central_candidates(const Mat& g, int class_size) {
    const FieldCtx& ctx = g.ctx();
    int e = matrix_order(g);
    if (e == 0) throw std::invalid_argument("split_isotypic: element of unbounded order");
    std::vector<std::pair<CycNum, int>> eig;
    int total = 0;
    for (int k = 0; k < e; ++k) {
        int mult = static_cast<int>(eigenspace_root_of_unity(g, k, e).size());
        if (mult > 0) eig.emplace_back(CycNum::root_of_unity(ctx, k, e), mult);
        total += mult;
    }
    if (total != g.rows()) throw std::logic_error("split_isotypic: group element is not diagonalizable");
    long combos = 1;
    for (const auto& [v, m] : eig) combos *= (m + 1);
    if (combos > 200000) throw std::length_error("split_isotypic: too many eigenvalue sub-multisets");
    std::vector<CycNum> out;
    std::vector<int> take(eig.size(), 0);
    for (long t = 1; t < combos; ++t) {
        // odometer over multiplicity vectors
        for (std::size_t i = 0; i < take.size(); ++i) {
            if (take[i] < eig[i].second) {
                ++take[i];
                break;
            }
            take[i] = 0;
        }
        int d = 0;
        CycNum s(ctx, 0);
        for (std::size_t i = 0; i < take.size(); ++i) {
            d += take[i];
            if (take[i]) s += eig[i].first * Rational(take[i]);
        }
        CycNum lam = s * make_rational(class_size, d);
        bool dup = false;
        for (const auto& x : out)
            if (x == lam) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(lam);
    }
    return out;
}

}  // namespace

std::vector<std::vector<Vec>> split_isotypic(const std::vector<Mat>& elems, const std::vector<std::vector<int>>& classes) {
    if (elems.empty()) return {};
    const FieldCtx& ctx = elems.front().ctx();
    const int n = elems.front().rows();
    std::vector<std::vector<Vec>> pieces;
    {
        std::vector<Vec> all;
        for (int i = 0; i < n; ++i) all.push_back(Mat::identity(ctx, n).row(i));
        pieces.push_back(all);
    }
    for (const auto& cls : classes) {
        Mat K(ctx, n, n);
        for (int id : cls) K += elems[static_cast<std::size_t>(id)];
        if (K.is_scalar()) continue;
        auto poly = charpoly(K);
        std::vector<std::vector<Vec>> spaces;
        int found = 0;
        for (const CycNum& lam : central_candidates(elems[static_cast<std::size_t>(cls.front())], static_cast<int>(cls.size()))) {
            if (!eval_poly(poly, lam).is_zero()) continue;
            auto E = eigenspace(K, lam);
            found += static_cast<int>(E.size());
            spaces.push_back(std::move(E));
        }
        if (found != n) throw std::logic_error("split_isotypic: class sum eigenspaces do not fill the space");
        std::vector<std::vector<Vec>> next;
        for (const auto& P : pieces)
            for (const auto& E : spaces) {
                auto I = intersect_spans(ctx, P, E, n);
                if (!I.empty()) next.push_back(std::move(I));
            }
        pieces.swap(next);
    }
    return pieces;
}

}  // namespace qv
