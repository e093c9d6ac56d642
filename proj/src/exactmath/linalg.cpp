#include "qv/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace qv {

namespace {

// Below this many entries a parallel region costs more than it saves.
constexpr long kParallelThreshold = 2048;

void check_dims(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("dimension mismatch in ") + what);
}

Mat mul_impl(const Mat& a, const Mat& b, bool parallel) {
    check_dims(a.cols() == b.rows(), "matrix product");
    Mat r(a.ctx(), a.rows(), b.cols());
    const int n = a.rows(), m = b.cols(), k = a.cols();
    long work = static_cast<long>(n) * m * k;
#pragma omp parallel for schedule(dynamic) if (parallel && work > kParallelThreshold)
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l < k; ++l) {
            const CycNum& x = a(i, l);
            if (x.is_zero()) continue;
            for (int j = 0; j < m; ++j)
                if (!b(l, j).is_zero()) r(i, j).add_product(x, b(l, j));
        }
    }
    return r;
}

// Support size with zero counted as "worst" so it is never chosen.
int pivot_cost(const CycNum& x) { return x.is_zero() ? 1 << 30 : x.support_size(); }

RREF rref_impl(Mat a, bool parallel) {
    RREF out;
    const int R = a.rows(), C = a.cols();
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int best = -1, cost = 1 << 30;
        for (int i = r; i < R; ++i) {
            int pc = pivot_cost(a(i, c));
            if (pc < cost) {
                cost = pc;
                best = i;
                if (pc == 1) break;
            }
        }
        if (best < 0) continue;
        if (best != r)
            for (int j = c; j < C; ++j) std::swap(a(r, j), a(best, j));
        // Earlier columns of both rows are zero past the previous pivots, but
        // swap the full rows anyway to keep the matrix consistent.
        if (best != r)
            for (int j = 0; j < c; ++j) std::swap(a(r, j), a(best, j));
        CycNum inv = a(r, c).inverse();
        for (int j = c; j < C; ++j)
            if (!a(r, j).is_zero()) a(r, j) = a(r, j) * inv;
        std::vector<int> nz;
        for (int j = c + 1; j < C; ++j)
            if (!a(r, j).is_zero()) nz.push_back(j);
        long work = static_cast<long>(R) * static_cast<long>(nz.size() + 1) * a.ctx().degree();
#pragma omp parallel for schedule(dynamic) if (parallel && work > kParallelThreshold)
        for (int i = 0; i < R; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            CycNum f = -a(i, c);
            for (int j : nz) a(i, j).add_product(f, a(r, j));
            a(i, c) = CycNum(a.ctx(), 0);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.m = std::move(a);
    return out;
}

std::vector<Vec> kernel_from_rref(const RREF& rr) {
    const Mat& m = rr.m;
    const int C = m.cols();
    std::vector<char> is_pivot(static_cast<std::size_t>(C), 0);
    for (int p : rr.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
    std::vector<Vec> basis;
    for (int f = 0; f < C; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vec v(static_cast<std::size_t>(C), CycNum(m.ctx(), 0));
        v[static_cast<std::size_t>(f)] = CycNum(m.ctx(), 1);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
            const CycNum& x = m(static_cast<int>(i), f);
            if (!x.is_zero()) v[static_cast<std::size_t>(rr.pivots[i])] = -x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

Mat::Mat(const FieldCtx& ctx, int rows, int cols)
    : ctx_(&ctx), r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), CycNum(ctx, 0)) {}

Mat Mat::identity(const FieldCtx& ctx, int n) {
    Mat m(ctx, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = CycNum(ctx, 1);
    return m;
}

Mat Mat::from_rows(const FieldCtx& ctx, const std::vector<Vec>& rows) {
    int nc = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    Mat m(ctx, static_cast<int>(rows.size()), nc);
    for (int i = 0; i < m.r_; ++i) m.set_row(i, rows[static_cast<std::size_t>(i)]);
    return m;
}

Mat Mat::from_columns(const FieldCtx& ctx, const std::vector<Vec>& cols, int nrows) {
    Mat m(ctx, nrows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.c_; ++j) {
        check_dims(static_cast<int>(cols[static_cast<std::size_t>(j)].size()) == nrows, "from_columns");
        for (int i = 0; i < nrows; ++i) {
            const CycNum& x = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            m(i, j) = x.bound() ? x : CycNum(ctx, 0);
        }
    }
    return m;
}

Mat Mat::from_integers(const FieldCtx& ctx, const std::vector<std::vector<long>>& rows) {
    int nc = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    Mat m(ctx, static_cast<int>(rows.size()), nc);
    for (int i = 0; i < m.r_; ++i)
        for (int j = 0; j < nc; ++j) m(i, j) = CycNum(ctx, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
}

Vec Mat::row(int i) const {
    return Vec(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_);
}

Vec Mat::col(int j) const {
    Vec v;
    v.reserve(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
}

void Mat::set_row(int i, const Vec& v) {
    check_dims(static_cast<int>(v.size()) == c_, "set_row");
    for (int j = 0; j < c_; ++j) {
        const CycNum& x = v[static_cast<std::size_t>(j)];
        (*this)(i, j) = x.bound() ? x : CycNum(*ctx_, 0);
    }
}

Mat Mat::transpose() const {
    Mat t(*ctx_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

CycNum Mat::trace() const {
    CycNum s(*ctx_, 0);
    for (int i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
    return s;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    return true;
}

bool Mat::is_scalar() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            if (i != j && !(*this)(i, j).is_zero()) return false;
            if (i == j && (*this)(i, j) != (*this)(0, 0)) return false;
        }
    return true;
}

Mat Mat::galois(long k) const {
    Mat m(*this);
    for (auto& x : m.a_) x = x.galois(k);
    return m;
}

Mat Mat::operator-() const {
    Mat m(*this);
    for (auto& x : m.a_) x = -x;
    return m;
}

Mat& Mat::operator+=(const Mat& o) {
    check_dims(r_ == o.r_ && c_ == o.c_, "matrix sum");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    check_dims(r_ == o.r_ && c_ == o.c_, "matrix difference");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Mat& Mat::operator*=(const CycNum& s) {
    for (auto& x : a_)
        if (!x.is_zero()) x = x * s;
    return *this;
}

bool Mat::operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

std::size_t Mat::hash() const {
    std::size_t h = static_cast<std::size_t>(r_) * 31u + static_cast<std::size_t>(c_);
    for (const auto& x : a_) h = h * 1000003u ^ x.hash();
    return h;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    }
    os << "]";
    return os.str();
}

Mat operator*(const Mat& a, const Mat& b) { return mul_impl(a, b, true); }
Mat mul_serial(const Mat& a, const Mat& b) { return mul_impl(a, b, false); }

Vec operator*(const Mat& a, const Vec& v) {
    check_dims(a.cols() == static_cast<int>(v.size()), "matrix-vector product");
    Vec r(static_cast<std::size_t>(a.rows()), CycNum(a.ctx(), 0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero() && !v[static_cast<std::size_t>(j)].is_zero())
                r[static_cast<std::size_t>(i)].add_product(a(i, j), v[static_cast<std::size_t>(j)]);
    return r;
}

CycNum dot(const Vec& a, const Vec& b) {
    check_dims(a.size() == b.size(), "dot");
    CycNum s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) {
            if (!s.bound()) s = CycNum(*a[i].ctx(), 0);
            s.add_product(a[i], b[i]);
        }
    if (!s.bound() && !a.empty() && a[0].bound()) s = CycNum(*a[0].ctx(), 0);
    return s;
}

Vec scale(const Vec& v, const CycNum& s) {
    Vec r(v);
    for (auto& x : r)
        if (!x.is_zero()) x = x * s;
    return r;
}

Vec add(const Vec& a, const Vec& b) {
    check_dims(a.size() == b.size(), "vector sum");
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    check_dims(a.size() == b.size(), "vector difference");
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec normalize_projective(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return scale(v, x.inverse());
    throw std::domain_error("normalize_projective: zero vector");
}

bool projectively_equal(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    return normalize_projective(a) == normalize_projective(b);
}

RREF rref(Mat a) { return rref_impl(std::move(a), true); }
RREF rref_serial(Mat a) { return rref_impl(std::move(a), false); }

int rank(const Mat& a) { return rref(a).rank(); }

std::vector<Vec> kernel(const Mat& a) { return kernel_from_rref(rref(a)); }

std::vector<Vec> left_kernel(const Mat& a) { return kernel(a.transpose()); }

CycNum det(const Mat& a0) {
    check_dims(a0.rows() == a0.cols(), "det");
    Mat a = a0;
    const int n = a.rows();
    CycNum d(a.ctx(), 1);
    for (int c = 0; c < n; ++c) {
        int best = -1, cost = 1 << 30;
        for (int i = c; i < n; ++i) {
            int pc = pivot_cost(a(i, c));
            if (pc < cost) {
                cost = pc;
                best = i;
            }
        }
        if (best < 0) return CycNum(a.ctx(), 0);
        if (best != c) {
            for (int j = 0; j < n; ++j) std::swap(a(c, j), a(best, j));
            d = -d;
        }
        d = d * a(c, c);
        CycNum inv = a(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            CycNum f = -(a(i, c) * inv);
            for (int j = c + 1; j < n; ++j)
                if (!a(c, j).is_zero()) a(i, j).add_product(f, a(c, j));
            a(i, c) = CycNum(a.ctx(), 0);
        }
    }
    return d;
}

std::optional<Mat> inverse(const Mat& a) {
    check_dims(a.rows() == a.cols(), "inverse");
    const int n = a.rows();
    Mat aug(a.ctx(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = CycNum(a.ctx(), 1);
    }
    RREF rr = rref(std::move(aug));
    if (rr.rank() < n || rr.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
    Mat inv(a.ctx(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = rr.m(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    check_dims(a.rows() == static_cast<int>(b.size()), "solve");
    const int R = a.rows(), C = a.cols();
    Mat aug(a.ctx(), R, C + 1);
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < C; ++j) aug(i, j) = a(i, j);
        aug(i, C) = b[static_cast<std::size_t>(i)].bound() ? b[static_cast<std::size_t>(i)] : CycNum(a.ctx(), 0);
    }
    RREF rr = rref(std::move(aug));
    if (!rr.pivots.empty() && rr.pivots.back() == C) return std::nullopt;
    Vec x(static_cast<std::size_t>(C), CycNum(a.ctx(), 0));
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[static_cast<std::size_t>(rr.pivots[i])] = rr.m(static_cast<int>(i), C);
    return x;
}

std::vector<Vec> eigenspace(const Mat& a, const CycNum& lambda) {
    check_dims(a.rows() == a.cols(), "eigenspace");
    Mat m = a;
    for (int i = 0; i < m.rows(); ++i) m(i, i) -= lambda;
    return kernel(m);
}

std::vector<Vec> eigenspace_root_of_unity(const Mat& a, long k, long n) {
    return eigenspace(a, CycNum::root_of_unity(a.ctx(), k, n));
}

std::vector<CycNum> charpoly(const Mat& a) {
    check_dims(a.rows() == a.cols(), "charpoly");
    const int n = a.rows();
    const FieldCtx& F = a.ctx();
    std::vector<CycNum> c(static_cast<std::size_t>(n + 1), CycNum(F, 0));
    c[static_cast<std::size_t>(n)] = CycNum(F, 1);
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    Mat M(F, n, n);
    for (int k = 1; k <= n; ++k) {
        M = a * M;
        for (int i = 0; i < n; ++i) M(i, i) += c[static_cast<std::size_t>(n - k + 1)];
        Mat AM = a * M;
        c[static_cast<std::size_t>(n - k)] = AM.trace() * Rational(-1, k);
    }
    return c;
}

std::vector<Vec> span_basis(const FieldCtx& ctx, const std::vector<Vec>& vs, int dim) {
    if (vs.empty()) return {};
    Mat m(ctx, static_cast<int>(vs.size()), dim);
    for (int i = 0; i < m.rows(); ++i) m.set_row(i, vs[static_cast<std::size_t>(i)]);
    RREF rr = rref(std::move(m));
    std::vector<Vec> out;
    for (int i = 0; i < rr.rank(); ++i) out.push_back(rr.m.row(i));
    return out;
}

std::vector<Vec> intersect_spans(const FieldCtx& ctx, const std::vector<Vec>& a0, const std::vector<Vec>& b0, int dim) {
    auto a = span_basis(ctx, a0, dim);
    auto b = span_basis(ctx, b0, dim);
    if (a.empty() || b.empty()) return {};
    // Columns [a_1 .. a_p | -b_1 .. -b_q]; kernel vectors give sum x_i a_i = sum y_j b_j.
    Mat m(ctx, dim, static_cast<int>(a.size() + b.size()));
    for (int j = 0; j < static_cast<int>(a.size()); ++j)
        for (int i = 0; i < dim; ++i) m(i, j) = a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    for (int j = 0; j < static_cast<int>(b.size()); ++j)
        for (int i = 0; i < dim; ++i) m(i, static_cast<int>(a.size()) + j) = -b[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    std::vector<Vec> out;
    for (const auto& k : kernel(m)) {
        Vec v(static_cast<std::size_t>(dim), CycNum(ctx, 0));
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!k[j].is_zero()) v = add(v, scale(a[j], k[j]));
        out.push_back(std::move(v));
    }
    return span_basis(ctx, out, dim);
}

int matrix_order(const Mat& a, int cap) {
    Mat p = a;
    for (int k = 1; k <= cap; ++k) {
        if (p.is_identity()) return k;
        p = p * a;
    }
    return 0;
}

}  // namespace qv
