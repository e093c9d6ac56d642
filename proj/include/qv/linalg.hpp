#pragma once

#include "qv/cycnum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qv {

using Vec = std::vector<CycNum>;

// Dense row-major matrix over one cyclotomic field.
class Mat {
public:
    Mat() = default;
    Mat(const FieldCtx& ctx, int rows, int cols);
    static Mat identity(const FieldCtx& ctx, int n);
    static Mat from_rows(const FieldCtx& ctx, const std::vector<Vec>& rows);
    static Mat from_columns(const FieldCtx& ctx, const std::vector<Vec>& cols, int nrows);
    static Mat from_integers(const FieldCtx& ctx, const std::vector<std::vector<long>>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    const FieldCtx& ctx() const { return *ctx_; }
    const FieldCtx* ctx_ptr() const { return ctx_; }

    CycNum& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(c_) + static_cast<std::size_t>(j)]; }
    const CycNum& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(c_) + static_cast<std::size_t>(j)];
    }

    Vec row(int i) const;
    Vec col(int j) const;
    void set_row(int i, const Vec& v);

    Mat transpose() const;
    CycNum trace() const;
    bool is_zero() const;
    bool is_identity() const;
    bool is_scalar() const;
    // Entry-wise Galois action zeta -> zeta^k.
    Mat galois(long k) const;

    Mat operator-() const;
    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(const CycNum& s);

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    std::size_t hash() const;
    std::string str() const;

private:
    const FieldCtx* ctx_ = nullptr;
    int r_ = 0, c_ = 0;
    std::vector<CycNum> a_;
};

Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& v);
inline Mat operator+(Mat a, const Mat& b) { return a += b; }
inline Mat operator-(Mat a, const Mat& b) { return a -= b; }
inline Mat operator*(Mat a, const CycNum& s) { return a *= s; }
inline Mat operator*(const CycNum& s, Mat a) { return a *= s; }

// Serial reference kernel: same arithmetic, no threading.
Mat mul_serial(const Mat& a, const Mat& b);

struct MatHash {
    std::size_t operator()(const Mat& m) const { return m.hash(); }
};

// Vector helpers.
CycNum dot(const Vec& a, const Vec& b);
Vec scale(const Vec& v, const CycNum& s);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
// Scale so the first nonzero entry is 1 (projective normal form).
Vec normalize_projective(const Vec& v);
bool projectively_equal(const Vec& a, const Vec& b);

struct RREF {
    Mat m;                 // reduced row echelon form
    std::vector<int> pivots;  // pivot column of each nonzero row
    int rank() const { return static_cast<int>(pivots.size()); }
};

// Gauss-Jordan elimination.  Pivots are chosen among candidate rows by
// sparsity (rationals first), which keeps cyclotomic entries small.
// rref() eliminates rows in parallel under OpenMP; rref_serial() is the
// single-threaded reference and must produce an identical result.
RREF rref(Mat a);
RREF rref_serial(Mat a);

int rank(const Mat& a);
// Basis of the right kernel {v : a v = 0}, one vector per free column, with
// a 1 in that column.
std::vector<Vec> kernel(const Mat& a);
// Left kernel {w : w a = 0}.
std::vector<Vec> left_kernel(const Mat& a);
CycNum det(const Mat& a);
std::optional<Mat> inverse(const Mat& a);
// Some solution of a x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Kernel of a - zeta_n^k I.  Throws FieldTooSmall when zeta_n^k is absent.
std::vector<Vec> eigenspace_root_of_unity(const Mat& a, long k, long n);
std::vector<Vec> eigenspace(const Mat& a, const CycNum& lambda);

// Characteristic polynomial det(xI - a), low degree first, monic.
std::vector<CycNum> charpoly(const Mat& a);

// Basis (rows of an RREF) of the span of the given vectors.
std::vector<Vec> span_basis(const FieldCtx& ctx, const std::vector<Vec>& vs, int dim);
// Basis of the intersection of two subspaces given by spanning vectors.
std::vector<Vec> intersect_spans(const FieldCtx& ctx, const std::vector<Vec>& a, const std::vector<Vec>& b, int dim);

// Multiplicative order of an invertible matrix (capped; 0 if over the cap).
int matrix_order(const Mat& a, int cap = 1000);

}  // namespace qv
