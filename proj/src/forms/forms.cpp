#include "qv/forms.hpp"
#include "qv/rep.hpp"

#include <omp.h>

#include <sstream>
#include <stdexcept>

namespace qv {

namespace {

constexpr int kParallelTerms = 64;

void require_same_shape(const MForm& a, const MForm& b) {
    if (a.nvars() != b.nvars() || a.degree() != b.degree()) throw std::invalid_argument("MForm: shape mismatch");
}

// Univariate polynomials, low degree first, trailing zeros trimmed.
using Poly = std::vector<CycNum>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
    CycNum lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        CycNum q = a.back() * lead_inv;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
        if (!b.empty()) {
            CycNum inv = b.back().inverse();
            for (auto& x : b) x *= inv;
        }
    }
    if (!a.empty()) {
        CycNum inv = a.back().inverse();
        for (auto& x : a) x *= inv;
    }
    return a;
}

}  // namespace

MForm::MForm(const FieldCtx& ctx, int nvars, int degree)
    : ctx_(&ctx), n_(nvars), d_(degree), c_(static_cast<std::size_t>(monomial_count(nvars, degree))) {}

MForm MForm::from_coeffs(const FieldCtx& ctx, int nvars, int degree, Vec coeffs) {
    MForm f(ctx, nvars, degree);
    if (coeffs.size() != f.c_.size()) throw std::invalid_argument("MForm::from_coeffs: wrong length");
    f.c_ = std::move(coeffs);
    return f;
}

MForm MForm::monomial(const FieldCtx& ctx, const Exponent& e, const CycNum& c) {
    int d = 0;
    for (int x : e) d += x;
    MForm f(ctx, static_cast<int>(e.size()), d);
    f.c_[static_cast<std::size_t>(monomial_index(e))] = c;
    return f;
}

MForm MForm::variable(const FieldCtx& ctx, int nvars, int i) {
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(ctx, e, CycNum(ctx, 1));
}

MForm MForm::linear(const FieldCtx& ctx, const Vec& c) {
    const int n = static_cast<int>(c.size());
    MForm f(ctx, n, 1);
    // monomials(n, 1) lists x0, x1, ... in order
    for (int i = 0; i < n; ++i) f.c_[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
    return f;
}

MForm MForm::constant(const FieldCtx& ctx, int nvars, const CycNum& c) {
    MForm f(ctx, nvars, 0);
    f.c_[0] = c;
    return f;
}

CycNum MForm::coeff(const Exponent& e) const {
    int idx = monomial_index(e);
    if (idx < 0 || static_cast<int>(e.size()) != n_) return CycNum(*ctx_, 0);
    const CycNum& c = c_[static_cast<std::size_t>(idx)];
    return c.bound() ? c : CycNum(*ctx_, 0);
}

Vec MForm::coeff_vector() const {
    Vec out = c_;
    for (auto& x : out)
        if (!x.bound()) x = CycNum(*ctx_, 0);
    return out;
}

bool MForm::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

int MForm::support_size() const {
    int k = 0;
    for (const auto& x : c_)
        if (!x.is_zero()) ++k;
    return k;
}

MForm MForm::operator-() const {
    MForm r = *this;
    for (auto& x : r.c_)
        if (x.bound()) x = -x;
    return r;
}

MForm& MForm::operator+=(const MForm& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    return *this;
}

MForm& MForm::operator-=(const MForm& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    return *this;
}

MForm& MForm::operator*=(const CycNum& s) {
    for (auto& x : c_)
        if (!x.is_zero()) x *= s;
    return *this;
}

bool MForm::operator==(const MForm& o) const {
    if (n_ != o.n_ || d_ != o.d_) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

CycNum MForm::eval(const Vec& p) const {
    if (static_cast<int>(p.size()) != n_) throw std::invalid_argument("MForm::eval: point has wrong length");
    std::vector<std::vector<CycNum>> pw(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) {
        auto& v = pw[static_cast<std::size_t>(j)];
        v.push_back(CycNum(*ctx_, 1));
        for (int k = 1; k <= d_; ++k) v.push_back(v.back() * p[static_cast<std::size_t>(j)]);
    }
    const auto& mons = monomials(n_, d_);
    CycNum s(*ctx_, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        CycNum term = c_[i];
        for (int j = 0; j < n_; ++j) {
            int e = mons[i][static_cast<std::size_t>(j)];
            if (e) term *= pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)];
        }
        s += term;
    }
    return s;
}

MForm MForm::derivative(int i) const {
    if (d_ == 0) return MForm(*ctx_, n_, 0);
    MForm r(*ctx_, n_, d_ - 1);
    const auto& mons = monomials(n_, d_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        int e = mons[k][static_cast<std::size_t>(i)];
        if (e == 0 || c_[k].is_zero()) continue;
        Exponent m = mons[k];
        --m[static_cast<std::size_t>(i)];
        r.c_[static_cast<std::size_t>(monomial_index(m))] = c_[k] * Rational(e);
    }
    return r;
}

MForm MForm::pow(int k) const {
    if (k < 0) throw std::invalid_argument("MForm::pow: negative exponent");
    if (k == 0) return constant(*ctx_, n_, CycNum(*ctx_, 1));
    MForm r = *this;
    for (int i = 1; i < k; ++i) r = r * *this;
    return r;
}

std::string MForm::str() const {
    std::ostringstream os;
    const auto& mons = monomials(n_, d_);
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].str() << ")";
        for (int j = 0; j < n_; ++j) {
            int e = mons[i][static_cast<std::size_t>(j)];
            if (e == 1) os << "*x" << j;
            if (e > 1) os << "*x" << j << "^" << e;
        }
    }
    return first ? "0" : os.str();
}

namespace {

struct Terms {
    std::vector<std::uint64_t> key;
    std::vector<const CycNum*> val;
};

Terms nonzero_terms(const MForm& f) {
    Terms t;
    const auto& mons = monomials(f.nvars(), f.degree());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (!f.coeffs()[i].is_zero()) {
            t.key.push_back(pack_exponent(mons[i]));
            t.val.push_back(&f.coeffs()[i]);
        }
    return t;
}

void accumulate_row(const Terms& ta, std::size_t i, const Terms& tb, const std::unordered_map<std::uint64_t, int>& idx, Vec& acc) {
    for (std::size_t j = 0; j < tb.key.size(); ++j) {
        CycNum& slot = acc[static_cast<std::size_t>(idx.at(ta.key[i] + tb.key[j]))];
        slot.add_product(*ta.val[i], *tb.val[j]);
    }
}

}  // namespace

MForm multiply_serial(const MForm& a, const MForm& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("MForm product: variable counts differ");
    MForm r(a.ctx(), a.nvars(), a.degree() + b.degree());
    Terms ta = nonzero_terms(a), tb = nonzero_terms(b);
    const auto& idx = monomial_index_map(a.nvars(), r.degree());
    Vec acc(r.coeffs().size(), CycNum(a.ctx(), 0));
    for (std::size_t i = 0; i < ta.key.size(); ++i) accumulate_row(ta, i, tb, idx, acc);
    return MForm::from_coeffs(a.ctx(), a.nvars(), r.degree(), std::move(acc));
}

MForm operator*(const MForm& a, const MForm& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("MForm product: variable counts differ");
    Terms ta = nonzero_terms(a), tb = nonzero_terms(b);
    if (ta.key.size() * tb.key.size() < static_cast<std::size_t>(kParallelTerms * kParallelTerms) || omp_get_max_threads() == 1)
        return multiply_serial(a, b);
    const int deg = a.degree() + b.degree();
    const auto& idx = monomial_index_map(a.nvars(), deg);
    const std::size_t N = static_cast<std::size_t>(monomial_count(a.nvars(), deg));
    Vec total(N, CycNum(a.ctx(), 0));
#pragma omp parallel
    {
        Vec acc(N, CycNum(a.ctx(), 0));
#pragma omp for schedule(dynamic, 4)
        for (std::size_t i = 0; i < ta.key.size(); ++i) accumulate_row(ta, i, tb, idx, acc);
#pragma omp critical
        for (std::size_t k = 0; k < N; ++k)
            if (!acc[k].is_zero()) total[k] += acc[k];
    }
    return MForm::from_coeffs(a.ctx(), a.nvars(), deg, std::move(total));
}

MForm substitute(const MForm& f, const std::vector<MForm>& subs) {
    if (static_cast<int>(subs.size()) != f.nvars()) throw std::invalid_argument("substitute: wrong number of substitutions");
    const FieldCtx& ctx = f.ctx();
    const int m = subs.front().nvars(), e = subs.front().degree();
    std::vector<std::vector<MForm>> pw(subs.size());
    for (std::size_t j = 0; j < subs.size(); ++j) pw[j].push_back(MForm::constant(ctx, m, CycNum(ctx, 1)));
    const auto& mons = monomials(f.nvars(), f.degree());
    MForm r(ctx, m, f.degree() * e);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        MForm term = MForm::constant(ctx, m, f.coeffs()[i]);
        for (std::size_t j = 0; j < subs.size(); ++j) {
            int k = mons[i][j];
            if (k == 0) continue;
            while (static_cast<int>(pw[j].size()) <= k) pw[j].push_back(pw[j].back() * subs[j]);
            term = term * pw[j][static_cast<std::size_t>(k)];
        }
        r += term;
    }
    return r;
}

MForm act_by_inverse(const Mat& g_inv, const MForm& f) {
    // f(g^-1 x) = c . m(g^-1 x) = c . S(g^-1) m(x), so the new coefficients are S^T c.
    Mat S = sym_power_matrix(g_inv, f.degree());
    Vec c = f.coeff_vector();
    Vec out(c.size(), CycNum(f.ctx(), 0));
    for (int i = 0; i < S.rows(); ++i) {
        if (c[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < S.cols(); ++j)
            if (!S(i, j).is_zero()) out[static_cast<std::size_t>(j)].add_product(c[static_cast<std::size_t>(i)], S(i, j));
    }
    return MForm::from_coeffs(f.ctx(), f.nvars(), f.degree(), std::move(out));
}

MForm act(const Mat& g, const MForm& f) {
    auto gi = inverse(g);
    if (!gi) throw std::invalid_argument("act: singular matrix");
    return act_by_inverse(*gi, f);
}

Vec gradient(const MForm& f, const Vec& p) {
    Vec g;
    for (int i = 0; i < f.nvars(); ++i) g.push_back(f.derivative(i).eval(p));
    return g;
}

Mat hessian(const MForm& f, const Vec& p) {
    Mat h(f.ctx(), f.nvars(), f.nvars());
    for (int i = 0; i < f.nvars(); ++i) {
        MForm fi = f.derivative(i);
        for (int j = i; j < f.nvars(); ++j) {
            CycNum v = fi.derivative(j).eval(p);
            h(i, j) = v;
            h(j, i) = v;
        }
    }
    return h;
}

int hessian_rank_affine(const MForm& f, const Vec& p, const std::vector<Vec>& directions) {
    if (!f.eval(p).is_zero()) throw std::invalid_argument("hessian_rank_affine: point is not on the hypersurface");
    Vec g = gradient(f, p);
    for (const Vec& v : directions)
        if (!dot(g, v).is_zero()) throw std::invalid_argument("hessian_rank_affine: point is not singular");
    Mat B = Mat::from_columns(f.ctx(), directions, f.nvars());
    return rank(B.transpose() * hessian(f, p) * B);
}

std::vector<MForm> invariant_forms(const std::vector<Mat>& gens, int d, const std::vector<CycNum>& chi) {
    if (gens.empty()) throw std::invalid_argument("invariant_forms: no generators");
    const FieldCtx& ctx = gens.front().ctx();
    const int n = gens.front().rows();
    const int N = static_cast<int>(monomial_count(n, d));
    // act(g, f) = chi f  <=>  f(x) = chi f(g x)  <=>  c (chi S(g) - I) = 0.
    Mat sys(ctx, N * static_cast<int>(gens.size()), N);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        Mat S = sym_power_matrix(gens[k], d);
        CycNum x = chi.empty() ? CycNum(ctx, 1) : chi[k];
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                // row j of the transposed block
                CycNum v = S(i, j).is_zero() ? CycNum(ctx, 0) : x * S(i, j);
                if (i == j) v -= CycNum(ctx, 1);
                if (!v.is_zero()) sys(static_cast<int>(k) * N + j, i) = v;
            }
    }
    std::vector<MForm> out;
    for (Vec& v : kernel(sys)) out.push_back(MForm::from_coeffs(ctx, n, d, std::move(v)));
    return out;
}

Vec CurveParam::point(const CycNum& s, const CycNum& t) const {
    Vec out;
    for (const auto& c : comps) out.push_back(c.eval({s, t}));
    return out;
}

CurveParam line_param(const Vec& a, const Vec& b) {
    const FieldCtx& ctx = *a.front().ctx();
    CurveParam c;
    for (std::size_t j = 0; j < a.size(); ++j) c.comps.push_back(MForm::linear(ctx, {a[j], b[j]}));
    return c;
}

MForm restrict(const MForm& f, const CurveParam& c) { return substitute(f, c.comps); }

MForm binary_gcd(const MForm& f, const MForm& g) {
    if (f.nvars() != 2 || g.nvars() != 2) throw std::invalid_argument("binary_gcd: not binary forms");
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    // Dehomogenize at s = 1: coefficient i multiplies u^i with u = t/s.
    Poly pf = f.coeff_vector(), pg = g.coeff_vector();
    trim(pf);
    trim(pg);
    int mf = f.degree() - static_cast<int>(pf.size() - 1);  // multiplicity of the root s = 0
    int mg = g.degree() - static_cast<int>(pg.size() - 1);
    Poly q = poly_gcd(pf, pg);
    int m = std::min(mf, mg);
    int D = static_cast<int>(q.size()) - 1 + m;
    Vec c(static_cast<std::size_t>(D) + 1, CycNum(f.ctx(), 0));
    for (std::size_t j = 0; j < q.size(); ++j) c[j] = q[j];
    return MForm::from_coeffs(f.ctx(), 2, D, std::move(c));
}

int distinct_root_count(const MForm& f) {
    if (f.is_zero()) throw std::invalid_argument("distinct_root_count: zero form");
    if (f.degree() == 0) return 0;
    return f.degree() - binary_gcd(f.derivative(0), f.derivative(1)).degree();
}

bool is_squarefree(const MForm& f) { return distinct_root_count(f) == f.degree(); }

bool is_square_quadratic(const MForm& f) {
    if (f.nvars() != 2 || f.degree() != 2 || f.is_zero()) return false;
    Vec c = f.coeff_vector();
    return (c[1] * c[1] - CycNum(f.ctx(), 4) * c[0] * c[2]).is_zero();
}

}  // namespace qv
