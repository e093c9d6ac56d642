#pragma once

#include "qv/linalg.hpp"
#include "qv/monomial.hpp"

#include <string>
#include <vector>

namespace qv {

// A homogeneous form in n variables.  Coefficients are stored densely in the
// order of monomials(n, d); unbound CycNums stand for zero.
class MForm {
public:
    MForm() = default;
    MForm(const FieldCtx& ctx, int nvars, int degree);
    static MForm from_coeffs(const FieldCtx& ctx, int nvars, int degree, Vec coeffs);
    static MForm monomial(const FieldCtx& ctx, const Exponent& e, const CycNum& c);
    static MForm variable(const FieldCtx& ctx, int nvars, int i);
    // sum_i c_i x_i
    static MForm linear(const FieldCtx& ctx, const Vec& c);
    static MForm constant(const FieldCtx& ctx, int nvars, const CycNum& c);

    const FieldCtx& ctx() const { return *ctx_; }
    int nvars() const { return n_; }
    int degree() const { return d_; }
    const Vec& coeffs() const { return c_; }
    CycNum& coeff(int idx) { return c_[static_cast<std::size_t>(idx)]; }
    const CycNum& coeff(int idx) const { return c_[static_cast<std::size_t>(idx)]; }
    CycNum coeff(const Exponent& e) const;
    // Dense coefficient vector with zeros bound to the context.
    Vec coeff_vector() const;

    bool is_zero() const;
    int support_size() const;

    MForm operator-() const;
    MForm& operator+=(const MForm& o);
    MForm& operator-=(const MForm& o);
    MForm& operator*=(const CycNum& s);
    bool operator==(const MForm& o) const;
    bool operator!=(const MForm& o) const { return !(*this == o); }

    CycNum eval(const Vec& p) const;
    MForm derivative(int i) const;
    MForm pow(int k) const;
    std::string str() const;

private:
    const FieldCtx* ctx_ = nullptr;
    int n_ = 0, d_ = 0;
    Vec c_;
};

inline MForm operator+(MForm a, const MForm& b) { return a += b; }
inline MForm operator-(MForm a, const MForm& b) { return a -= b; }
inline MForm operator*(MForm a, const CycNum& s) { return a *= s; }
inline MForm operator*(const CycNum& s, MForm a) { return a *= s; }
// Product of forms; parallel over the terms of the left factor.
MForm operator*(const MForm& a, const MForm& b);
MForm multiply_serial(const MForm& a, const MForm& b);

// f(subs_0, ..., subs_{n-1}); all subs share one variable count and degree.
MForm substitute(const MForm& f, const std::vector<MForm>& subs);

// act(g, f)(x) = f(g^-1 x).  This is a left action: act(gh, f) = act(g, act(h, f)).
MForm act(const Mat& g, const MForm& f);
// Same, given g^-1 directly.
MForm act_by_inverse(const Mat& g_inv, const MForm& f);

Vec gradient(const MForm& f, const Vec& p);
Mat hessian(const MForm& f, const Vec& p);
// Rank of the quadratic part of f at the singular point p, restricted to the
// linear span of `directions` (the affine cone of the ambient space).  The
// vector p itself lies in the radical, so a node in P^k has rank k.
// Throws if f is not singular at p along those directions.
int hessian_rank_affine(const MForm& f, const Vec& p, const std::vector<Vec>& directions);

// Forms f of degree d with act(g, f) = chi_g f for every generator g
// (chi defaults to 1).  Exact kernel basis.
std::vector<MForm> invariant_forms(const std::vector<Mat>& gens, int d, const std::vector<CycNum>& chi = {});

// ---- binary forms: MForm with two variables (s, t) --------------------------
// Coefficient i belongs to s^(d-i) t^i.

// Parametrized curve: component forms in (s, t) of a common degree.
struct CurveParam {
    std::vector<MForm> comps;
    int degree() const { return comps.front().degree(); }
    Vec point(const CycNum& s, const CycNum& t) const;
};

// The line through a and b: s a + t b.
CurveParam line_param(const Vec& a, const Vec& b);
MForm restrict(const MForm& f, const CurveParam& c);

MForm binary_gcd(const MForm& f, const MForm& g);
// Number of distinct roots on P^1 of a nonzero binary form.
int distinct_root_count(const MForm& f);
bool is_squarefree(const MForm& f);
// Nonzero and a perfect square (quadratic case: zero discriminant).
bool is_square_quadratic(const MForm& f);

}  // namespace qv
