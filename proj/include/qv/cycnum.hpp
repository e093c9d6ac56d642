#pragma once

#include "qv/field.hpp"
#include "qv/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qv {

// An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).
//
// A default-constructed CycNum is an "unbound" zero with no context; it adopts
// the context of whatever it is combined with.  Every bound value carries a
// coefficient vector of length exactly phi(N).
class CycNum {
public:
    CycNum() = default;
    CycNum(const FieldCtx& ctx, const Rational& r);
    CycNum(const FieldCtx& ctx, long r) : CycNum(ctx, Rational(r)) {}
    CycNum(const FieldCtx& ctx, std::vector<Rational> coeffs);

    // zeta_N^k.
    static CycNum zeta(const FieldCtx& ctx, long k);
    // zeta_n^k; throws FieldTooSmall if it is not in the field.
    static CycNum root_of_unity(const FieldCtx& ctx, long k, long n);

    const FieldCtx* ctx() const { return ctx_; }
    bool bound() const { return ctx_ != nullptr; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws unless is_rational()
    int support_size() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator*=(const Rational& r);
    CycNum& operator/=(const CycNum& o);

    CycNum inverse() const;
    // The automorphism zeta -> zeta^k, gcd(k, N) = 1.
    CycNum galois(long k) const;
    CycNum conj() const { return galois(-1); }
    // Multiply by zeta^k without a general product.
    CycNum times_zeta(long k) const;
    // Field norm down to Q.
    Rational norm() const;

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    std::size_t hash() const;
    std::string str() const;

    // Adds a*b into *this (a fused multiply-add that avoids a temporary).
    void add_product(const CycNum& a, const CycNum& b);

private:
    void bind(const FieldCtx* ctx);
    const FieldCtx* adopt(const CycNum& o);
    const FieldCtx* ctx_ = nullptr;
    std::vector<Rational> c_;
};

inline CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
inline CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
CycNum operator*(const CycNum& a, const CycNum& b);
inline CycNum operator*(CycNum a, const Rational& r) { return a *= r; }
inline CycNum operator*(const Rational& r, CycNum a) { return a *= r; }
inline CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const CycNum& x);

struct CycNumHash {
    std::size_t operator()(const CycNum& x) const { return x.hash(); }
};

// Image under zeta_M -> zeta_N^(N/M); requires M | N.
CycNum embed(const CycNum& a, const FieldCtx& target);
// Inverse of embed where defined; throws if a is not in the smaller field.
CycNum restrict_to(const CycNum& a, const FieldCtx& target);

// Square root of a rational, built from Gauss sums (sqrt(2) = zeta_8 + zeta_8^-1,
// sqrt(p) or i*sqrt(p) from the quadratic Gauss sum at p, i = zeta_4).
// Positive rationals get the positive real root.
CycNum sqrt_rational(const FieldCtx& ctx, const Rational& r);
// The smallest conductor M with sqrt(r) in Q(zeta_M).
long sqrt_conductor(const Rational& r);

// Deterministic ordering used wherever canonical choices are needed.
int compare_lex(const CycNum& a, const CycNum& b);

// Sign of the first nonzero coefficient (0 for zero).
int leading_sign(const CycNum& a);

}  // namespace qv
