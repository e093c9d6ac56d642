#include "qv/cycnum.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qv {

namespace {

// Per-thread scratch for products: 2*phi(N) rationals, kept at zero between uses.
struct Scratch {
    std::vector<Rational> buf;
    Rational tmp;
    std::vector<int> ia, ib;
    void ensure(std::size_t n) {
        if (buf.size() < n) buf.resize(n);
    }
};

Scratch& scratch() {
    thread_local Scratch s;
    return s;
}

void check_same(const FieldCtx* a, const FieldCtx* b) {
    if (a && b && a != b)
        throw std::invalid_argument("CycNum: field context mismatch (Q(zeta_" + std::to_string(a->order()) +
                                    ") vs Q(zeta_" + std::to_string(b->order()) + "))");
}

// dst += c * src for a small integer c.
void addmul_si(Rational& dst, const Rational& src, long c, Rational& tmp) {
    if (c == 1) {
        dst += src;
        return;
    }
    if (c == -1) {
        dst -= src;
        return;
    }
    mpz_mul_si(mpq_numref(tmp.get_mpq_t()), mpq_numref(src.get_mpq_t()), c);
    mpz_set(mpq_denref(tmp.get_mpq_t()), mpq_denref(src.get_mpq_t()));
    mpq_canonicalize(tmp.get_mpq_t());
    dst += tmp;
}

long legendre(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long r = 1, b = a, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

// Squarefree part and square cofactor of a positive integer.
void squarefree_split(Integer n, Integer& square_root_part, std::vector<long>& primes) {
    square_root_part = 1;
    primes.clear();
    for (long p = 2; n > 1; ++p) {
        if (Integer(p) * p > n) {
            if (!n.fits_slong_p()) throw std::invalid_argument("sqrt_rational: prime factor too large");
            primes.push_back(n.get_si());
            break;
        }
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square_root_part *= p;
        if (e % 2) primes.push_back(p);
    }
}

}  // namespace

CycNum::CycNum(const FieldCtx& ctx, const Rational& r) : ctx_(&ctx), c_(static_cast<std::size_t>(ctx.degree())) {
    c_[0] = r;
}

CycNum::CycNum(const FieldCtx& ctx, std::vector<Rational> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<std::size_t>(ctx.degree()))
        throw std::invalid_argument("CycNum: coefficient vector has wrong length");
}

CycNum CycNum::zeta(const FieldCtx& ctx, long k) {
    CycNum r(ctx, 0);
    for (auto [i, c] : ctx.power(k)) r.c_[static_cast<std::size_t>(i)] = c;
    return r;
}

CycNum CycNum::root_of_unity(const FieldCtx& ctx, long k, long n) {
    long N = ctx.order();
    long m = root_of_unity_conductor(k, n);
    if (!field_has_root_order(N, m))
        throw FieldTooSmall(N, lcm_long(N, m), "root of unity zeta_" + std::to_string(n) + "^" + std::to_string(k));
    // zeta_n^k = zeta_N^(k*N/n) when n | N; for odd N and n | 2N use -zeta_N.
    if (N % n == 0) return zeta(ctx, (k % n) * (N / n));
    long kk = ((k % n) + n) % n;
    // zeta_n = zeta_{2N}^{2N/n}, and zeta_{2N} = -zeta_N^{(N+1)/2} for odd N.
    long e = kk * (2 * N / n);
    CycNum z = zeta(ctx, ((N + 1) / 2) * e);
    if (e % 2) z = -z;
    return z;
}

void CycNum::bind(const FieldCtx* ctx) {
    if (!ctx_ && ctx) {
        ctx_ = ctx;
        c_.assign(static_cast<std::size_t>(ctx->degree()), Rational(0));
    }
}

const FieldCtx* CycNum::adopt(const CycNum& o) {
    check_same(ctx_, o.ctx_);
    bind(o.ctx_);
    return ctx_;
}

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool CycNum::is_one() const {
    if (!ctx_) return false;
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("CycNum is not rational: " + str());
    return c_.empty() ? Rational(0) : c_[0];
}

int CycNum::support_size() const {
    int n = 0;
    for (const auto& x : c_) n += sgn(x) != 0;
    return n;
}

CycNum CycNum::operator-() const {
    CycNum r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (!o.ctx_) return *this;
    adopt(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    if (!o.ctx_) return *this;
    adopt(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
    return *this;
}

CycNum& CycNum::operator*=(const Rational& r) {
    if (sgn(r) == 0) {
        for (auto& x : c_) x = 0;
        return *this;
    }
    for (auto& x : c_)
        if (sgn(x) != 0) x *= r;
    return *this;
}

void CycNum::add_product(const CycNum& a, const CycNum& b) {
    if (!a.ctx_ || !b.ctx_) return;
    check_same(a.ctx_, b.ctx_);
    adopt(a);
    const FieldCtx& F = *ctx_;
    const int d = F.degree();
    Scratch& s = scratch();
    s.ensure(static_cast<std::size_t>(2 * d));
    s.ia.clear();
    s.ib.clear();
    for (int i = 0; i < d; ++i) {
        if (sgn(a.c_[static_cast<std::size_t>(i)]) != 0) s.ia.push_back(i);
        if (sgn(b.c_[static_cast<std::size_t>(i)]) != 0) s.ib.push_back(i);
    }
    if (s.ia.empty() || s.ib.empty()) return;
    int hi = 0;
    for (int i : s.ia)
        for (int j : s.ib) {
            mpq_mul(s.tmp.get_mpq_t(), a.c_[static_cast<std::size_t>(i)].get_mpq_t(),
                    b.c_[static_cast<std::size_t>(j)].get_mpq_t());
            s.buf[static_cast<std::size_t>(i + j)] += s.tmp;
            hi = std::max(hi, i + j);
        }
    for (int k = hi; k >= d; --k) {
        Rational& top = s.buf[static_cast<std::size_t>(k)];
        if (sgn(top) == 0) continue;
        for (auto [idx, c] : F.power(k)) addmul_si(s.buf[static_cast<std::size_t>(idx)], top, c, s.tmp);
        top = 0;
    }
    for (int i = 0; i < d; ++i) {
        Rational& v = s.buf[static_cast<std::size_t>(i)];
        if (sgn(v) != 0) {
            c_[static_cast<std::size_t>(i)] += v;
            v = 0;
        }
    }
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    if (!a.bound() || !b.bound()) return CycNum();
    CycNum r(*a.ctx(), 0);
    r.add_product(a, b);
    return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    if (!ctx_ || !o.ctx_) {
        check_same(ctx_, o.ctx_);
        bind(o.ctx_);
        for (auto& x : c_) x = 0;
        return *this;
    }
    *this = *this * o;
    return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) {
    CycNum inv = o.inverse();
    return *this *= inv;
}

CycNum CycNum::galois(long k) const {
    if (!ctx_) return *this;
    const FieldCtx& F = *ctx_;
    long N = F.order();
    long kk = ((k % N) + N) % N;
    if (std::gcd(kk, N) != 1 && N > 1) throw std::invalid_argument("galois: exponent not a unit");
    CycNum r(F, 0);
    Scratch& s = scratch();
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (sgn(c_[j]) == 0) continue;
        for (auto [idx, c] : F.power(static_cast<long>(j) * kk)) addmul_si(r.c_[static_cast<std::size_t>(idx)], c_[j], c, s.tmp);
    }
    return r;
}

CycNum CycNum::times_zeta(long k) const {
    if (!ctx_) return *this;
    const FieldCtx& F = *ctx_;
    CycNum r(F, 0);
    Scratch& s = scratch();
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (sgn(c_[j]) == 0) continue;
        for (auto [idx, c] : F.power(static_cast<long>(j) + k)) addmul_si(r.c_[static_cast<std::size_t>(idx)], c_[j], c, s.tmp);
    }
    return r;
}

CycNum CycNum::inverse() const {
    if (!ctx_ || is_zero()) throw std::domain_error("CycNum: division by zero");
    if (is_rational()) return CycNum(*ctx_, 1 / c_[0]);
    const FieldCtx& F = *ctx_;
    long N = F.order();
    CycNum x = *this;
    CycNum cof(F, 1);
    for (auto [sg, p] : F.norm_chain()) {
        if (x.is_rational()) break;
        CycNum prod(F, 1);
        long e = 1;
        for (int j = 1; j < p; ++j) {
            e = (e * sg) % N;
            prod = prod * x.galois(e);
        }
        cof = cof * prod;
        x = x * prod;
    }
    if (!x.is_rational()) throw std::logic_error("CycNum::inverse: norm is not rational");
    cof *= Rational(1 / x.c_[0]);
    return cof;
}

Rational CycNum::norm() const {
    if (!ctx_) return 0;
    if (is_zero()) return 0;
    const FieldCtx& F = *ctx_;
    long N = F.order();
    CycNum x = *this;
    for (auto [sg, p] : F.norm_chain()) {
        CycNum prod = x;
        long e = 1;
        for (int j = 1; j < p; ++j) {
            e = (e * sg) % N;
            prod = prod * x.galois(e);
        }
        x = prod;
    }
    return x.rational_value();
}

bool CycNum::operator==(const CycNum& o) const {
    if (!ctx_) return o.is_zero();
    if (!o.ctx_) return is_zero();
    check_same(ctx_, o.ctx_);
    return c_ == o.c_;
}

std::size_t CycNum::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        h ^= hash_rational(c_[i]) + 0x9e3779b9u + (h << 6) + (h >> 2) + i * 7919u;
    }
    return h;
}

std::string CycNum::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& x = c_[i];
        if (sgn(x) == 0) continue;
        Rational ax = abs(x);
        if (first) {
            if (sgn(x) < 0) os << "-";
        } else {
            os << (sgn(x) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << ax.get_str();
        } else {
            if (ax != 1) os << ax.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.str(); }

CycNum embed(const CycNum& a, const FieldCtx& target) {
    if (!a.bound()) return CycNum();
    long M = a.ctx()->order(), N = target.order();
    if (N % M != 0)
        throw std::invalid_argument("embed: Q(zeta_" + std::to_string(M) + ") does not embed in Q(zeta_" +
                                    std::to_string(N) + ")");
    CycNum r(target, 0);
    std::vector<Rational> out(static_cast<std::size_t>(target.degree()));
    Rational tmp;
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
        const Rational& c = a.coeffs()[j];
        if (sgn(c) == 0) continue;
        for (auto [idx, k] : target.power(static_cast<long>(j) * (N / M))) addmul_si(out[static_cast<std::size_t>(idx)], c, k, tmp);
    }
    return CycNum(target, std::move(out));
}

CycNum restrict_to(const CycNum& a, const FieldCtx& target) {
    if (!a.bound()) return CycNum();
    const FieldCtx& F = *a.ctx();
    long N = F.order(), M = target.order();
    if (N % M != 0)
        throw std::invalid_argument("restrict_to: Q(zeta_" + std::to_string(M) + ") is not a subfield of Q(zeta_" +
                                    std::to_string(N) + ")");
    // Solve a = sum_j b_j zeta_N^(j N/M) over Q by elimination on the
    // augmented (phi(N)) x (phi(M)+1) system.
    int rows = F.degree(), cols = target.degree();
    std::vector<std::vector<Rational>> A(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols + 1)));
    for (int j = 0; j < cols; ++j)
        for (auto [idx, k] : F.power(static_cast<long>(j) * (N / M))) A[static_cast<std::size_t>(idx)][static_cast<std::size_t>(j)] = k;
    for (int i = 0; i < rows; ++i) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)] = a.coeffs()[static_cast<std::size_t>(i)];
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(A[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(A[static_cast<std::size_t>(r)], A[static_cast<std::size_t>(p)]);
        Rational inv = 1 / A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (auto& x : A[static_cast<std::size_t>(r)]) x *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(A[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) == 0) continue;
            Rational f = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            for (int k = 0; k <= cols; ++k) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -= f * A[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (sgn(A[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)]) != 0)
            throw std::domain_error("restrict_to: element is not in Q(zeta_" + std::to_string(M) + ")");
    std::vector<Rational> b(static_cast<std::size_t>(cols));
    for (int i = 0; i < r; ++i) b[static_cast<std::size_t>(pivcol[static_cast<std::size_t>(i)])] = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)];
    return CycNum(target, std::move(b));
}

long sqrt_conductor(const Rational& r) {
    if (sgn(r) == 0) return 1;
    Integer n = abs(r.get_num()) * r.get_den();
    Integer sq;
    std::vector<long> primes;
    squarefree_split(n, sq, primes);
    // Conductor of Q(sqrt(d)) is |disc| = |d| if d = 1 mod 4, else 4|d|.
    long d = 1;
    for (long p : primes) d *= p;
    if (sgn(r) < 0) d = -d;
    long m = ((d % 4) + 4) % 4 == 1 ? std::labs(d) : 4 * std::labs(d);
    return m;
}

CycNum sqrt_rational(const FieldCtx& ctx, const Rational& r) {
    if (sgn(r) == 0) return CycNum(ctx, 0);
    long N = ctx.order();
    long need = sqrt_conductor(r);
    if (!field_has_root_order(N, need)) throw FieldTooSmall(N, lcm_long(N, need), "square root of " + r.get_str());
    Integer n = abs(r.get_num()) * r.get_den();
    Integer sq;
    std::vector<long> primes;
    squarefree_split(n, sq, primes);
    CycNum acc(ctx, Rational(sq, r.get_den()));
    // Each p = 3 mod 4 contributes its Gauss sum i*sqrt(p); count those i's.
    int ipow = 0;
    for (long p : primes) {
        if (p == 2) {
            acc = acc * (CycNum::root_of_unity(ctx, 1, 8) + CycNum::root_of_unity(ctx, 7, 8));
            continue;
        }
        CycNum g(ctx, 0);
        for (long a = 1; a < p; ++a) {
            CycNum z = CycNum::root_of_unity(ctx, a, p);
            if (legendre(a, p) > 0) g += z;
            else g -= z;
        }
        acc = acc * g;
        if (p % 4 == 3) ++ipow;
    }
    int e = (((sgn(r) < 0 ? 1 : 0) - ipow) % 4 + 4) % 4;
    if (e >= 2) acc = -acc;
    if (e % 2) acc = acc * CycNum::root_of_unity(ctx, 1, 4);
    return acc;
}

int compare_lex(const CycNum& a, const CycNum& b) {
    std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < n; ++i) {
        Rational x = i < a.coeffs().size() ? a.coeffs()[i] : Rational(0);
        Rational y = i < b.coeffs().size() ? b.coeffs()[i] : Rational(0);
        int c = cmp(x, y);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

int leading_sign(const CycNum& a) {
    for (const auto& x : a.coeffs())
        if (sgn(x) != 0) return sgn(x);
    return 0;
}

}  // namespace qv
