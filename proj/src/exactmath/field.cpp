#include "qv/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace qv {

FieldTooSmall::FieldTooSmall(long cur, long req, const std::string& what)
    : std::runtime_error(what + ": needs Q(zeta_" + std::to_string(req) +
                         "), current field is Q(zeta_" + std::to_string(cur) + ")"),
      current(cur),
      required(req) {}

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long root_of_unity_conductor(long k, long n) {
    long g = std::gcd(((k % n) + n) % n, n);
    if (g == 0) g = n;
    long m = n / g;
    // Q(zeta_m) = Q(zeta_2m) for odd m, so the conductor is never 2 mod 4.
    if (m % 4 == 2) m /= 2;
    return m;
}

bool field_has_root_order(long N, long m) {
    if (N % m == 0) return true;
    return (N % 2 == 1) && ((2 * N) % m == 0);
}

namespace {

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division by a monic polynomial.
std::vector<long> poly_div_monic(std::vector<long> num, const std::vector<long>& den) {
    std::size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        long c = num[i];
        q[i - dn] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    std::vector<long> den{1};
    for (long d = 1; d < n; ++d)
        if (n % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
    return poly_div_monic(num, den);
}

FieldCtx::FieldCtx(long N) : N_(N) {
    if (N < 1) throw std::invalid_argument("FieldCtx: order must be positive");
    std::vector<long> phi = cyclotomic_polynomial(N);
    deg_ = static_cast<int>(phi.size()) - 1;
    if (deg_ != euler_phi(N)) throw std::logic_error("FieldCtx: degree mismatch");
    for (long c : phi) phi_.emplace_back(c);

    // zeta^m for m = 0..N-1, by repeated multiplication by x modulo Phi_N.
    std::vector<long> cur(static_cast<std::size_t>(deg_), 0);
    cur[0] = 1;
    if (deg_ == 0) cur.assign(1, 1);
    pow_.resize(static_cast<std::size_t>(N));
    for (long m = 0; m < N; ++m) {
        auto& row = pow_[static_cast<std::size_t>(m)];
        for (int i = 0; i < deg_; ++i)
            if (cur[static_cast<std::size_t>(i)] != 0) row.emplace_back(i, cur[static_cast<std::size_t>(i)]);
        if (deg_ == 0) break;
        long top = cur[static_cast<std::size_t>(deg_ - 1)];
        for (int i = deg_ - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg_; ++i) cur[static_cast<std::size_t>(i)] -= top * phi[static_cast<std::size_t>(i)];
    }
    // zeta^N must come back to 1: this is the "zeta satisfies Phi_N" check.
    if (deg_ > 0) {
        std::vector<long> one(static_cast<std::size_t>(deg_), 0);
        one[0] = 1;
        if (cur != one) throw std::logic_error("FieldCtx: zeta^N != 1");
    }

    for (long k = 1; k <= N; ++k)
        if (std::gcd(k, N) == 1) units_.push_back(k % N == 0 ? 1 : k);
    if (N == 1) units_ = {1};

    // Composition series of the unit group with prime steps.
    std::set<long> H{1 % N == 0 ? 0 : 1};
    if (N == 1) H = {0};
    auto closure = [&](std::set<long> S, long g) {
        std::vector<long> frontier(S.begin(), S.end());
        while (!frontier.empty()) {
            std::vector<long> next;
            for (long x : frontier) {
                long y = (x * g) % N;
                if (S.insert(y).second) next.push_back(y);
            }
            frontier.swap(next);
        }
        return S;
    };
    while (H.size() < units_.size()) {
        for (long u : units_) {
            long uu = u % N;
            if (H.count(uu)) continue;
            // relative order of u modulo H
            long x = uu;
            int ord = 1;
            while (!H.count(x)) {
                x = (x * uu) % N;
                ++ord;
            }
            int p = 2;
            while (ord % p != 0) ++p;
            long s = 1 % N;
            for (int i = 0; i < ord / p; ++i) s = (s * uu) % N;
            chain_.emplace_back(s, p);
            H = closure(H, s);
            break;
        }
    }
}

const FieldCtx& FieldCtx::get(long N) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<FieldCtx>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, std::unique_ptr<FieldCtx>(new FieldCtx(N))).first;
    return *it->second;
}

}  // namespace qv
