#pragma once

#include "qv/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace qv {

// Thrown when an operation needs a root of unity (or a square root) that is
// not in Q(zeta_N).  `required` is the smallest order that would work and is
// a multiple of the current one, so callers can rebuild with --field required.
class FieldTooSmall : public std::runtime_error {
public:
    FieldTooSmall(long current, long required, const std::string& what);
    long current;
    long required;
};

long euler_phi(long n);
long lcm_long(long a, long b);

// Smallest M such that zeta_n^k lies in Q(zeta_M).
long root_of_unity_conductor(long k, long n);

// Does Q(zeta_N) contain an element of order m?  (m | N, or m | 2N for odd N.)
bool field_has_root_order(long N, long m);

// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
std::vector<long> cyclotomic_polynomial(long n);

class FieldCtx {
public:
    // Contexts are cached for the process lifetime and never mutated after
    // construction, so references stay valid and may be shared across threads.
    static const FieldCtx& get(long N);
    static const FieldCtx& default_ctx() { return get(120); }

    long order() const { return N_; }
    int degree() const { return deg_; }

    // Phi_N as rationals, length degree()+1, low degree first.
    const std::vector<Rational>& phi_coeffs() const { return phi_; }

    // zeta^m written in the power basis, as sparse (index, coefficient)
    // pairs; m ranges over [0, N).
    const std::vector<std::pair<int, long>>& power(long m) const {
        long r = m % N_;
        if (r < 0) r += N_;
        return pow_[static_cast<std::size_t>(r)];
    }

    // Units of Z/N in increasing order.
    const std::vector<long>& units() const { return units_; }

    // A chain of Galois elements s_1..s_r with prime relative orders p_i,
    // used to compute norms by repeated "multiply by conjugates" steps.
    const std::vector<std::pair<long, int>>& norm_chain() const { return chain_; }

private:
    explicit FieldCtx(long N);
    long N_;
    int deg_;
    std::vector<Rational> phi_;
    std::vector<std::vector<std::pair<int, long>>> pow_;
    std::vector<long> units_;
    std::vector<std::pair<long, int>> chain_;
};

}  // namespace qv
