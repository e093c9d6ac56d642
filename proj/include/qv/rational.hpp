#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qv {

// Arbitrary-precision rational, always kept in lowest terms by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::size_t hash_rational(const Rational& r) {
    std::size_t h = mpz_get_ui(r.get_num_mpz_t());
    h ^= static_cast<std::size_t>(mpz_sgn(r.get_num_mpz_t()) + 1) << 7;
    h = h * 1000003u ^ mpz_get_ui(r.get_den_mpz_t());
    return h;
}

}  // namespace qv
