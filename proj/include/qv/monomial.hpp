#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace qv {

using Exponent = std::vector<int>;

// Exponent vectors of degree d in n variables, in descending lexicographic
// order: x0^d first, x_{n-1}^d last.  This is the basis order for symmetric
// powers and for coefficient vectors of forms throughout the library.
const std::vector<Exponent>& monomials(int n, int d);

// Position of an exponent vector in monomials(n, d), or -1.
int monomial_index(const Exponent& e);

// Packed exponent -> position in monomials(n, d).
const std::unordered_map<std::uint64_t, int>& monomial_index_map(int n, int d);

// Number of monomials of degree d in n variables.
long monomial_count(int n, int d);

// Pack an exponent vector (entries < 256, up to 8 variables) into one word.
std::uint64_t pack_exponent(const Exponent& e);
Exponent unpack_exponent(std::uint64_t key, int n);

}  // namespace qv
