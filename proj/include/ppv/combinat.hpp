#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ppv/bigint.hpp"

namespace ppv {

// n!/(n1!...nk!) mod p by the digit-product congruence: the product over
// base-p digit positions of the digit multinomials, zero as soon as the part
// digits at some position sum past the digit of n (a carry). Zero when the
// parts do not sum to n. Never forms a factorial of anything >= p.
std::uint64_t multinomial_mod_p(const Big& n, const std::vector<Big>& parts, std::uint64_t p);

// binom(n, k) mod p; the two-part multinomial (k, n-k). Zero when k > n.
std::uint64_t binomial_mod_p(const Big& n, const Big& k, std::uint64_t p);

// t(t-1)...(t-m+1)/m! mod p for integer t of either sign:
// for t < 0 this is (-1)^m binom(-t+m-1, m).
std::uint64_t generalized_binomial_mod_p(long long t, std::uint64_t m, std::uint64_t p);

// Exact arbitrary-precision counterparts, for reproducing the integer tables.
Big multinomial_exact(const Big& n, const std::vector<Big>& parts);
Big generalized_binomial_exact(long long t, std::uint64_t m);

// Trial-division factorization of |n| (which must fit in 64 bits), sorted by
// prime; |n| = 1 gives the empty list. n = 0 is rejected.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factor_u64(const Big& n);

}  // namespace ppv
