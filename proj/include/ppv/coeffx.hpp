#pragma once

#include <cstdint>
#include <map>

#include "ppv/digits.hpp"

namespace ppv {

// Product of sliding-window linear forms: prod_j (X_j + X_{j+1} + ... +
// X_{j+width-1})^{m_j}. Keys j may be negative; missing keys mean m_j = 0.
struct WindowProduct {
  std::uint32_t width = 1;
  std::map<std::int64_t, std::uint64_t> factors;
};

// Finitely supported exponent sequence k -> delta_k of a target monomial.
struct MonomialTarget {
  std::map<std::int64_t, std::uint64_t> exponents;
};

// Little-endian digits at positions offset, offset+1, ...
MonomialTarget monomial_from_digits(const DigitVector& d, std::int64_t offset = 0);

// Coefficient of prod_k X_k^{delta_k} in the expanded window product, mod p.
// Returns 0 when total degrees differ. Left-to-right sweep over variables;
// the state keys on the unspent remainders of the <= width active factors,
// so time and memory stay polynomial in the support size.
std::uint64_t extract_coefficient(const WindowProduct& prod,
                                  const MonomialTarget& target, std::uint64_t p);

}  // namespace ppv
