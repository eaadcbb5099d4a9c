#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace ppv {

using Big = mpz_class;

inline Big big_pow(const Big& base, unsigned long exp) {
  Big r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Big big_pow(unsigned long base, unsigned long exp) {
  Big r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline Big big_from_u64(std::uint64_t v) {
  return Big(static_cast<unsigned long>(v));
}

// n mod m, result in [0, m) even for n < 0.
inline std::uint64_t big_mod_u64(const Big& n, std::uint64_t m) {
  return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(m));
}

// floor(sqrt(n)), n >= 0.
inline Big big_isqrt(const Big& n) {
  Big r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// exact binomial; negative upper index uses C(-n,k) = (-1)^k C(n+k-1,k).
inline Big big_binom(const Big& n, unsigned long k) {
  Big r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

}  // namespace ppv
