#include "ppv/combinat.hpp"

#include <stdexcept>

#include "ppv/digits.hpp"

namespace ppv {

namespace {

std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t n, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  b %= p;
  while (n) {
    if (n & 1) acc = acc * b % p;
    b = b * b % p;
    n >>= 1;
  }
  return acc;
}

// multinomial of one digit column: all arguments < p, so plain factorials
// mod p suffice; the inverse comes from Fermat.
std::uint64_t digit_multinomial(std::uint64_t n, const std::vector<std::uint64_t>& ks,
                                std::uint64_t p) {
  std::uint64_t num = 1;
  for (std::uint64_t v = 2; v <= n; ++v) num = num * v % p;
  std::uint64_t den = 1;
  for (auto k : ks)
    for (std::uint64_t v = 2; v <= k; ++v) den = den * v % p;
  return num * pow_mod_u64(den, p - 2, p) % p;
}

}  // namespace

std::uint64_t multinomial_mod_p(const Big& n, const std::vector<Big>& parts, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("multinomial_mod_p: p must be prime");
  if (n < 0) throw std::invalid_argument("multinomial_mod_p: negative n");
  Big total = 0;
  for (const auto& part : parts) {
    if (part < 0) throw std::invalid_argument("multinomial_mod_p: negative part");
    total += part;
  }
  if (total != n) return 0;

  DigitVector nd = base_q_digits(n, p);
  std::vector<DigitVector> kd;
  kd.reserve(parts.size());
  for (const auto& part : parts) kd.push_back(base_q_digits(part, p));

  std::uint64_t acc = 1 % p;
  std::vector<std::uint64_t> col(parts.size());
  for (std::size_t j = 0; j < nd.digits.size(); ++j) {
    std::uint64_t colsum = 0;
    for (std::size_t i = 0; i < kd.size(); ++i) {
      col[i] = kd[i].at(j);
      colsum += col[i];
    }
    if (colsum != nd.digits[j]) return 0;  // a carry: Dickson's criterion fails
    acc = acc * digit_multinomial(nd.digits[j], col, p) % p;
  }
  return acc;
}

std::uint64_t binomial_mod_p(const Big& n, const Big& k, std::uint64_t p) {
  if (k < 0 || k > n) return 0;
  return multinomial_mod_p(n, {k, n - k}, p);
}

std::uint64_t generalized_binomial_mod_p(long long t, std::uint64_t m, std::uint64_t p) {
  if (t >= 0) return binomial_mod_p(big_from_u64(static_cast<std::uint64_t>(t)),
                                    big_from_u64(m), p);
  Big upper = big_from_u64(m) - 1 - static_cast<long>(t);  // -t + m - 1
  std::uint64_t v = binomial_mod_p(upper, big_from_u64(m), p);
  return (m % 2 == 0) ? v : (p - v) % p;
}

Big multinomial_exact(const Big& n, const std::vector<Big>& parts) {
  if (n < 0) throw std::invalid_argument("multinomial_exact: negative n");
  Big total = 0;
  for (const auto& part : parts) {
    if (part < 0) throw std::invalid_argument("multinomial_exact: negative part");
    total += part;
  }
  if (total != n) return 0;
  Big acc = 1;
  Big rest = n;
  for (const auto& part : parts) {
    if (!part.fits_ulong_p()) throw std::invalid_argument("multinomial_exact: part too large");
    Big c;
    mpz_bin_ui(c.get_mpz_t(), rest.get_mpz_t(), part.get_ui());
    acc *= c;
    rest -= part;
  }
  return acc;
}

Big generalized_binomial_exact(long long t, std::uint64_t m) {
  Big c;
  Big top(static_cast<long>(t));
  mpz_bin_ui(c.get_mpz_t(), top.get_mpz_t(), m);
  return c;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factor_u64(const Big& n) {
  Big a = abs(n);
  if (a == 0) throw std::invalid_argument("factor_u64: zero");
  if (!a.fits_ulong_p()) throw std::invalid_argument("factor_u64: does not fit in 64 bits");
  std::uint64_t v = a.get_ui();
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d) continue;
    std::uint32_t mult = 0;
    while (v % d == 0) {
      v /= d;
      ++mult;
    }
    out.emplace_back(d, mult);
  }
  if (v > 1) out.emplace_back(v, 1);
  return out;
}

}  // namespace ppv
