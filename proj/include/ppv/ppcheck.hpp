#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ppv/ffield.hpp"

namespace ppv {

enum class PPMethod { brute, gcd_shortcut };
const char* to_string(PPMethod m);

struct PPVerdict {
  std::uint64_t q = 0;
  unsigned e = 0;
  long long a = 0;
  bool is_pp = false;
  bool expected = false;  // what the conjecture predicts
  // element indices (u, v), u < v, f(u) = f(v); lexicographically first such
  // pair when the map is not injective
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
  PPMethod method = PPMethod::brute;
};

// Folded weights of sum_{i=1..a} X^{q^i-2} modulo X^{q^e}-X, indexed j=1..e
// (slot 0 unused): w[j] = #{ i in [1,a] : i == j (mod e) } mod p.
// a = 0 folds to the zero map, a = -1 to -X^{q^e-2}.
std::vector<std::uint64_t> fold_weights(std::uint64_t p, unsigned e, long long a);

// f(x) = sum_{i=1..a} x^{q^i-2} under polynomial conventions (0^0 = 1, so a
// constant term appears exactly when q = 2). Fast path for x != 0:
// (sum_j w_j x^{q^j}) x^{-2} with the folded weights above.
std::uint64_t eval_f_idx(const FieldSpec& F, long long a, std::uint64_t xi);
// Term-by-term reference path; agrees with eval_f_idx on every element.
std::uint64_t eval_f_terms_idx(const FieldSpec& F, long long a, std::uint64_t xi);

// Brute-force permutation test over the whole field.
PPVerdict is_pp(const FieldSpec& F, long long a);

// true iff (a = 2 and q = 2) or (a = 1 and gcd(q-2, q^e-1) = 1).
bool conjecture_expected(std::uint64_t q, unsigned e, long long a);

// true iff X + X^q + ... + X^{q^{a-1}} has kernel {0} in F_{q^e}; computed as
// full rank of the induced F_p-linear map. Equals gcd(a, p*e) == 1.
bool kernel_test(const FieldSpec& F, long long a);

// Shift a by multiples of p*e into [-1, pe-2]; the induced map on F_{q^e} is
// unchanged for a >= 1 (and for all a when q is odd).
long long reduce_a(long long a, std::uint64_t p, unsigned e);

// Checks f_a(x^q - x) = sum over c in F_q of (x+c)^{q^{a+1}-2} at every x,
// with F_q embedded as the fixed points of the q-power Frobenius.
bool g_identity_check(const FieldSpec& F, long long a);

struct SweepRow {
  std::uint64_t q = 0;
  unsigned e = 0;
  long long a = 0;
  bool is_pp = false;
  bool expected = false;
  bool skipped = false;  // q^e over the table cap; verdict fields meaningless
};

// Every q = p^k with p in primes, every e >= 2 with q^e <= max_card (and
// q <= max_q when max_q != 0), every a in [1, pe-2].
std::vector<SweepRow> sweep_conjecture(const std::vector<std::uint64_t>& primes,
                                       std::uint64_t max_card,
                                       std::uint64_t max_q = 0);

}  // namespace ppv
