#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "ppv/bigint.hpp"

namespace ppv {

// Little-endian base-q digit sequence. Entries may exceed q-1 (e.g. after
// borrows); a vector is "canonical" when every entry is < base. Trailing
// zeros are not stored, so value() and comparisons see (d0, d1, ..., 0, 0, ...).
struct DigitVector {
  std::uint64_t base = 0;
  std::vector<std::uint64_t> digits;

  bool canonical() const;
  Big value() const;
  std::uint64_t weight() const;  // plain digit sum
  std::uint64_t at(std::size_t j) const { return j < digits.size() ? digits[j] : 0; }
  void trim();

  friend bool operator==(const DigitVector& x, const DigitVector& y) {
    return x.base == y.base && x.digits == y.digits;
  }
};

// Lexicographic on (d0, d1, ...) with implicit zero padding; base ties first.
bool lex_less(const DigitVector& x, const DigitVector& y);

DigitVector base_q_digits(const Big& s, std::uint64_t q, std::size_t min_len = 0);
std::uint64_t weight_q(const Big& s, std::uint64_t q);

// Representative of E mod (q^e - 1) in [1, q^e - 1]. E may be negative or zero;
// the exponent 0 maps to q^e - 1 (top of the range), q^e maps to 1.
Big normalize_exponent(const Big& e_raw, std::uint64_t q, std::uint32_t e);

// All nonnegative digit sequences (eps_0, eps_1, ...) with sum eps_j = target_weight
// and sum eps_j q^j = s. Every member arises from the canonical digits of s by
// borrows (digit j+1 down one, digit j up q), each raising the weight by q-1,
// so the result is empty unless target_weight >= |s|_q and the difference is a
// multiple of q-1. Sorted by lex_less.
std::vector<DigitVector> enumerate_borrow_set(const Big& s, std::uint64_t target_weight,
                                              std::uint64_t q);

struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t k = 0;
};
// Decomposes q = p^k with p prime; empty when q is not a prime power > 1.
std::optional<PrimePower> prime_power_decompose(std::uint64_t q);

// The six ranges of a relative to e that the non-permutation argument splits
// into, named by the shape of the exponent machinery each uses: a difference
// curve with a point-count bound (curve), window products over three / two /
// one q-power lead blocks (window3..window1), and the two folded ranges where
// a exceeds e (fold_mid, fold_top).
enum class CaseKind { curve, window3, window2, window1, fold_mid, fold_top };
// inner = generic geometry of the range; edge = the boundary layer
// (e = 3a+1 / 2a+1 for the window kinds, e = a+1 for window1) that needs
// separate treatment.
enum class Variant { inner, edge };
// wide keeps the lead block folded into the window exponents (target S1);
// narrow drops it (target S2) and needs the tighter s-size bound.
enum class Route { wide, narrow };

const char* to_string(CaseKind k);
const char* to_string(Variant v);
const char* to_string(Route r);

// Everything needed to evaluate the Hermite coefficient C(N) for one of the
// window templates:
//   window3: N = r(q^{e-a} + 2q^{e-2a} + 4q^{e-3a}) + s,  s == -7r (mod q-1)
//   window2: N = r(q^{e-a} + 2q^{e-2a}) + s,              s == -3r (mod q-1)
//   window1: N = r q^{e-a} + s,                           s == -r  (mod q-1)
// with 2s == r (mod q) in all three. s1/s2 are the wide/narrow digit targets;
// window_exp[j] is the exponent of (X_j + ... + X_{j+a-1}) for the chosen route.
struct ExponentPlan {
  std::uint64_t q = 0, p = 0;
  std::uint32_t e = 0, a = 0;
  CaseKind kind{};
  Route route = Route::narrow;
  std::uint64_t r = 0;
  Big s;
  Big n;
  Big s1;  // zero for window1 (no folded-lead target there)
  Big s2;
  std::uint64_t weight_wide = 0;
  std::uint64_t weight_narrow = 0;
  bool wide_ok = false;    // s <= (wide capacity), route wide usable
  bool narrow_ok = false;  // s <= (narrow capacity), route narrow usable
  std::vector<std::uint64_t> window_exp;  // size e, indexed by window start j

  const Big& target() const { return route == Route::wide ? s1 : s2; }
  std::uint64_t weight() const { return route == Route::wide ? weight_wide : weight_narrow; }
  bool bound_ok() const { return route == Route::wide ? wide_ok : narrow_ok; }
};

// Validates geometry (3a < e < 4a / 2a < e < 3a / a < e < 2a), 0 < r < q, s > 0,
// both congruences, and 0 < N < q^e - 1, then fills every field. route defaults
// to narrow when the narrow bound holds, else wide. Throws std::invalid_argument
// when the template does not apply (wrong kind, even q, geometry, congruence,
// or neither size bound admits the requested route).
ExponentPlan build_plan(CaseKind kind, std::uint64_t q, std::uint32_t e, std::uint32_t a,
                        std::uint64_t r, const Big& s,
                        std::optional<Route> route = std::nullopt);

}  // namespace ppv
