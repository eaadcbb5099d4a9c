#include "ppv/digits.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ppv {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

bool DigitVector::canonical() const {
  for (auto d : digits)
    if (d >= base) return false;
  return true;
}

Big DigitVector::value() const {
  Big v = 0;
  for (std::size_t j = digits.size(); j-- > 0;) {
    v *= static_cast<unsigned long>(base);
    v += static_cast<unsigned long>(digits[j]);
  }
  return v;
}

std::uint64_t DigitVector::weight() const {
  std::uint64_t w = 0;
  for (auto d : digits) w += d;
  return w;
}

void DigitVector::trim() {
  while (!digits.empty() && digits.back() == 0) digits.pop_back();
}

bool lex_less(const DigitVector& x, const DigitVector& y) {
  if (x.base != y.base) return x.base < y.base;
  std::size_t n = std::max(x.digits.size(), y.digits.size());
  for (std::size_t j = 0; j < n; ++j) {
    if (x.at(j) != y.at(j)) return x.at(j) < y.at(j);
  }
  return false;
}

DigitVector base_q_digits(const Big& s, std::uint64_t q, std::size_t min_len) {
  require(q >= 2, "base_q_digits: base must be >= 2");
  require(s >= 0, "base_q_digits: negative value");
  DigitVector out;
  out.base = q;
  Big rest = s;
  while (rest > 0) {
    out.digits.push_back(mpz_fdiv_ui(rest.get_mpz_t(), q));
    rest = rest / static_cast<unsigned long>(q);
  }
  if (out.digits.size() < min_len) out.digits.resize(min_len, 0);
  return out;
}

std::uint64_t weight_q(const Big& s, std::uint64_t q) {
  return base_q_digits(s, q).weight();
}

Big normalize_exponent(const Big& e_raw, std::uint64_t q, std::uint32_t e) {
  require(q >= 2 && e >= 1, "normalize_exponent: bad field shape");
  Big m = big_pow(q, e) - 1;
  Big t = e_raw - 1;
  mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
  return t + 1;
}

std::vector<DigitVector> enumerate_borrow_set(const Big& s, std::uint64_t target_weight,
                                              std::uint64_t q) {
  require(q >= 2, "enumerate_borrow_set: base must be >= 2");
  require(s >= 0, "enumerate_borrow_set: negative value");
  std::vector<DigitVector> out;
  DigitVector canon = base_q_digits(s, q);
  std::uint64_t w0 = canon.weight();
  if (target_weight < w0 || (target_weight - w0) % (q - 1) != 0) return out;
  std::uint64_t borrows = (target_weight - w0) / (q - 1);
  if (canon.digits.empty()) {
    if (borrows == 0) out.push_back(canon);
    return out;
  }

  // c[j] = units borrowed from position j (1 <= j <= top); eps_j =
  // e_j - c[j] + q*c[j+1] >= 0 pins c[j] <= e_j + q*c[j+1]. DFS from the top
  // position down, then materialize eps.
  std::size_t top = canon.digits.size() - 1;
  std::vector<std::uint64_t> c(top + 2, 0);
  auto emit = [&]() {
    DigitVector ev;
    ev.base = q;
    ev.digits.resize(top + 1);
    for (std::size_t j = 0; j <= top; ++j) {
      std::uint64_t up = (j < top) ? q * c[j + 1] : 0;
      ev.digits[j] = canon.digits[j] + up - c[j];
    }
    ev.trim();
    out.push_back(std::move(ev));
  };
  auto dfs = [&](auto&& self, std::size_t j, std::uint64_t left) -> void {
    if (j == 0) {
      if (left == 0) emit();
      return;
    }
    std::uint64_t cap = canon.digits[j] + (j < top ? q * c[j + 1] : 0);
    std::uint64_t hi = std::min(cap, left);
    for (std::uint64_t v = 0; v <= hi; ++v) {
      c[j] = v;
      self(self, j - 1, left - v);
    }
    c[j] = 0;
  };
  dfs(dfs, top, borrows);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::optional<PrimePower> prime_power_decompose(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (!is_prime_u64(p)) return std::nullopt;
  std::uint32_t k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, k};
}

const char* to_string(CaseKind k) {
  switch (k) {
    case CaseKind::curve: return "curve";
    case CaseKind::window3: return "window3";
    case CaseKind::window2: return "window2";
    case CaseKind::window1: return "window1";
    case CaseKind::fold_mid: return "fold_mid";
    case CaseKind::fold_top: return "fold_top";
  }
  return "?";
}

const char* to_string(Variant v) { return v == Variant::inner ? "inner" : "edge"; }

const char* to_string(Route r) { return r == Route::wide ? "wide" : "narrow"; }

ExponentPlan build_plan(CaseKind kind, std::uint64_t q, std::uint32_t e, std::uint32_t a,
                        std::uint64_t r, const Big& s, std::optional<Route> route) {
  auto pp = prime_power_decompose(q);
  require(pp.has_value(), "build_plan: q must be a prime power");
  require(q % 2 == 1, "build_plan: window templates need odd q");
  require(a >= 1 && e >= 2, "build_plan: need a >= 1, e >= 2");
  require(r > 0 && r < q, "build_plan: need 0 < r < q");
  require(s > 0, "build_plan: need s > 0");

  ExponentPlan plan;
  plan.q = q;
  plan.p = pp->p;
  plan.e = e;
  plan.a = a;
  plan.kind = kind;
  plan.r = r;
  plan.s = s;

  // blocks = number of q-power lead terms; cong_mult = the multiplier c in the
  // template's congruence s == -c*r (mod q-1).
  std::uint32_t blocks;
  unsigned long cong_mult;
  switch (kind) {
    case CaseKind::window3:
      require(3 * a < e && e < 4 * a, "build_plan: need 3a < e < 4a");
      blocks = 3;
      cong_mult = 7;
      break;
    case CaseKind::window2:
      require(2 * a < e && e < 3 * a, "build_plan: need 2a < e < 3a");
      blocks = 2;
      cong_mult = 3;
      break;
    case CaseKind::window1:
      require(a < e && e < 2 * a, "build_plan: need a < e < 2a");
      blocks = 1;
      cong_mult = 1;
      break;
    default:
      throw std::invalid_argument("build_plan: no window template for this range");
  }

  require((s + cong_mult * Big(static_cast<unsigned long>(r))) % (q - 1) == 0,
          "build_plan: s fails the mod q-1 congruence");
  Big two_s_minus_r = 2 * s - static_cast<unsigned long>(r);
  require(two_s_minus_r >= 0 && two_s_minus_r % q == 0,
          "build_plan: s fails the mod q congruence");
  Big half = two_s_minus_r / static_cast<unsigned long>(q);  // (2s - r)/q

  Big n = s;
  for (std::uint32_t b = 0; b < blocks; ++b)
    n += (Big(1) << b) * static_cast<unsigned long>(r) * big_pow(q, e - (b + 1) * a);
  plan.n = n;
  Big card_minus_1 = big_pow(q, e) - 1;
  require(n > 0 && n < card_minus_1, "build_plan: N outside (0, q^e - 1)");

  std::uint64_t lead = 0;  // coefficient of the lowest lead block, folded: 2^blocks * r
  switch (kind) {
    case CaseKind::window3:
      lead = 4 * r;
      plan.s1 = Big(4 * r) * big_pow(q, e - 2 * a - 1) + Big(8 * r) * big_pow(q, e - 3 * a - 1) + half;
      plan.s2 = Big(8 * r) * big_pow(q, e - 3 * a - 1) + half;
      plan.wide_ok = s <= big_pow(q, e - 2 * a - 1) * (q - 1);
      plan.narrow_ok = s <= big_pow(q, e - 3 * a - 1) * (q - 1);
      break;
    case CaseKind::window2:
      lead = 2 * r;
      plan.s1 = Big(2 * r) * big_pow(q, e - a - 1) + Big(4 * r) * big_pow(q, e - 2 * a - 1) + half;
      plan.s2 = Big(4 * r) * big_pow(q, e - 2 * a - 1) + half;
      plan.wide_ok = s <= big_pow(q, e - a - 1) * (q - 1);
      plan.narrow_ok = s <= big_pow(q, e - 2 * a - 1) * (q - 1);
      break;
    default:  // window1
      plan.s1 = 0;
      plan.s2 = Big(2 * r) * big_pow(q, e - a - 1) + half;
      plan.wide_ok = false;
      plan.narrow_ok = s <= big_pow(q, e - a - 1) * (q - 1);
      break;
  }
  plan.weight_narrow = weight_q(s, q);
  plan.weight_wide = kind == CaseKind::window1
                         ? 0
                         : plan.weight_narrow + weight_q(Big(static_cast<unsigned long>(lead)), q);

  if (route) {
    plan.route = *route;
    require(plan.route == Route::narrow || kind != CaseKind::window1,
            "build_plan: single-block template has no wide route");
  } else {
    plan.route = plan.narrow_ok ? Route::narrow : Route::wide;
  }
  require(plan.bound_ok(), "build_plan: s exceeds the digit capacity for this route");

  plan.window_exp.assign(e, 0);
  DigitVector sd = base_q_digits(s, q);
  for (std::size_t j = 0; j < sd.digits.size(); ++j) plan.window_exp[j] += sd.digits[j];
  if (plan.route == Route::wide) {
    DigitVector ld = base_q_digits(Big(static_cast<unsigned long>(lead)), q);
    std::uint32_t shift = e - blocks * a;
    for (std::size_t j = 0; j < ld.digits.size(); ++j)
      plan.window_exp[shift + j] += ld.digits[j];
  }
  return plan;
}

}  // namespace ppv
