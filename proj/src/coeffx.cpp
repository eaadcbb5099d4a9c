#include "ppv/coeffx.hpp"

#include <stdexcept>
#include <vector>

#include "ppv/combinat.hpp"

namespace ppv {

namespace {

std::uint64_t binom_small_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  return binomial_mod_p(big_from_u64(n), big_from_u64(k), p);
}

}  // namespace

MonomialTarget monomial_from_digits(const DigitVector& d, std::int64_t offset) {
  MonomialTarget t;
  for (std::size_t j = 0; j < d.digits.size(); ++j) {
    if (d.digits[j] != 0) t.exponents[offset + static_cast<std::int64_t>(j)] = d.digits[j];
  }
  return t;
}

std::uint64_t extract_coefficient(const WindowProduct& prod,
                                  const MonomialTarget& target, std::uint64_t p) {
  if (prod.width < 1) throw std::invalid_argument("extract_coefficient: width < 1");
  if (p < 2) throw std::invalid_argument("extract_coefficient: p < 2");

  std::uint64_t deg_prod = 0, deg_target = 0;
  std::int64_t kmin = 0, kmax = 0;
  bool any = false;
  const std::int64_t w = prod.width;
  for (const auto& [j, m] : prod.factors) {
    if (m == 0) continue;
    deg_prod += m;
    kmin = any ? std::min(kmin, j) : j;
    kmax = any ? std::max(kmax, j + w - 1) : j + w - 1;
    any = true;
  }
  for (const auto& [k, d] : target.exponents) {
    if (d == 0) continue;
    deg_target += d;
    kmin = any ? std::min(kmin, k) : k;
    kmax = any ? std::max(kmax, k) : k;
    any = true;
  }
  if (deg_prod != deg_target) return 0;
  if (!any) return 1 % p;

  // State while processing variable X_k: remainders of factors
  // k-w+1 .. k-1 (oldest first); factor k joins below with its full m_k.
  using State = std::vector<std::uint64_t>;
  std::map<State, std::uint64_t> states;
  states[State(static_cast<std::size_t>(w - 1), 0)] = 1 % p;

  std::vector<std::uint64_t> spend(static_cast<std::size_t>(w), 0);
  for (std::int64_t k = kmin; k <= kmax && !states.empty(); ++k) {
    std::uint64_t demand = 0;
    if (auto it = target.exponents.find(k); it != target.exponents.end()) demand = it->second;
    std::uint64_t mk = 0;
    if (auto it = prod.factors.find(k); it != prod.factors.end()) mk = it->second;

    std::map<State, std::uint64_t> next;
    State full(static_cast<std::size_t>(w));
    for (const auto& [rem, val] : states) {
      for (std::int64_t i = 0; i + 1 < w; ++i) full[i] = rem[i];
      full[w - 1] = mk;
      // Factor k-w+1 sees its last variable here: it must spend everything.
      if (full[0] > demand) continue;
      const std::uint64_t d2 = demand - full[0];
      // Distribute d2 over factors k-w+2 .. k, binomial per factor; the
      // per-factor binomials compose to its multinomial across variables.
      auto dfs = [&](auto&& self, std::int64_t i, std::uint64_t left,
                     std::uint64_t mult) -> void {
        if (i == w) {
          if (left != 0) return;
          State out(static_cast<std::size_t>(w - 1));
          for (std::int64_t t = 1; t < w; ++t) out[t - 1] = full[t] - spend[t];
          auto [it, inserted] = next.try_emplace(out, 0);
          it->second = (it->second + val * mult) % p;
          return;
        }
        std::uint64_t cap = std::min(full[i], left);
        for (std::uint64_t a = 0; a <= cap; ++a) {
          std::uint64_t b = binom_small_mod(full[i], a, p);
          if (b == 0) continue;
          spend[i] = a;
          self(self, i + 1, left - a, mult * b % p);
        }
        spend[i] = 0;
      };
      dfs(dfs, 1, d2, 1);
    }
    states = std::move(next);
  }

  std::uint64_t acc = 0;
  for (const auto& [rem, val] : states) acc = (acc + val) % p;  // rem is all zero here
  return acc;
}

}  // namespace ppv
