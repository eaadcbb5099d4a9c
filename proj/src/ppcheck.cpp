#include "ppv/ppcheck.hpp"

#include <numeric>
#include <stdexcept>

namespace ppv {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// index of the prime-field scalar c, 0 <= c < p: the constant polynomial c
inline std::uint64_t scalar_idx(std::uint64_t c) { return c; }

}  // namespace

const char* to_string(PPMethod m) {
  switch (m) {
    case PPMethod::brute: return "brute";
    case PPMethod::gcd_shortcut: return "gcd-shortcut";
  }
  return "?";
}

std::vector<std::uint64_t> fold_weights(std::uint64_t p, unsigned e, long long a) {
  require(a >= -1, "fold_weights: a < -1");
  std::vector<std::uint64_t> w(e + 1, 0);
  if (a == -1) {
    w[e] = p - 1;
    return w;
  }
  for (unsigned j = 1; j <= e; ++j) {
    if (static_cast<long long>(j) > a) continue;
    std::uint64_t count = static_cast<std::uint64_t>((a - j) / e) + 1;
    w[j] = count % p;
  }
  return w;
}

std::uint64_t eval_f_idx(const FieldSpec& F, long long a, std::uint64_t xi) {
  require(a >= -1, "eval_f_idx: a < -1");
  if (xi == 0) {
    // only the i=1 term can be constant: q^1-2 = 0 forces q = 2
    return (F.q() == 2 && a >= 1) ? 1 : 0;
  }
  const auto w = fold_weights(F.p(), F.e(), a);
  std::uint64_t s = 0;
  for (unsigned j = 1; j <= F.e(); ++j) {
    if (w[j] == 0) continue;
    s = F.add_idx(s, F.mul_idx(scalar_idx(w[j]), F.frob_idx(xi, j)));
  }
  return F.mul_idx(s, F.inv_idx(F.mul_idx(xi, xi)));
}

std::uint64_t eval_f_terms_idx(const FieldSpec& F, long long a, std::uint64_t xi) {
  require(a >= -1, "eval_f_terms_idx: a < -1");
  if (a == -1) {
    Big E = big_pow(F.q(), F.e()) - 2;
    if (xi == 0) return 0;
    return F.mul_idx(scalar_idx(F.p() - 1), F.pow_idx(xi, E));
  }
  std::uint64_t acc = 0;
  for (long long i = 1; i <= a; ++i) {
    Big E = big_pow(F.q(), static_cast<unsigned long>(i)) - 2;
    std::uint64_t term;
    if (xi == 0) {
      term = (E == 0) ? 1 : 0;  // 0^0 = 1
    } else {
      term = F.pow_idx(xi, E);
    }
    acc = F.add_idx(acc, term);
  }
  return acc;
}

PPVerdict is_pp(const FieldSpec& F, long long a) {
  PPVerdict v;
  v.q = F.q();
  v.e = F.e();
  v.a = a;
  v.expected = conjecture_expected(F.q(), F.e(), a);
  v.method = PPMethod::brute;

  const std::uint64_t card = F.card_u();
  constexpr std::uint32_t kUnseen = 0xffffffffu;
  std::vector<std::uint32_t> first_seen(card, kUnseen);
  std::optional<std::pair<std::uint64_t, std::uint64_t>> best;
  for (std::uint64_t x = 0; x < card; ++x) {
    std::uint64_t y = eval_f_idx(F, a, x);
    if (first_seen[y] == kUnseen) {
      first_seen[y] = static_cast<std::uint32_t>(x);
      continue;
    }
    std::pair<std::uint64_t, std::uint64_t> cand{first_seen[y], x};
    if (!best || cand < *best) best = cand;
  }
  v.is_pp = !best.has_value();
  v.witness = best;
  return v;
}

bool conjecture_expected(std::uint64_t q, unsigned e, long long a) {
  if (a == 2 && q == 2) return true;
  if (a != 1) return false;
  Big m = big_pow(q, e) - 1;
  Big g = gcd(m, big_from_u64(q - 2));
  return g == 1;
}

bool kernel_test(const FieldSpec& F, long long a) {
  require(a >= 1, "kernel_test: a < 1");
  const unsigned n = F.degree();
  const std::uint64_t p = F.p();
  // columns = images of the F_p-basis 1, X, X^2, ... (indices p^i)
  std::vector<std::vector<std::uint64_t>> col(n, std::vector<std::uint64_t>(n));
  std::uint64_t bidx = 1;
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t acc = bidx, cur = bidx;
    for (long long t = 1; t < a; ++t) {
      cur = F.frob_idx(cur, 1);
      acc = F.add_idx(acc, cur);
    }
    for (unsigned r = 0; r < n; ++r) {
      col[i][r] = acc % p;
      acc /= p;
    }
    bidx *= p;
  }
  // rank over F_p
  unsigned rank = 0;
  for (unsigned r = 0; r < n && rank < n; ++r) {
    unsigned pivot = n;
    for (unsigned c = rank; c < n; ++c) {
      if (col[c][r] != 0) { pivot = c; break; }
    }
    if (pivot == n) continue;
    std::swap(col[rank], col[pivot]);
    std::uint64_t inv = 1, base = col[rank][r] % p;
    for (std::uint64_t ex = p - 2; ex; ex >>= 1) {  // Fermat inverse
      if (ex & 1) inv = inv * base % p;
      base = base * base % p;
    }
    for (unsigned c = 0; c < n; ++c) {
      if (c == rank || col[c][r] == 0) continue;
      std::uint64_t f = col[c][r] * inv % p;
      for (unsigned rr = r; rr < n; ++rr)
        col[c][rr] = (col[c][rr] + (p - f) * col[rank][rr]) % p;
    }
    ++rank;
  }
  return rank == n;
}

long long reduce_a(long long a, std::uint64_t p, unsigned e) {
  require(a >= -1, "reduce_a: a < -1");
  long long pe = static_cast<long long>(p) * e;
  return (a + 1) % pe - 1;
}

bool g_identity_check(const FieldSpec& F, long long a) {
  require(a >= 1, "g_identity_check: a < 1");
  long long pe = static_cast<long long>(F.p()) * F.e();
  require(a + 1 <= pe - 1, "g_identity_check: a + 1 > pe - 1");

  std::vector<std::uint64_t> base_field;  // fixed points of x -> x^q
  for (std::uint64_t x = 0; x < F.card_u(); ++x) {
    if (F.frob_idx(x, 1) == x) base_field.push_back(x);
  }
  Big E = big_pow(F.q(), static_cast<unsigned long>(a) + 1) - 2;  // >= 2
  for (std::uint64_t x = 0; x < F.card_u(); ++x) {
    std::uint64_t lhs = eval_f_idx(F, a, F.sub_idx(F.frob_idx(x, 1), x));
    std::uint64_t rhs = 0;
    for (std::uint64_t c : base_field) {
      std::uint64_t b = F.add_idx(x, c);
      if (b == 0) continue;  // 0^E = 0
      rhs = F.add_idx(rhs, F.pow_idx(b, E));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<SweepRow> sweep_conjecture(const std::vector<std::uint64_t>& primes,
                                       std::uint64_t max_card,
                                       std::uint64_t max_q) {
  std::vector<SweepRow> rows;
  for (std::uint64_t p : primes) {
    for (unsigned k = 1;; ++k) {
      Big qb = big_pow(p, k);
      if (max_q != 0 && qb > static_cast<unsigned long>(max_q)) break;
      if (qb * qb > static_cast<unsigned long>(max_card)) break;
      std::uint64_t q = qb.get_ui();
      for (unsigned e = 2;; ++e) {
        Big card = big_pow(q, e);
        if (card > static_cast<unsigned long>(max_card)) break;
        long long pe_bound = static_cast<long long>(p) * e;
        if (card > static_cast<unsigned long>(FieldSpec::kMaxCardinality)) {
          for (long long a = 1; a <= pe_bound - 2; ++a)
            rows.push_back({q, e, a, false, false, true});
          continue;
        }
        auto F = make_field(p, k, e);
        for (long long a = 1; a <= pe_bound - 2; ++a) {
          PPVerdict v = is_pp(*F, a);
          rows.push_back({q, e, a, v.is_pp, v.expected, false});
        }
      }
    }
  }
  return rows;
}

}  // namespace ppv
