#include "ppv/ffield.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace ppv {
namespace {

// Dense coefficient vectors mod p, constant term first; no trailing-zero
// invariant except where trimmed for gcd work.
using Poly = std::vector<std::uint64_t>;

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t mod_inv_u64(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("mod_inv_u64: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Products stay below 2^40 (p <= 2^20); per-coefficient accumulation over a
// handful of terms fits u64 comfortably before the final reduction.
Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j] % p;
  }
  for (auto& v : c) v %= p;
  return c;
}

// m monic.
void poly_reduce_inplace(Poly& a, const Poly& m, std::uint64_t p) {
  const std::size_t d = m.size() - 1;
  if (a.size() <= d) {
    a.resize(d, 0);
    return;
  }
  for (std::size_t i = a.size(); i-- > d;) {
    std::uint64_t c = a[i] % p;
    a[i] = 0;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d; ++j) a[i - d + j] = (a[i - d + j] + c * (p - m[j])) % p;
  }
  a.resize(d);
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  Poly c = poly_mul(a, b, p);
  poly_reduce_inplace(c, m, p);
  return c;
}

Poly poly_powmod_u64(Poly base, std::uint64_t n, const Poly& m, std::uint64_t p) {
  Poly r(m.size() - 1, 0);
  r[0] = 1;
  poly_reduce_inplace(base, m, p);
  while (n > 0) {
    if (n & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    n >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b via repeated leading-term elimination
    std::uint64_t lead_inv = mod_inv_u64(b.back(), p);
    while (a.size() >= b.size()) {
      std::uint64_t c = a.back() * lead_inv % p;
      std::size_t off = a.size() - b.size();
      if (c != 0)
        for (std::size_t j = 0; j < b.size(); ++j)
          a[off + j] = (a[off + j] + c * (p - b[j])) % p;
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// f monic of degree n >= 1: irreducible iff X^{p^n} = X mod f and
// gcd(X^{p^{n/t}} - X, f) = 1 for every prime t | n.
bool poly_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  Poly x(n, 0);
  if (n == 1) return true;
  x[1] = 1;
  auto divisors = prime_divisors_u64(n);
  Poly t = x;
  for (std::size_t j = 1; j <= n; ++j) {
    t = poly_powmod_u64(t, p, f, p);  // now t = X^{p^j} mod f
    bool at_checkpoint = false;
    for (auto r : divisors)
      if (j == n / r) at_checkpoint = true;
    if (at_checkpoint) {
      Poly diff = t;
      diff[1] = (diff[1] + p - 1) % p;
      Poly g = poly_gcd(diff, f, p);
      if (!(g.size() == 1 && g[0] != 0)) return false;
    }
  }
  return t == x;
}

}  // namespace

FieldElement::FieldElement(FieldPtr spec, std::vector<std::uint64_t> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  if (!spec_) throw std::invalid_argument("FieldElement: null spec");
  if (coeffs_.size() > spec_->degree()) throw std::invalid_argument("FieldElement: too many coeffs");
  coeffs_.resize(spec_->degree(), 0);
  for (auto& c : coeffs_) c %= spec_->p();
}

bool FieldElement::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool FieldElement::operator==(const FieldElement& o) const {
  return spec_ == o.spec_ && coeffs_ == o.coeffs_;
}

FieldElement FieldSpec::zero() const {
  return FieldElement(shared_from_this(), {});
}

FieldElement FieldSpec::one() const {
  return FieldElement(shared_from_this(), {1});
}

FieldElement FieldSpec::from_coeffs(std::vector<std::uint64_t> coeffs) const {
  return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement FieldSpec::element_at(std::uint64_t index) const {
  if (index >= card_) throw std::invalid_argument("element_at: index out of range");
  std::vector<std::uint64_t> c(degree_);
  for (unsigned i = 0; i < degree_; ++i) {
    c[i] = index % p_;
    index /= p_;
  }
  return FieldElement(shared_from_this(), std::move(c));
}

std::uint64_t FieldSpec::index_of(const FieldElement& x) const {
  if (x.spec().get() != this) throw std::invalid_argument("index_of: foreign element");
  std::uint64_t idx = 0;
  for (unsigned i = degree_; i-- > 0;) idx = idx * p_ + x.coeffs()[i];
  return idx;
}

std::uint64_t FieldSpec::add_idx(std::uint64_t a, std::uint64_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint64_t r = 0;
  for (unsigned i = 0; i < degree_; ++i) {
    std::uint64_t da = (a / ppow_[i]) % p_, db = (b / ppow_[i]) % p_;
    std::uint64_t s = da + db;
    if (s >= p_) s -= p_;
    r += s * ppow_[i];
  }
  return r;
}

std::uint64_t FieldSpec::neg_idx(std::uint64_t a) const {
  if (p_ == 2) return a;
  std::uint64_t r = 0;
  for (unsigned i = 0; i < degree_; ++i) {
    std::uint64_t da = (a / ppow_[i]) % p_;
    r += (da == 0 ? 0 : p_ - da) * ppow_[i];
  }
  return r;
}

std::uint64_t FieldSpec::sub_idx(std::uint64_t a, std::uint64_t b) const {
  return add_idx(a, neg_idx(b));
}

std::uint64_t FieldSpec::mul_idx(std::uint64_t a, std::uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t n1 = card_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % n1];
}

std::uint64_t FieldSpec::inv_idx(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("inv_idx: zero");
  const std::uint64_t n1 = card_ - 1;
  return exp_[(n1 - log_[a]) % n1];
}

std::uint64_t FieldSpec::pow_idx(std::uint64_t base, const Big& n) const {
  if (sgn(n) < 0) throw std::invalid_argument("pow_idx: negative exponent");
  if (base == 0) return sgn(n) == 0 ? 1 : 0;  // 0^0 = 1, index of one is 1
  const std::uint64_t n1 = card_ - 1;
  std::uint64_t m = big_mod_u64(n, n1);
  return exp_[(static_cast<std::uint64_t>(log_[base]) * m) % n1];
}

std::uint64_t FieldSpec::frob_idx(std::uint64_t x, unsigned i) const {
  for (unsigned j = 0; j < i; ++j) x = frob_[x];
  return x;
}

void FieldSpec::build_tables() {
  // X^{j*p} mod m rows; Frobenius_p of an element is a left-multiply by this.
  Poly xp = poly_powmod_u64({0, 1}, p_, modulus_, p_);
  pfrob_mat_.assign(degree_, Poly(degree_, 0));
  Poly row(degree_, 0);
  row[0] = 1;
  pfrob_mat_[0] = row;
  for (unsigned j = 1; j < degree_; ++j) {
    row = poly_mulmod(row, xp, modulus_, p_);
    pfrob_mat_[j] = row;
  }

  const std::uint64_t n1 = card_ - 1;
  auto factors = prime_divisors_u64(n1);
  std::uint64_t gen = 0;
  for (std::uint64_t cand = 1; cand < card_; ++cand) {
    FieldElement g = element_at(cand);
    bool ok = true;
    for (auto r : factors) {
      if (element_pow(g, big_from_u64(n1 / r)).is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = cand;
      break;
    }
  }
  if (gen == 0) throw std::logic_error("generator search failed");
  generator_ = gen;

  exp_.assign(n1, 0);
  log_.assign(card_, 0);
  FieldElement cur = one();
  FieldElement g = element_at(gen);
  for (std::uint64_t i = 0; i < n1; ++i) {
    std::uint64_t idx = index_of(cur);
    exp_[i] = static_cast<std::uint32_t>(idx);
    log_[idx] = static_cast<std::uint32_t>(i);
    cur = mul(cur, g);
  }
  if (!cur.is_one()) throw std::logic_error("generator order wrong");

  frob_.assign(card_, 0);
  const std::uint64_t qm = q_ % n1;
  for (std::uint64_t x = 1; x < card_; ++x)
    frob_[x] = exp_[(static_cast<std::uint64_t>(log_[x]) * qm) % n1];
}

FieldPtr make_field(std::uint64_t p, unsigned k, unsigned e) {
  if (!is_prime_u64(p)) throw std::invalid_argument("make_field: p must be prime");
  if (k == 0 || e == 0) throw std::invalid_argument("make_field: k and e must be positive");
  const unsigned d = k * e;
  std::uint64_t card = 1;
  for (unsigned i = 0; i < d; ++i) {
    if (card > FieldSpec::kMaxCardinality / p)
      throw std::invalid_argument("make_field: cardinality above cap");
    card *= p;
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->k_ = k;
  spec->e_ = e;
  spec->degree_ = d;
  spec->q_ = q;
  spec->card_ = card;
  spec->ppow_.resize(d + 1);
  spec->ppow_[0] = 1;
  for (unsigned i = 1; i <= d; ++i) spec->ppow_[i] = spec->ppow_[i - 1] * p;

  // Smallest monic irreducible of degree d: scan non-leading coefficient
  // vectors in base-p integer order, constant term least significant.
  for (std::uint64_t n = 0;; ++n) {
    if (n >= card) throw std::logic_error("no irreducible modulus found");
    Poly f(d + 1, 0);
    std::uint64_t v = n;
    for (unsigned i = 0; i < d; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[d] = 1;
    if (poly_irreducible(f, p)) {
      spec->modulus_ = f;
      break;
    }
  }

  spec->build_tables();
  return spec;
}

namespace {

void check_same_spec(const FieldElement& a, const FieldElement& b) {
  if (a.spec() != b.spec()) throw std::invalid_argument("elements from different fields");
}

}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
  check_same_spec(a, b);
  const std::uint64_t p = a.spec()->p();
  std::vector<std::uint64_t> c(a.coeffs());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] += b.coeffs()[i];
    if (c[i] >= p) c[i] -= p;
  }
  return FieldElement(a.spec(), std::move(c));
}

FieldElement neg(const FieldElement& a) {
  const std::uint64_t p = a.spec()->p();
  std::vector<std::uint64_t> c(a.coeffs());
  for (auto& v : c) v = (v == 0 ? 0 : p - v);
  return FieldElement(a.spec(), std::move(c));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
  return add(a, neg(b));
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  check_same_spec(a, b);
  const auto& spec = *a.spec();
  Poly c = poly_mul(a.coeffs(), b.coeffs(), spec.p());
  poly_reduce_inplace(c, spec.modulus(), spec.p());
  return FieldElement(a.spec(), std::move(c));
}

// Extended Euclid in F_p[X]: returns u with a*u = 1 mod modulus.
FieldElement inverse(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("inverse: zero");
  const auto& spec = *a.spec();
  const std::uint64_t p = spec.p();
  Poly r0 = spec.modulus(), r1 = a.coeffs();
  Poly s0 = {}, s1 = {1};
  trim(r1);
  while (!r1.empty()) {
    // divide r0 by r1
    Poly quot(r0.size() > r1.size() - 1 ? r0.size() - r1.size() + 1 : 1, 0);
    Poly rem = r0;
    trim(rem);
    std::uint64_t lead_inv = mod_inv_u64(r1.back(), p);
    while (rem.size() >= r1.size() && !rem.empty()) {
      std::uint64_t c = rem.back() * lead_inv % p;
      std::size_t off = rem.size() - r1.size();
      quot[off] = c;
      for (std::size_t j = 0; j < r1.size(); ++j)
        rem[off + j] = (rem[off + j] + c * (p - r1[j])) % p;
      trim(rem);
    }
    // s_next = s0 - quot*s1
    Poly qs = poly_mul(quot, s1, p);
    Poly s2(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s2.size(); ++i) {
      std::uint64_t v0 = i < s0.size() ? s0[i] : 0;
      std::uint64_t v1 = i < qs.size() ? qs[i] : 0;
      s2[i] = (v0 + p - v1) % p;
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is the gcd, a nonzero constant
  if (r0.size() != 1 || r0[0] == 0) throw std::logic_error("inverse: gcd not constant");
  std::uint64_t scale = mod_inv_u64(r0[0], p);
  for (auto& v : s0) v = v * scale % p;
  poly_reduce_inplace(s0, spec.modulus(), p);
  return FieldElement(a.spec(), std::move(s0));
}

FieldElement div_elem(const FieldElement& a, const FieldElement& b) {
  return mul(a, inverse(b));
}

FieldElement element_pow(const FieldElement& a, const Big& n) {
  if (sgn(n) < 0) throw std::invalid_argument("element_pow: negative exponent");
  FieldElement result = a.spec()->one();
  if (sgn(n) == 0) return result;  // 0^0 = 1
  FieldElement base = a;
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(n.get_mpz_t(), i)) result = mul(result, base);
    if (i + 1 < bits) base = mul(base, base);
  }
  return result;
}

FieldElement frobenius_q(const FieldElement& a, unsigned i) {
  const auto& spec = *a.spec();
  const std::uint64_t p = spec.p();
  std::vector<std::uint64_t> cur = a.coeffs();
  const unsigned steps = spec.k() * i;
  for (unsigned s = 0; s < steps; ++s) {
    std::vector<std::uint64_t> next(spec.degree(), 0);
    for (unsigned j = 0; j < spec.degree(); ++j) {
      if (cur[j] == 0) continue;
      const auto& row = spec.pfrob_mat()[j];
      for (unsigned t = 0; t < spec.degree(); ++t) next[t] = (next[t] + cur[j] * row[t]) % p;
    }
    cur = std::move(next);
  }
  return FieldElement(a.spec(), std::move(cur));
}

}  // namespace ppv
