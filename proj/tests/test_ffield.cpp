#include "ppv/ffield.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

using namespace ppv;

namespace {

// Test-side naive polynomial arithmetic over F_p, independent of the library
// internals. Used to vet the chosen modulus by exhaustive trial division.
using P = std::vector<std::uint64_t>;

P ptrim(P a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

P pmul(const P& a, const P& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  P c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

// does monic g divide f exactly?
bool pdivides(P f, const P& g, std::uint64_t p) {
  f = ptrim(f);
  while (f.size() >= g.size()) {
    std::uint64_t c = f.back();  // g monic
    std::size_t off = f.size() - g.size();
    for (std::size_t j = 0; j < g.size(); ++j) f[off + j] = (f[off + j] + c * (p - g[j])) % p;
    f = ptrim(f);
    if (f.empty()) return true;
  }
  return f.empty();
}

// brute irreducibility: no monic divisor of degree in [1, deg/2]
bool pirreducible(const P& f, std::uint64_t p) {
  std::size_t d = f.size() - 1;
  for (std::size_t dg = 1; dg <= d / 2; ++dg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dg; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      P g(dg + 1, 0);
      std::uint64_t v = n;
      for (std::size_t i = 0; i < dg; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[dg] = 1;
      if (pdivides(f, g, p)) return false;
    }
  }
  return true;
}

FieldElement random_element(const FieldPtr& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, f->card_u() - 1);
  return f->element_at(dist(rng));
}

}  // namespace

TEST(FField, ModulusFrozenSmall) {
  EXPECT_EQ(make_field(2, 1, 3)->modulus(), (std::vector<std::uint64_t>{1, 1, 0, 1}));
  EXPECT_EQ(make_field(2, 2, 1)->modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(make_field(3, 1, 2)->modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_EQ(make_field(5, 1, 1)->modulus(), (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(make_field(2, 1, 1)->modulus(), (std::vector<std::uint64_t>{0, 1}));
}

TEST(FField, ModulusMinimalByOracle) {
  // the chosen modulus is irreducible and every smaller candidate is not
  struct Case {
    std::uint64_t p;
    unsigned k, e;
  } cases[] = {{2, 1, 3}, {2, 1, 4}, {2, 2, 2}, {3, 1, 3}, {3, 2, 1}, {5, 1, 2}, {7, 1, 2}};
  for (auto c : cases) {
    auto f = make_field(c.p, c.k, c.e);
    const auto& m = f->modulus();
    ASSERT_EQ(m.size(), c.k * c.e + 1u);
    EXPECT_EQ(m.back(), 1u);
    EXPECT_TRUE(pirreducible(m, c.p));
    std::uint64_t enc = 0;
    for (unsigned i = c.k * c.e; i-- > 0;) enc = enc * c.p + m[i];
    for (std::uint64_t n = 0; n < enc; ++n) {
      P g(c.k * c.e + 1, 0);
      std::uint64_t v = n;
      for (unsigned i = 0; i < c.k * c.e; ++i) {
        g[i] = v % c.p;
        v /= c.p;
      }
      g[c.k * c.e] = 1;
      EXPECT_FALSE(pirreducible(g, c.p)) << "p=" << c.p << " smaller irreducible at " << n;
    }
  }
}

TEST(FField, MakeFieldValidation) {
  EXPECT_THROW(make_field(4, 1, 2), std::invalid_argument);
  EXPECT_THROW(make_field(1, 1, 2), std::invalid_argument);
  EXPECT_THROW(make_field(3, 0, 2), std::invalid_argument);
  EXPECT_THROW(make_field(3, 1, 0), std::invalid_argument);
  EXPECT_THROW(make_field(2, 1, 21), std::invalid_argument);  // 2^21 over cap
  EXPECT_NO_THROW(make_field(2, 1, 20));
}

TEST(FField, MakeFieldDeterministic) {
  auto a = make_field(3, 1, 4);
  auto b = make_field(3, 1, 4);
  EXPECT_EQ(a->modulus(), b->modulus());
  // same degree, different (k,e) split: same modulus, different q
  auto c = make_field(3, 2, 2);
  auto d = make_field(3, 4, 1);
  EXPECT_EQ(a->modulus(), c->modulus());
  EXPECT_EQ(a->modulus(), d->modulus());
  EXPECT_EQ(a->q(), 3u);
  EXPECT_EQ(c->q(), 9u);
  EXPECT_EQ(d->q(), 81u);
  EXPECT_EQ(a->card_u(), 81u);
  EXPECT_EQ(c->card_u(), 81u);
}

TEST(FField, FieldAxiomsRandom) {
  std::mt19937_64 rng(0xf1e1d5);
  for (auto [p, k, e] : {std::tuple<std::uint64_t, unsigned, unsigned>{3, 1, 4},
                         {2, 1, 5},
                         {5, 1, 2},
                         {7, 2, 1}}) {
    auto f = make_field(p, k, e);
    auto zero = f->zero();
    auto one = f->one();
    for (int it = 0; it < 10000; ++it) {
      auto a = random_element(f, rng);
      auto b = random_element(f, rng);
      auto c = random_element(f, rng);
      EXPECT_EQ(add(a, b), add(b, a));
      EXPECT_EQ(mul(a, b), mul(b, a));
      EXPECT_EQ(add(add(a, b), c), add(a, add(b, c)));
      EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
      EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
      EXPECT_EQ(add(a, zero), a);
      EXPECT_EQ(mul(a, one), a);
      EXPECT_EQ(add(a, neg(a)), zero);
      if (!a.is_zero()) {
        EXPECT_EQ(mul(a, inverse(a)), one);
        EXPECT_EQ(div_elem(mul(a, b), a), b);
      }
    }
  }
}

TEST(FField, FermatExhaustive) {
  for (auto [p, k, e] : {std::tuple<std::uint64_t, unsigned, unsigned>{2, 1, 4},
                         {3, 1, 3},
                         {3, 2, 1},
                         {5, 1, 2}}) {
    auto f = make_field(p, k, e);
    Big card = f->cardinality();
    for (auto x : enumerate_elements(f)) {
      EXPECT_EQ(element_pow(x, card), x);
      if (!x.is_zero()) EXPECT_TRUE(element_pow(x, card - 1).is_one());
    }
  }
}

TEST(FField, FrobeniusFixedPointCount) {
  // fixed points of x -> x^q are exactly the copy of F_q
  struct Case {
    std::uint64_t p;
    unsigned k, e, expect;
  } cases[] = {{3, 2, 2, 9}, {2, 2, 2, 4}, {5, 1, 3, 5}, {2, 1, 6, 2}, {3, 1, 4, 3}};
  for (auto c : cases) {
    auto f = make_field(c.p, c.k, c.e);
    unsigned count = 0;
    for (auto x : enumerate_elements(f))
      if (frobenius_q(x) == x) ++count;
    EXPECT_EQ(count, c.expect) << "p=" << c.p << " k=" << c.k << " e=" << c.e;
  }
}

TEST(FField, FrobeniusMatchesPow) {
  std::mt19937_64 rng(0xacce55);
  for (auto [p, k, e] : {std::tuple<std::uint64_t, unsigned, unsigned>{3, 2, 2},
                         {2, 2, 3},
                         {5, 1, 4},
                         {7, 1, 3}}) {
    auto f = make_field(p, k, e);
    for (int it = 0; it < 200; ++it) {
      auto x = random_element(f, rng);
      for (unsigned i = 0; i <= 4; ++i) {
        Big qi = big_pow(big_from_u64(f->q()), i);
        EXPECT_EQ(frobenius_q(x, i), element_pow(x, qi));
      }
    }
  }
}

TEST(FField, PowMatchesNaive) {
  std::mt19937_64 rng(0x9a1e);
  auto f = make_field(3, 1, 4);
  for (int it = 0; it < 300; ++it) {
    auto x = random_element(f, rng);
    auto acc = f->one();
    for (unsigned n = 0; n <= 64; ++n) {
      EXPECT_EQ(element_pow(x, big_from_u64(n)), acc) << "n=" << n;
      acc = mul(acc, x);
    }
  }
}

TEST(FField, PowEdgeCases) {
  auto f = make_field(5, 1, 2);
  EXPECT_TRUE(element_pow(f->zero(), Big(0)).is_one());  // 0^0 = 1
  EXPECT_TRUE(element_pow(f->zero(), Big(7)).is_zero());
  EXPECT_THROW(element_pow(f->one(), Big(-1)), std::invalid_argument);
  EXPECT_THROW(inverse(f->zero()), std::domain_error);
  EXPECT_THROW(f->inv_idx(0), std::domain_error);
}

TEST(FField, EnumerationOrderAndRoundTrip) {
  auto f = make_field(3, 1, 2);
  auto range = enumerate_elements(f);
  ASSERT_EQ(range.size(), 9u);
  EXPECT_TRUE(range[0].is_zero());
  EXPECT_TRUE(range[1].is_one());
  // index 2 is the constant 2, index 3 is X
  EXPECT_EQ(range[2].coeffs(), (std::vector<std::uint64_t>{2, 0}));
  EXPECT_EQ(range[3].coeffs(), (std::vector<std::uint64_t>{0, 1}));
  std::set<std::vector<std::uint64_t>> seen;
  for (std::uint64_t i = 0; i < range.size(); ++i) {
    seen.insert(range[i].coeffs());
    EXPECT_EQ(f->index_of(range[i]), i);
  }
  EXPECT_EQ(seen.size(), 9u);
}

TEST(FField, IndexedOpsBitExact) {
  // table-backed index ops agree with the polynomial path, exhaustively on a
  // small field and randomly on a larger one
  auto small = make_field(3, 1, 2);
  for (std::uint64_t i = 0; i < 9; ++i) {
    for (std::uint64_t j = 0; j < 9; ++j) {
      auto a = small->element_at(i), b = small->element_at(j);
      EXPECT_EQ(small->add_idx(i, j), small->index_of(add(a, b)));
      EXPECT_EQ(small->sub_idx(i, j), small->index_of(sub(a, b)));
      EXPECT_EQ(small->mul_idx(i, j), small->index_of(mul(a, b)));
    }
    EXPECT_EQ(small->neg_idx(i), small->index_of(neg(small->element_at(i))));
    if (i != 0) EXPECT_EQ(small->inv_idx(i), small->index_of(inverse(small->element_at(i))));
  }

  std::mt19937_64 rng(0xb17);
  for (auto [p, k, e] : {std::tuple<std::uint64_t, unsigned, unsigned>{2, 1, 10},
                         {3, 2, 2},
                         {11, 1, 2}}) {
    auto f = make_field(p, k, e);
    std::uniform_int_distribution<std::uint64_t> dist(0, f->card_u() - 1);
    for (int it = 0; it < 2000; ++it) {
      std::uint64_t i = dist(rng), j = dist(rng);
      auto a = f->element_at(i), b = f->element_at(j);
      EXPECT_EQ(f->add_idx(i, j), f->index_of(add(a, b)));
      EXPECT_EQ(f->mul_idx(i, j), f->index_of(mul(a, b)));
      EXPECT_EQ(f->frob_idx(i), f->index_of(frobenius_q(a)));
      Big n = big_from_u64(dist(rng)) * big_from_u64(dist(rng)) + 3;
      EXPECT_EQ(f->pow_idx(i, n), f->index_of(element_pow(a, n)));
    }
    EXPECT_EQ(f->pow_idx(0, Big(0)), f->index_of(f->one()));
    EXPECT_EQ(f->pow_idx(0, Big(5)), 0u);
  }
}

TEST(FField, GeneratorHasFullOrder) {
  for (auto [p, k, e] : {std::tuple<std::uint64_t, unsigned, unsigned>{3, 1, 4},
                         {2, 1, 8},
                         {7, 1, 2}}) {
    auto f = make_field(p, k, e);
    auto g = f->element_at(f->generator_idx());
    std::uint64_t n1 = f->card_u() - 1;
    std::set<std::uint64_t> seen;
    auto cur = f->one();
    for (std::uint64_t i = 0; i < n1; ++i) {
      seen.insert(f->index_of(cur));
      cur = mul(cur, g);
    }
    EXPECT_TRUE(cur.is_one());
    EXPECT_EQ(seen.size(), n1);
  }
}

TEST(FField, CrossFieldOpsRejected) {
  auto f1 = make_field(3, 1, 2);
  auto f2 = make_field(3, 1, 2);  // distinct spec object, same parameters
  EXPECT_THROW(add(f1->one(), f2->one()), std::invalid_argument);
  EXPECT_THROW(f1->index_of(f2->one()), std::invalid_argument);
  EXPECT_THROW(f1->element_at(9), std::invalid_argument);
  EXPECT_THROW(f1->from_coeffs({1, 2, 0}), std::invalid_argument);
}
