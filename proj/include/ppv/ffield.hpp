#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ppv/bigint.hpp"

namespace ppv {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

// Element of F_{q^e} in the power basis of F_p[X]/(modulus).
// coeffs are reduced mod p and always have size degree.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr spec, std::vector<std::uint64_t> coeffs);

  const FieldPtr& spec() const { return spec_; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  FieldPtr spec_;
  std::vector<std::uint64_t> coeffs_;
};

// Immutable description of F_{q^e}, q = p^k, realized as a single extension
// F_p[X]/(m) of degree k*e. The modulus m is the monic irreducible of that
// degree whose coefficient vector, read as a base-p integer with the constant
// term least significant, is smallest. Elements are indexed the same way:
// index = c_0 + c_1*p + ... + c_{d-1}*p^{d-1}, so index 0 is the zero element.
//
// Cardinality is capped so that discrete-log and Frobenius tables always fit;
// indexed ops below use the tables and are bit-exact with the polynomial path.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  static constexpr std::uint64_t kMaxCardinality = 1ull << 20;

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  unsigned e() const { return e_; }
  unsigned degree() const { return degree_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t card_u() const { return card_; }
  Big cardinality() const { return big_from_u64(card_); }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  // coeffs may be shorter than degree and unreduced; they are reduced mod p.
  FieldElement from_coeffs(std::vector<std::uint64_t> coeffs) const;
  FieldElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& x) const;

  // Indexed arithmetic on element indices.
  std::uint64_t add_idx(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub_idx(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_idx(std::uint64_t a) const;
  std::uint64_t mul_idx(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv_idx(std::uint64_t a) const;  // a != 0
  std::uint64_t pow_idx(std::uint64_t base, const Big& n) const;  // n >= 0, 0^0 = 1
  std::uint64_t frob_idx(std::uint64_t x, unsigned i = 1) const;  // x^{q^i}
  std::uint64_t generator_idx() const { return generator_; }
  // row j = coefficients of X^{j*p} mod modulus
  const std::vector<std::vector<std::uint64_t>>& pfrob_mat() const { return pfrob_mat_; }

  friend FieldPtr make_field(std::uint64_t p, unsigned k, unsigned e);

 private:
  FieldSpec() = default;
  void build_tables();

  std::uint64_t p_ = 0;
  unsigned k_ = 0, e_ = 0, degree_ = 0;
  std::uint64_t q_ = 0;
  std::uint64_t card_ = 0;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> ppow_;       // p^i for i <= degree
  std::vector<std::vector<std::uint64_t>> pfrob_mat_;  // row j = X^{j*p} mod m
  std::uint64_t generator_ = 0;
  std::vector<std::uint32_t> exp_;        // exp_[i] = index of g^i, i < card-1
  std::vector<std::uint32_t> log_;        // inverse of exp_ on nonzero indices
  std::vector<std::uint32_t> frob_;       // index of x^q

  friend class FieldElement;
};

// Throws std::invalid_argument on non-prime p, zero k/e, or cardinality
// above FieldSpec::kMaxCardinality. Deterministic: same inputs, same modulus.
FieldPtr make_field(std::uint64_t p, unsigned k, unsigned e);

// Polynomial-path arithmetic (ground truth; tables are checked against it).
FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inverse(const FieldElement& a);  // a != 0
FieldElement div_elem(const FieldElement& a, const FieldElement& b);
FieldElement element_pow(const FieldElement& a, const Big& n);  // n >= 0, 0^0 = 1
FieldElement frobenius_q(const FieldElement& a, unsigned i = 1);  // a^{q^i}

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator-(const FieldElement& a) { return neg(a); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return div_elem(a, b); }

// All field elements in index order (zero first). Contiguous index ranges
// partition the stream, which is what the threaded sweeps rely on.
class ElementRange {
 public:
  explicit ElementRange(FieldPtr spec) : spec_(std::move(spec)) {}
  std::uint64_t size() const { return spec_->card_u(); }
  FieldElement operator[](std::uint64_t i) const { return spec_->element_at(i); }

  class iterator {
   public:
    iterator(const FieldSpec* s, std::uint64_t i) : s_(s), i_(i) {}
    FieldElement operator*() const { return s_->element_at(i_); }
    iterator& operator++() { ++i_; return *this; }
    bool operator!=(const iterator& o) const { return i_ != o.i_; }

   private:
    const FieldSpec* s_;
    std::uint64_t i_;
  };
  iterator begin() const { return iterator(spec_.get(), 0); }
  iterator end() const { return iterator(spec_.get(), spec_->card_u()); }

 private:
  FieldPtr spec_;
};

inline ElementRange enumerate_elements(FieldPtr spec) { return ElementRange(std::move(spec)); }

}  // namespace ppv
