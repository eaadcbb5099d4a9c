#pragma once

#include <cstdint>

#include "ppv/bigint.hpp"

namespace ppv {

// Point-count certificate that X^{q-2}+...+X^{q^a-2} is not a permutation of
// F_{q^e} in the range 2 <= a <= e/4. The curve behind it is the difference
// quotient (f(X)-f(Y))/(X-Y); its absolute irreducibility is an imported
// assumption, recorded here and not verified.
struct HWCertificate {
  std::uint64_t q = 0;
  unsigned e = 0, a = 0;
  Big d;          // q^a - 3, the curve degree
  Big bound;      // exact lower bound on the number of affine points
  bool lambda_ok = false;  // the root-comparison chain held
  bool certified = false;  // lambda_ok and bound > 1
  const char* assumption =
      "difference-quotient curve is absolutely irreducible (not checked)";
};

// Exact integer evaluation; half powers round against the certificate.
// Throws std::invalid_argument outside 2 <= a <= e/4.
HWCertificate hw_certificate(std::uint64_t q, unsigned e, unsigned a);

}  // namespace ppv
