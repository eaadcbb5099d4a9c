#include "ppv/hasse.hpp"

#include <stdexcept>

namespace ppv {

namespace {

// ceil(sqrt(n)) on exact integers
Big ceil_sqrt(const Big& n) {
  Big r = big_isqrt(n);
  if (r * r != n) r += 1;
  return r;
}

}  // namespace

HWCertificate hw_certificate(std::uint64_t q, unsigned e, unsigned a) {
  if (q < 2) throw std::invalid_argument("hw_certificate: q < 2");
  if (a < 2 || 4ull * a > e) throw std::invalid_argument("hw_certificate: need 2 <= a <= e/4");

  HWCertificate cert;
  cert.q = q;
  cert.e = e;
  cert.a = a;
  const Big d = big_pow(q, a) - 3;
  cert.d = d;

  // bound = q^e - (d-1)(d-2) ceil(q^{e/2}) - ceil(d(d-1)^2/2) - d - 2
  Big qe = big_pow(q, e);
  Big half_pow = ceil_sqrt(qe);
  Big sing = d * (d - 1) * (d - 1);
  Big sing_half = (sing + 1) / 2;  // ceil: sing/2 rounded up
  cert.bound = qe - (d - 1) * (d - 2) * half_pow - sing_half - d - 2;

  // lambda = (1/2)[(d-1)(d-2) + sqrt(disc)] must sit below q^{e/2}; verified
  // as disc < (d^2)^2, then (d-1)(d-2) < d^2 < q^{2a} <= q^{e/2}, squares only.
  Big disc = (d - 1) * (d - 1) * (d - 2) * (d - 2) + 2 * d * (d - 1) * (d - 1) + 4 * d + 12;
  bool ok = true;
  ok = ok && disc < d * d * d * d;
  ok = ok && (d - 1) * (d - 2) < d * d;
  ok = ok && d * d < big_pow(q, 2 * a);
  ok = ok && 4ull * a <= e;  // q^{2a} <= q^{e/2}
  cert.lambda_ok = ok;
  cert.certified = ok && cert.bound > 1;
  return cert;
}

}  // namespace ppv
