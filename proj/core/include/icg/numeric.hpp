#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace icg {

// All exact arithmetic runs on GMP. Energies and kernel values on integer
// exponents are exact integers/rationals; doubles appear only on the
// relaxation side.
using BigInt = mpz_class;
using Rational = mpq_class;

// base^exp as an exact integer.
inline BigInt pow_int(std::uint64_t base, std::uint64_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// num/den in canonical reduced form, den > 0.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Thrown when a brute-force request exceeds the configured enumeration cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace icg
