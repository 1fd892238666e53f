#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "icg/numeric.hpp"

namespace icg {

// Graph order p^s for a prime p and s >= 1.
class PrimePower {
 public:
  PrimePower(std::uint64_t p, unsigned s);

  std::uint64_t prime() const { return p_; }
  unsigned exponent() const { return s_; }
  BigInt order() const { return pow_int(p_, s_); }

 private:
  std::uint64_t p_;
  unsigned s_;
};

// Strictly increasing divisor exponents a_1 < ... < a_r; the divisor set of
// Icg(D, p^s) is D = {p^{a_1}, ..., p^{a_r}}.
class ExponentSet {
 public:
  explicit ExponentSet(std::vector<unsigned> exponents);
  ExponentSet(std::initializer_list<unsigned> exponents);

  const std::vector<unsigned>& values() const { return exps_; }
  unsigned size() const { return static_cast<unsigned>(exps_.size()); }
  unsigned front() const { return exps_.front(); }
  unsigned back() const { return exps_.back(); }

  // a_r <= s-1, i.e. every p^{a_i} is a proper divisor of p^s.
  bool fits(const PrimePower& n) const { return back() + 1 <= n.exponent(); }

  bool operator==(const ExponentSet&) const = default;
  auto operator<=>(const ExponentSet&) const = default;

 private:
  std::vector<unsigned> exps_;
};

// The literal divisors {p^{a_i}} as 64-bit integers.
std::vector<std::uint64_t> divisor_values(const PrimePower& n, const ExponentSet& d);

}  // namespace icg
