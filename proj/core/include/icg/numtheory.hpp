#pragma once

#include <cstdint>
#include <vector>

namespace icg {

struct PrimeFactor {
  std::uint64_t prime;
  unsigned exponent;
};

// Deterministic trial division; intended for the 64-bit ranges the oracle
// works in.
bool is_prime(std::uint64_t n);
std::vector<PrimeFactor> factorize(std::uint64_t n);

int mobius(std::uint64_t n);
std::uint64_t totient(std::uint64_t n);

// All positive divisors of n, ascending (includes 1 and n).
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

}  // namespace icg
