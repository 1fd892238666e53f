#pragma once

#include <cstdint>
#include <vector>

#include "icg/numeric.hpp"

namespace icg {

// Guard for the exact eigenvalue oracle; raise per call if really needed.
inline constexpr std::uint64_t kOracleOrderCap = 1'000'000;

// Icg(D, n): vertex set Z_n, edge {a,b} iff gcd(a-b, n) is in D. Works for
// arbitrary n, not just prime powers.
struct GraphSpec {
  std::uint64_t n;
  std::vector<std::uint64_t> divisors;  // proper divisors of n, sorted, unique

  GraphSpec(std::uint64_t n, std::vector<std::uint64_t> divisors);
};

struct SpectrumResult {
  std::vector<long long> eigenvalues;  // lambda_j, indexed by j = 0..n-1
  long long energy;                    // sum |lambda_j|
  long long degree;                    // lambda_0
};

// c_q(j) = mu(q/g) phi(q) / phi(q/g) with g = gcd(j, q). Exact.
long long ramanujan_sum(std::uint64_t q, std::uint64_t j);

// Exact integral spectrum via lambda_j = sum_{d in D} c_{n/d}(j), plus
// energy and degree. Independent of the closed form; used to verify it.
SpectrumResult spectrum_of(const GraphSpec& g, std::uint64_t order_cap = kOracleOrderCap);

// Secondary cross-check: direct DFT of the connection-set indicator.
// O(n^2) floating point; keep n small.
std::vector<double> dft_eigenvalues(const GraphSpec& g);

struct ClassicalBounds {
  double koolen_moulton;  // (n/2)(sqrt(n)+1)
  double balakrishnan;    // k + sqrt(k(n-1)(n-k)) for a k-regular graph
};

ClassicalBounds classical_bounds(const SpectrumResult& r, std::uint64_t n);

// 2^k phi(n) for n with k distinct prime factors; the energy of Icg({1}, n).
long long unitary_energy(std::uint64_t n);

}  // namespace icg
