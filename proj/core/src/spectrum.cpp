#include "icg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "icg/numtheory.hpp"

namespace icg {

GraphSpec::GraphSpec(std::uint64_t n_, std::vector<std::uint64_t> divisors_)
    : n(n_), divisors(std::move(divisors_)) {
  if (n < 2) throw std::invalid_argument("graph order must be >= 2");
  if (divisors.empty()) throw std::invalid_argument("divisor set must be nonempty");
  std::sort(divisors.begin(), divisors.end());
  divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
  for (std::uint64_t d : divisors) {
    if (d == 0 || n % d != 0 || d == n) {
      throw std::invalid_argument(std::to_string(d) + " is not a proper divisor of " +
                                  std::to_string(n));
    }
  }
}

long long ramanujan_sum(std::uint64_t q, std::uint64_t j) {
  if (q == 0) throw std::invalid_argument("ramanujan_sum needs q >= 1");
  if (q == 1) return 1;
  const std::uint64_t g = std::gcd(j % q, q);  // gcd(0, q) == q handles j = 0
  const std::uint64_t qg = q / g;
  const int mu = mobius(qg);
  if (mu == 0) return 0;
  return mu * static_cast<long long>(totient(q) / totient(qg));
}

SpectrumResult spectrum_of(const GraphSpec& g, std::uint64_t order_cap) {
  if (g.n > order_cap) {
    throw CapExceeded("order " + std::to_string(g.n) + " exceeds the oracle cap " +
                      std::to_string(order_cap));
  }
  const std::uint64_t n = g.n;

  // lambda_j depends on j only through gcd(j, n): tabulate per divisor class.
  std::map<std::uint64_t, long long> lambda_of_gcd;
  for (std::uint64_t e : divisors_of(n)) {
    long long v = 0;
    for (std::uint64_t d : g.divisors) v += ramanujan_sum(n / d, e);
    lambda_of_gcd[e] = v;
  }

  SpectrumResult res;
  res.eigenvalues.resize(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    res.eigenvalues[j] = lambda_of_gcd.at(std::gcd(j, n));
  }
  res.degree = lambda_of_gcd.at(n);  // j = 0
  long long energy = 0;
  for (const auto& [e, lam] : lambda_of_gcd) {
    energy += std::llabs(lam) * static_cast<long long>(totient(n / e));
  }
  res.energy = energy;
  return res;
}

std::vector<double> dft_eigenvalues(const GraphSpec& g) {
  const std::uint64_t n = g.n;
  std::vector<char> connected(n, 0);
  for (std::uint64_t x = 1; x < n; ++x) {
    const std::uint64_t e = std::gcd(x, n);
    connected[x] = std::binary_search(g.divisors.begin(), g.divisors.end(), e);
  }
  std::vector<double> eig(n, 0.0);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::uint64_t x = 1; x < n; ++x) {
      if (connected[x]) sum += std::cos(w * static_cast<double>(j * x % n));
    }
    eig[j] = sum;
  }
  return eig;
}

ClassicalBounds classical_bounds(const SpectrumResult& r, std::uint64_t n) {
  const double nd = static_cast<double>(n);
  const double k = static_cast<double>(r.degree);
  ClassicalBounds b;
  b.koolen_moulton = 0.5 * nd * (std::sqrt(nd) + 1.0);
  b.balakrishnan = k + std::sqrt(k * (nd - 1.0) * (nd - k));
  return b;
}

long long unitary_energy(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("unitary_energy needs n >= 2");
  const auto factors = factorize(n);
  return (1LL << factors.size()) * static_cast<long long>(totient(n));
}

}  // namespace icg
