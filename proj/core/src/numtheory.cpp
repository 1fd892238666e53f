#include "icg/numtheory.hpp"

#include <algorithm>

namespace icg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<PrimeFactor> factorize(std::uint64_t n) {
  std::vector<PrimeFactor> out;
  for (std::uint64_t d : {std::uint64_t{2}, std::uint64_t{3}}) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) n /= d, ++e;
      out.push_back({d, e});
    }
  }
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    for (std::uint64_t q : {d, d + 2}) {
      if (n % q == 0) {
        unsigned e = 0;
        while (n % q == 0) n /= q, ++e;
        out.push_back({q, e});
      }
    }
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (const auto& f : factorize(n)) {
    if (f.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& f : factorize(n)) {
    phi -= phi / f.prime;
  }
  return phi;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> divs{1};
  for (const auto& f : factorize(n)) {
    const std::size_t base = divs.size();
    std::uint64_t pe = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      pe *= f.prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace icg
