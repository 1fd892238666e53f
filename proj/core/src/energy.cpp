#include "icg/energy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace icg {

namespace {

void require_nondecreasing_ll(std::span<const long long> x) {
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] < x[i - 1]) throw std::invalid_argument("kernel input must be nondecreasing");
  }
}

// sum_{k<i} p^{base - (a_i - a_k)} as an exact integer; needs base >= max gap.
BigInt pair_power_sum(std::uint64_t p, const std::vector<unsigned>& a, unsigned base) {
  std::vector<BigInt> powers(base + 1);
  powers[0] = 1;
  for (unsigned e = 1; e <= base; ++e) powers[e] = powers[e - 1] * static_cast<unsigned long>(p);
  BigInt sum = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      sum += powers[base - (a[i] - a[k])];
    }
  }
  return sum;
}

}  // namespace

Rational gap_kernel(std::uint64_t p, std::span<const long long> x) {
  require_nondecreasing_ll(x);
  Rational total(0);
  for (std::size_t i = 1; i < x.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      const auto gap = static_cast<std::uint64_t>(x[i] - x[k]);
      total += make_rational(1, pow_int(p, gap));
    }
  }
  return total;
}

double gap_kernel(std::uint64_t p, std::span<const double> x) {
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] < x[i - 1]) throw std::invalid_argument("kernel input must be nondecreasing");
  }
  const double log_p = std::log(static_cast<double>(p));
  double total = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      total += std::exp(-(x[i] - x[k]) * log_p);
    }
  }
  return total;
}

Rational gap_kernel(std::uint64_t p, const ExponentSet& d) {
  const auto& a = d.values();
  if (a.size() == 1) return Rational(0);
  const unsigned span = a.back() - a.front();
  return make_rational(pair_power_sum(p, a, span), pow_int(p, span));
}

BigInt closed_form_energy(const PrimePower& n, const ExponentSet& d) {
  if (!d.fits(n)) {
    throw std::invalid_argument("exponent " + std::to_string(d.back()) +
                                " out of range [0, " + std::to_string(n.exponent() - 1) + "]");
  }
  const std::uint64_t p = n.prime();
  const unsigned s = n.exponent();
  const BigInt pm1 = BigInt(static_cast<unsigned long>(p)) - 1;
  const BigInt inner = pow_int(p, s - 1) * d.size() - pm1 * pair_power_sum(p, d.values(), s - 1);
  return 2 * pm1 * inner;
}

BigInt min_energy(const PrimePower& n) {
  return 2 * (BigInt(static_cast<unsigned long>(n.prime())) - 1) *
         pow_int(n.prime(), n.exponent() - 1);
}

BigInt complete_graph_energy(const PrimePower& n) { return 2 * (n.order() - 1); }

Rational hyperenergetic_threshold(std::uint64_t p, unsigned s, unsigned r) {
  if (s < 1 || r < 1) throw std::invalid_argument("threshold needs s >= 1 and r >= 1");
  const BigInt pm1 = BigInt(static_cast<unsigned long>(p)) - 1;
  const BigInt num = BigInt(r) * pow_int(p, s - 1) * pm1 - (pow_int(p, s) - 1);
  return make_rational(num, pow_int(p, s - 1) * pm1 * pm1);
}

bool is_hyperenergetic(const PrimePower& n, const ExponentSet& d) {
  if (!d.fits(n)) throw std::invalid_argument("exponent set does not fit the order");
  const std::uint64_t p = n.prime();
  const unsigned s = n.exponent();
  const BigInt pm1 = BigInt(static_cast<unsigned long>(p)) - 1;
  // gap_kernel < c(p,s,r), cleared of denominators.
  const BigInt lhs = pm1 * pm1 * pair_power_sum(p, d.values(), s - 1);
  const BigInt rhs = BigInt(d.size()) * pow_int(p, s - 1) * pm1 - (pow_int(p, s) - 1);
  return lhs < rhs;
}

Rational normalized_energy(const PrimePower& n, const BigInt& energy) {
  return make_rational(energy, min_energy(n));
}

EnergyReport energy_report(const PrimePower& n, const ExponentSet& d) {
  EnergyReport rep{closed_form_energy(n, d), Rational(0), BigInt(0), false};
  rep.normalized = normalized_energy(n, rep.energy);
  const BigInt pm1 = BigInt(static_cast<unsigned long>(n.prime())) - 1;
  for (unsigned a : d.values()) {
    // phi(p^{s-a}) with s-a >= 1
    rep.degree += pm1 * pow_int(n.prime(), n.exponent() - a - 1);
  }
  rep.hyperenergetic = is_hyperenergetic(n, d);
  return rep;
}

}  // namespace icg
