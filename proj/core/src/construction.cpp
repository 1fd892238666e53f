#include "icg/construction.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "icg/numtheory.hpp"

namespace icg {

namespace {

// Printed constant for p = 2; the exact value lies in [4.09184, 4.09186] and
// the lower endpoint matches the reference tables.
constexpr double kSetSizeDivisorP2 = 4.09184;

double lower_constant(std::uint64_t p, unsigned s) {
  if (p == 2) return 0.118;
  if (p >= 17 || s <= 6) return 0.5;
  switch (p) {
    case 3: return 0.030;
    case 5: return 0.233;
    case 7: return 0.337;
    case 11: return 0.442;
    case 13: return 0.473;
    default: throw std::logic_error("unhandled prime below 17");
  }
}

unsigned round_half_up(double x) {
  return static_cast<unsigned>(std::floor(x + 0.5));
}

}  // namespace

BoundsReport energy_bounds(std::uint64_t p, unsigned s) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  const double log_p = std::log(static_cast<double>(p));
  const double loglog_p = std::log(log_p);  // negative for p = 2, by design

  BoundsReport b;
  b.p = p;
  b.s = s;
  b.l_p = 1.0 + loglog_p / log_p;
  b.d_p = p == 2 ? kSetSizeDivisorP2 : 2.0 * b.l_p;
  b.c_upper = p == 2 ? 0.328 : 1.0;
  b.c_lower = lower_constant(p, s);
  const double scale = (s - 1.0) * (1.0 - loglog_p / log_p);
  b.lower = b.c_lower * scale;
  b.upper = b.c_upper * scale + 1.0;
  b.guarantee = (p == 2 && s >= 11) || (p >= 3 && s >= 7);
  return b;
}

unsigned choose_set_size(std::uint64_t p, unsigned s) {
  if (s < 2) throw std::invalid_argument("construction needs s >= 2");
  const BoundsReport b = energy_bounds(p, s);
  const double quotient = (s - 1.0) / b.d_p;
  return static_cast<unsigned>(std::ceil(quotient));
}

ExponentSet round_minimizer(std::uint64_t p, unsigned s, std::span<const double> alphas) {
  const std::size_t r = alphas.size();
  if (r == 0) throw std::invalid_argument("empty minimizer");
  if (r == 1) return ExponentSet{0};
  if (std::abs(alphas.front()) > 1e-6 || std::abs(alphas.back() - (s - 1.0)) > 1e-6) {
    throw std::invalid_argument("minimizer must span [0, s-1]");
  }
  if (r == 2) return ExponentSet{0, s - 1};

  std::vector<unsigned> a(r);
  a.front() = 0;
  a.back() = s - 1;
  bool increasing = true;
  for (std::size_t j = 1; j + 1 < r; ++j) a[j] = round_half_up(alphas[j]);
  for (std::size_t j = 1; j < r; ++j) increasing &= a[j - 1] < a[j];
  if (increasing) return ExponentSet(std::move(a));

  if (p >= 3) {
    // The minimizer gaps guarantee strict increase after rounding for p >= 3.
    throw std::logic_error("nearest-integer rounding collided for p >= 3");
  }
  if (r == 3) throw std::logic_error("rounding collision cannot occur for r = 3");

  // p = 2 repair: pin the two entries next to the ends and walk the interior
  // left to right, taking the smallest neighbouring integer that keeps the
  // tuple strictly increasing. Interior real gaps exceed 1, so this always
  // lands below the pinned a_{r-1} = s-2.
  a[1] = 1;
  a[r - 2] = s - 2;
  for (std::size_t j = 2; j + 2 < r; ++j) {
    const auto fl = static_cast<unsigned>(std::floor(alphas[j]));
    a[j] = fl > a[j - 1] ? fl : static_cast<unsigned>(std::ceil(alphas[j]));
    if (a[j] <= a[j - 1]) throw std::logic_error("greedy neighbour rounding failed");
  }
  if (r >= 4 && a[r - 3] >= a[r - 2]) {
    throw std::logic_error("greedy neighbour rounding collided at the top");
  }
  return ExponentSet(std::move(a));
}

ConstructionResult construct_near_maximal(std::uint64_t p, unsigned s) {
  const unsigned r0 = choose_set_size(p, s);
  std::vector<double> alphas;
  if (r0 == 1) {
    alphas = {0.0};
  } else if (r0 == 2) {
    alphas = {0.0, s - 1.0};
  } else {
    alphas = relax(p, s - 1.0, r0).alphas;
  }
  ExponentSet exponents = round_minimizer(p, s, alphas);
  const PrimePower order(p, s);
  BigInt energy = closed_form_energy(order, exponents);
  Rational normalized = normalized_energy(order, energy);
  return ConstructionResult{r0,
                            std::move(alphas),
                            std::move(exponents),
                            std::move(energy),
                            std::move(normalized),
                            energy_bounds(p, s)};
}

double rounding_loss(std::uint64_t p, unsigned s, unsigned r) {
  if (r < 3 || r > s) throw std::invalid_argument("rounding loss needs 3 <= r <= s");
  const RelaxationSolution sol = relax(p, s - 1.0, r);
  const ExponentSet rounded = round_minimizer(p, s, sol.alphas);
  return to_double(gap_kernel(p, rounded)) / sol.m_tilde;
}

RefinedBounds refined_bounds(std::uint64_t p, unsigned s, unsigned cap) {
  if (s < 3) throw std::invalid_argument("refined bounds need s >= 3");
  if (s > cap) {
    throw CapExceeded("exponent " + std::to_string(s) + " exceeds the enumeration cap " +
                      std::to_string(cap));
  }
  const double log_p = std::log(static_cast<double>(p));
  double gamma = 0.0;
  for (unsigned r = 3; r <= s; ++r) {
    const double integral_min = to_double(minimize_gap_kernel(p, s - 1, r).value);
    const double real_min = relax(p, s - 1.0, r).m_tilde;
    gamma = std::max(gamma, std::log(integral_min / real_min) / log_p);
  }
  const double scale = (s + 1.0) * (1.0 - std::log(log_p) / log_p);
  return RefinedBounds{gamma, scale / (1.0 + gamma), scale + 1.0};
}

}  // namespace icg
