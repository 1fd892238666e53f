#pragma once

#include <cstdint>
#include <span>

#include "icg/energy.hpp"
#include "icg/relaxation.hpp"
#include "icg/search.hpp"

namespace icg {

// Bracket for the normalized maximal energy:
//   c_lower (s-1)(1 - loglog p/log p) <= E' <= c_upper (s-1)(1 - loglog p/log p) + 1
// with the exceptional small-prime constants baked in.
struct BoundsReport {
  std::uint64_t p;
  unsigned s;
  double l_p;      // 1 + loglog p / log p
  double d_p;      // set-size divisor: 4.09184 for p = 2, else 2 l_p
  double c_upper;  // 1 for p >= 3, 0.328 for p = 2
  double c_lower;
  double lower;
  double upper;
  bool guarantee;  // the constructed set provably lands in [lower, upper]
};

BoundsReport energy_bounds(std::uint64_t p, unsigned s);

// The unique integer r0 with (s-1)/D(p) <= r0 < (s-1)/D(p) + 1.
unsigned choose_set_size(std::uint64_t p, unsigned s);

// Nearest integers of the real minimizer, half up. For p >= 3 plain rounding
// is already strictly increasing; for p = 2 a collision at the ends is
// repaired by pinning a_2 = 1, a_{r-1} = s-2 and moving interior entries to
// a neighbouring integer, greedily left to right.
ExponentSet round_minimizer(std::uint64_t p, unsigned s, std::span<const double> alphas);

struct ConstructionResult {
  unsigned r0;
  std::vector<double> alphas;
  ExponentSet exponents;
  BigInt energy;
  Rational normalized;
  BoundsReport bounds;
};

// The near-maximal divisor set: r0 exponents from the relaxation on
// [0, s-1], rounded to integers. When bounds.guarantee is set the normalized
// energy is at least bounds.lower.
ConstructionResult construct_near_maximal(std::uint64_t p, unsigned s);

// gap_kernel(rounded) / m_tilde(s-1, r): at most p for p >= 3, at most 4 for
// p = 2. Requires 3 <= r <= s.
double rounding_loss(std::uint64_t p, unsigned s, unsigned r);

// Bracket refined by the observed integral-vs-real minimum gap
//   gamma = max_r log(m / m_tilde) / log p over 3 <= r <= s:
//   lower = (s+1)(1 - loglog p/log p)/(1+gamma), upper = (s+1)(...) + 1.
// The lower bound is an asymptotic statement; for small p it can overshoot
// the true maximum.
struct RefinedBounds {
  double gamma;
  double lower;
  double upper;
};

RefinedBounds refined_bounds(std::uint64_t p, unsigned s,
                             unsigned cap = kDefaultEnumerationCap);

}  // namespace icg
