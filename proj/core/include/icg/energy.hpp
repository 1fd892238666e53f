#pragma once

#include <span>

#include "icg/types.hpp"

namespace icg {

// Sum of p^{-(x_i - x_k)} over all ordered pairs k < i. The input must be
// nondecreasing. Integer exponents give an exact rational, real ones a
// double. This kernel controls the energy: the smaller it is, the larger
// the energy of the corresponding divisor set.
Rational gap_kernel(std::uint64_t p, std::span<const long long> x);
double gap_kernel(std::uint64_t p, std::span<const double> x);
Rational gap_kernel(std::uint64_t p, const ExponentSet& d);

// Exact energy of Icg({p^{a_i}}, p^s):
//   2(p-1) (p^{s-1} r - (p-1) sum_{k<i} p^{s-1-(a_i-a_k)}).
BigInt closed_form_energy(const PrimePower& n, const ExponentSet& d);

// 2(p-1)p^{s-1}: minimal energy over all divisor sets, attained exactly by
// the singletons.
BigInt min_energy(const PrimePower& n);

// Energy of the complete graph on n vertices, 2(p^s - 1); the graph is
// hyperenergetic iff its energy exceeds this.
BigInt complete_graph_energy(const PrimePower& n);

// Threshold c(p,s,r) = (r - (p^s-1)/(p^{s-1}(p-1))) / (p-1): the graph is
// hyperenergetic iff gap_kernel < c(p,s,r).
Rational hyperenergetic_threshold(std::uint64_t p, unsigned s, unsigned r);

bool is_hyperenergetic(const PrimePower& n, const ExponentSet& d);

struct EnergyReport {
  BigInt energy;
  Rational normalized;  // energy / (2(p-1)p^{s-1}); 1 for singletons
  BigInt degree;        // regularity degree, sum of phi(p^{s-a_i})
  bool hyperenergetic;
};

EnergyReport energy_report(const PrimePower& n, const ExponentSet& d);

// energy / (2(p-1)p^{s-1}) as an exact rational.
Rational normalized_energy(const PrimePower& n, const BigInt& energy);

}  // namespace icg
