#pragma once

#include <cstdint>
#include <vector>

#include "icg/energy.hpp"

namespace icg {

// 2^24 - 1 subsets keeps a full scan under a minute on desk hardware.
inline constexpr unsigned kDefaultEnumerationCap = 24;

struct MinimizerResult {
  Rational value;                        // exact minimum of the gap kernel
  std::vector<ExponentSet> minimizers;   // every attaining tuple, lex order
  std::uint64_t evaluated_count;
};

// Exact minimum of the gap kernel over all strictly increasing integer
// r-tuples in [0, s_range], with the complete list of minimizers (ties are
// resolved exactly, no epsilon).
MinimizerResult minimize_gap_kernel(std::uint64_t p, unsigned s_range, unsigned r);

struct FixedSizeMax {
  BigInt energy;
  std::vector<ExponentSet> maximal_sets;  // lex order, all exact ties
};

// Exact maximum energy among divisor sets of size r, by direct enumeration
// and comparison of exact energies.
FixedSizeMax max_energy_fixed_size(const PrimePower& n, unsigned r);

struct MaxEnergyResult {
  BigInt energy;
  Rational normalized;
  std::vector<ExponentSet> maximal_sets;  // across all sizes

  struct PerSize {
    unsigned r;
    BigInt energy;
    std::vector<ExponentSet> maximal_sets;
  };
  std::vector<PerSize> per_size;
};

// Scans all 2^s - 1 nonempty exponent sets. Throws CapExceeded when s > cap.
MaxEnergyResult max_energy(const PrimePower& n, unsigned cap = kDefaultEnumerationCap);

// All r-tuples whose graph is hyperenergetic, i.e. gap_kernel < c(p,s,r)
// (exact rational comparison); each member is re-verified against the
// energy predicate before being returned.
std::vector<ExponentSet> hyperenergetic_sets(const PrimePower& n, unsigned r,
                                             unsigned cap = kDefaultEnumerationCap);

}  // namespace icg
