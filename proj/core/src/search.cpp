#include "icg/search.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "icg/numtheory.hpp"

namespace icg {

namespace {

std::uint64_t binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
  }
  return c;
}

// Lexicographic successor of a strictly increasing tuple over [0, max_val].
bool next_combination(std::vector<unsigned>& a, unsigned max_val) {
  const int r = static_cast<int>(a.size());
  int i = r - 1;
  while (i >= 0 && a[i] == max_val - (r - 1 - i)) --i;
  if (i < 0) return false;
  ++a[i];
  for (int j = i + 1; j < r; ++j) a[j] = a[j - 1] + 1;
  return true;
}

// The rank-th tuple (0-based, lex order) of size r over [0, max_val].
std::vector<unsigned> unrank_combination(unsigned max_val, unsigned r, std::uint64_t rank) {
  std::vector<unsigned> a(r);
  unsigned v = 0;
  for (unsigned i = 0; i < r; ++i) {
    for (;; ++v) {
      const std::uint64_t block = binom(max_val - v, r - i - 1);
      if (rank < block) {
        a[i] = v;
        ++v;
        break;
      }
      rank -= block;
    }
  }
  return a;
}

// Minimum integer pair-power score over a lex range of tuples, with every
// tie collected. score(a) = sum_{k<i} p^{base - (a_i - a_k)}, i.e. the gap
// kernel scaled by p^base, so exact integer comparisons decide everything.
struct ScanResult {
  BigInt best;
  std::vector<std::vector<unsigned>> argmin;
  bool seen = false;
};

ScanResult scan_range(const std::vector<BigInt>& powers, unsigned base, unsigned max_val,
                      unsigned r, std::uint64_t from, std::uint64_t count) {
  ScanResult res;
  if (count == 0) return res;
  std::vector<unsigned> a = unrank_combination(max_val, r, from);
  BigInt score;
  for (std::uint64_t t = 0; t < count; ++t, next_combination(a, max_val)) {
    score = 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
      for (std::size_t k = 0; k < i; ++k) {
        score += powers[base - (a[i] - a[k])];
      }
    }
    if (!res.seen || score < res.best) {
      res.best = score;
      res.argmin.assign(1, a);
      res.seen = true;
    } else if (score == res.best) {
      res.argmin.push_back(a);
    }
  }
  return res;
}

// Deterministic parallel reduction over all C(max_val+1, r) tuples:
// contiguous lex chunks, merged in order, so the result is independent of
// scheduling.
ScanResult scan_all(std::uint64_t p, unsigned base, unsigned max_val, unsigned r) {
  std::vector<BigInt> powers(base + 1);
  powers[0] = 1;
  for (unsigned e = 1; e <= base; ++e) powers[e] = powers[e - 1] * static_cast<unsigned long>(p);

  const std::uint64_t total = binom(max_val + 1, r);
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (total < 16384) workers = 1;

  if (workers == 1) return scan_range(powers, base, max_val, r, 0, total);

  std::vector<std::future<ScanResult>> parts;
  parts.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t from = total * w / workers;
    const std::uint64_t to = total * (w + 1) / workers;
    parts.push_back(std::async(std::launch::async, [&, from, to] {
      return scan_range(powers, base, max_val, r, from, to - from);
    }));
  }
  ScanResult acc;
  for (auto& f : parts) {
    ScanResult part = f.get();
    if (!part.seen) continue;
    if (!acc.seen || part.best < acc.best) {
      acc = std::move(part);
    } else if (part.best == acc.best) {
      acc.argmin.insert(acc.argmin.end(), part.argmin.begin(), part.argmin.end());
    }
  }
  return acc;
}

std::vector<ExponentSet> to_exponent_sets(std::vector<std::vector<unsigned>> raw) {
  std::vector<ExponentSet> out;
  out.reserve(raw.size());
  for (auto& a : raw) out.emplace_back(std::move(a));
  return out;
}

}  // namespace

MinimizerResult minimize_gap_kernel(std::uint64_t p, unsigned s_range, unsigned r) {
  if (r < 1 || r > s_range + 1) {
    throw std::invalid_argument("need 1 <= r <= s_range + 1, got r = " + std::to_string(r));
  }
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  ScanResult scan = scan_all(p, s_range, s_range, r);
  MinimizerResult res{make_rational(scan.best, pow_int(p, s_range)),
                      to_exponent_sets(std::move(scan.argmin)), binom(s_range + 1, r)};
  return res;
}

FixedSizeMax max_energy_fixed_size(const PrimePower& n, unsigned r) {
  if (r < 1 || r > n.exponent()) {
    throw std::invalid_argument("need 1 <= r <= s, got r = " + std::to_string(r));
  }
  const unsigned s = n.exponent();
  // Energy is 2(p-1)p^{s-1} r minus a positive multiple of the pair-power
  // score, so the exact maximizers are exactly the score minimizers.
  ScanResult scan = scan_all(n.prime(), s - 1, s - 1, r);
  const BigInt pm1 = BigInt(static_cast<unsigned long>(n.prime())) - 1;
  FixedSizeMax res{2 * pm1 * (pow_int(n.prime(), s - 1) * r - pm1 * scan.best),
                   to_exponent_sets(std::move(scan.argmin))};
  return res;
}

MaxEnergyResult max_energy(const PrimePower& n, unsigned cap) {
  if (n.exponent() > cap) {
    throw CapExceeded("exponent " + std::to_string(n.exponent()) +
                      " exceeds the enumeration cap " + std::to_string(cap) +
                      " (2^s subsets)");
  }
  MaxEnergyResult res;
  res.energy = 0;
  for (unsigned r = 1; r <= n.exponent(); ++r) {
    FixedSizeMax fixed = max_energy_fixed_size(n, r);
    if (fixed.energy > res.energy) {
      res.energy = fixed.energy;
      res.maximal_sets = fixed.maximal_sets;
    } else if (fixed.energy == res.energy) {
      res.maximal_sets.insert(res.maximal_sets.end(), fixed.maximal_sets.begin(),
                              fixed.maximal_sets.end());
    }
    res.per_size.push_back({r, std::move(fixed.energy), std::move(fixed.maximal_sets)});
  }
  res.normalized = normalized_energy(n, res.energy);
  return res;
}

std::vector<ExponentSet> hyperenergetic_sets(const PrimePower& n, unsigned r, unsigned cap) {
  const unsigned s = n.exponent();
  if (s > cap) {
    throw CapExceeded("exponent " + std::to_string(s) + " exceeds the enumeration cap " +
                      std::to_string(cap));
  }
  if (r < 1 || r > s) {
    throw std::invalid_argument("need 1 <= r <= s, got r = " + std::to_string(r));
  }
  const std::uint64_t p = n.prime();
  std::vector<BigInt> powers(s);
  powers[0] = 1;
  for (unsigned e = 1; e < s; ++e) powers[e] = powers[e - 1] * static_cast<unsigned long>(p);
  const BigInt pm1 = BigInt(static_cast<unsigned long>(p)) - 1;
  // score(a) (p-1)^2 < r p^{s-1}(p-1) - (p^s - 1), the threshold inequality
  // cleared of denominators.
  const BigInt rhs = BigInt(r) * pow_int(p, s - 1) * pm1 - (pow_int(p, s) - 1);

  std::vector<ExponentSet> members;
  std::vector<unsigned> a(r);
  for (unsigned i = 0; i < r; ++i) a[i] = i;
  BigInt score;
  do {
    score = 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
      for (std::size_t k = 0; k < i; ++k) score += powers[(s - 1) - (a[i] - a[k])];
    }
    if (score * pm1 * pm1 < rhs) {
      ExponentSet d(a);
      if (closed_form_energy(n, d) <= complete_graph_energy(n)) {
        throw std::logic_error("threshold and energy predicate disagree");
      }
      members.push_back(std::move(d));
    }
  } while (next_combination(a, s - 1));
  return members;
}

}  // namespace icg
