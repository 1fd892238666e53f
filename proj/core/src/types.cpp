#include "icg/types.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "icg/numtheory.hpp"

namespace icg {

PrimePower::PrimePower(std::uint64_t p, unsigned s) : p_(p), s_(s) {
  if (!is_prime(p)) {
    throw std::invalid_argument("order base " + std::to_string(p) + " is not prime");
  }
  if (s < 1) throw std::invalid_argument("order exponent must be >= 1");
}

ExponentSet::ExponentSet(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw std::invalid_argument("exponent set must be nonempty");
  for (std::size_t i = 1; i < exps_.size(); ++i) {
    if (exps_[i - 1] >= exps_[i]) {
      throw std::invalid_argument("exponents must be strictly increasing");
    }
  }
}

ExponentSet::ExponentSet(std::initializer_list<unsigned> exponents)
    : ExponentSet(std::vector<unsigned>(exponents)) {}

std::vector<std::uint64_t> divisor_values(const PrimePower& n, const ExponentSet& d) {
  if (!d.fits(n)) {
    throw std::invalid_argument("exponent " + std::to_string(d.back()) +
                                " out of range [0, " + std::to_string(n.exponent() - 1) + "]");
  }
  std::vector<std::uint64_t> out;
  out.reserve(d.size());
  for (unsigned a : d.values()) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < a; ++i) {
      if (v > std::numeric_limits<std::uint64_t>::max() / n.prime()) {
        throw std::domain_error("divisor p^a exceeds 64 bits");
      }
      v *= n.prime();
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace icg
