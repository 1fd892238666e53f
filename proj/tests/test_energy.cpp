#include <doctest.h>

#include <random>
#include <vector>

#include "icg/energy.hpp"
#include "icg/spectrum.hpp"

using namespace icg;

namespace {

// Every nonempty exponent subset of {0..s-1}, for exhaustive small grids.
std::vector<ExponentSet> all_subsets(unsigned s) {
  std::vector<ExponentSet> out;
  for (unsigned mask = 1; mask < (1u << s); ++mask) {
    std::vector<unsigned> exps;
    for (unsigned a = 0; a < s; ++a) {
      if (mask & (1u << a)) exps.push_back(a);
    }
    out.emplace_back(std::move(exps));
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("energy");

TEST_CASE("domain types validate their invariants") {
  CHECK_THROWS_AS(PrimePower(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(PrimePower(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(PrimePower(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(ExponentSet{}, std::invalid_argument);
  CHECK_THROWS_AS(ExponentSet({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ExponentSet({2, 1}), std::invalid_argument);
  CHECK(PrimePower(3, 4).order() == 81);
  CHECK(ExponentSet({0, 2, 5}).size() == 3);
}

TEST_CASE("gap kernel on integer tuples is exact") {
  CHECK(gap_kernel(3, ExponentSet{0, 2, 4}) == make_rational(19, 81));
  CHECK(gap_kernel(7, ExponentSet{3}) == Rational(0));
  CHECK(gap_kernel(2, ExponentSet{0, 1, 2}) == make_rational(5, 4));

  const std::vector<long long> decreasing{2, 1};
  CHECK_THROWS_AS(gap_kernel(3, std::span<const long long>(decreasing)), std::invalid_argument);

  // Equal entries are allowed on the raw overload (p^0 terms).
  const std::vector<long long> flat{1, 1};
  CHECK(gap_kernel(3, std::span<const long long>(flat)) == Rational(1));
}

TEST_CASE("gap kernel double overload tracks the exact one") {
  const std::vector<long long> ints{0, 1, 4, 6};
  const std::vector<double> reals{0.0, 1.0, 4.0, 6.0};
  const double exact = to_double(gap_kernel(5, std::span<const long long>(ints)));
  CHECK(gap_kernel(5, std::span<const double>(reals)) == doctest::Approx(exact).epsilon(1e-13));

  const std::vector<double> bad{1.0, 0.5};
  CHECK_THROWS_AS(gap_kernel(5, std::span<const double>(bad)), std::invalid_argument);
}

TEST_CASE("closed form energy reference values") {
  CHECK(closed_form_energy(PrimePower(2, 3), ExponentSet{0, 1, 2}) == 14);
  CHECK(closed_form_energy(PrimePower(5, 3), ExponentSet{1}) == 200);
  // Cross-checked against the eigenvalue oracle on Icg({1,9}, 27).
  CHECK(closed_form_energy(PrimePower(3, 3), ExponentSet{0, 2}) == 64);
  CHECK(spectrum_of(GraphSpec(27, {1, 9})).energy == 64);

  CHECK_THROWS_AS(closed_form_energy(PrimePower(2, 3), ExponentSet{0, 3}),
                  std::invalid_argument);
}

TEST_CASE("minimal energy is 2(p-1)p^(s-1)") {
  CHECK(min_energy(PrimePower(3, 1)) == 4);
  CHECK(min_energy(PrimePower(5, 3)) == 200);

  // Matches the brute-force minimum over every nonempty divisor set of 2^4,
  // via the independent spectral oracle.
  const PrimePower n(2, 4);
  BigInt best = complete_graph_energy(n) * 4;
  for (const auto& d : all_subsets(4)) {
    const auto spec = spectrum_of(GraphSpec(16, divisor_values(n, d)));
    best = std::min(best, BigInt(spec.energy));
  }
  CHECK(best == min_energy(n));
  CHECK(best == 16);
}

TEST_CASE("hyperenergetic threshold values") {
  CHECK(hyperenergetic_threshold(3, 3, 2) == make_rational(5, 18));
  CHECK(hyperenergetic_threshold(2, 1, 1) == Rational(0));
  // (1/2)(8 - (3^17 - 1) / (2 * 3^16)), assembled independently.
  const BigInt p16 = pow_int(3, 16);
  const Rational expected =
      make_rational(BigInt(8) * 2 * p16 - (pow_int(3, 17) - 1), BigInt(4) * p16);
  CHECK(hyperenergetic_threshold(3, 17, 8) == expected);
}

TEST_CASE("hyperenergetic predicate agrees with the energy comparison") {
  CHECK(is_hyperenergetic(PrimePower(3, 3), ExponentSet{0, 2}));
  CHECK_FALSE(is_hyperenergetic(PrimePower(3, 3), ExponentSet{0}));
  CHECK_FALSE(is_hyperenergetic(PrimePower(2, 2), ExponentSet{0, 1}));  // K_4

  for (std::uint64_t p : {2, 3}) {
    for (unsigned s = 1; s <= 4; ++s) {
      const PrimePower n(p, s);
      for (const auto& d : all_subsets(s)) {
        CHECK(is_hyperenergetic(n, d) == (closed_form_energy(n, d) > complete_graph_energy(n)));
      }
    }
  }
}

TEST_CASE("energy report invariants") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned s = 1; s <= 5; ++s) {
      const PrimePower n(p, s);
      for (const auto& d : all_subsets(s)) {
        const EnergyReport rep = energy_report(n, d);
        CHECK(rep.energy % 2 == 0);
        CHECK(rep.energy >= min_energy(n));
        CHECK((rep.energy == min_energy(n)) == (d.size() == 1));
        CHECK(rep.normalized == make_rational(rep.energy, min_energy(n)));
      }
      // The full set is the complete graph K_{p^s}.
      std::vector<unsigned> full(s);
      for (unsigned i = 0; i < s; ++i) full[i] = i;
      const EnergyReport rep = energy_report(n, ExponentSet(full));
      CHECK(rep.energy == complete_graph_energy(n));
      CHECK(rep.degree == n.order() - 1);
    }
  }
}

TEST_CASE("gap kernel is midpoint convex on real tuples") {
  std::mt19937_64 rng(20260809);
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t p = trial % 2 ? 2 : 3;
    const unsigned r = 2 + trial % 6;
    std::vector<double> u(r), v(r), mid(r);
    for (auto& x : u) x = coord(rng);
    for (auto& x : v) x = coord(rng);
    std::sort(u.begin(), u.end());
    std::sort(v.begin(), v.end());
    for (unsigned i = 0; i < r; ++i) mid[i] = 0.5 * (u[i] + v[i]);
    const double lhs = gap_kernel(p, std::span<const double>(mid));
    const double rhs = 0.5 * (gap_kernel(p, std::span<const double>(u)) +
                              gap_kernel(p, std::span<const double>(v)));
    CHECK(lhs <= rhs + 1e-12);
  }
}

TEST_SUITE_END();
