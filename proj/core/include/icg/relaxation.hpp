#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace icg {

// The continuous minimization of the gap kernel over real nondecreasing
// tuples in [0, sigma]. The minimizer has the shape (0, alpha_2, alpha_2 +
// g, ..., sigma) with two boundary gaps log(1/mu)/log p and interior gaps
// log(1/nu)/log p.
struct RelaxationSolution {
  std::uint64_t p;
  double sigma;
  unsigned r;
  double rho;                  // p^-sigma
  double nu;                   // root of p^sigma x^{r-1} = (1-x)^2 in (0,1)
  double mu;                   // nu / (1 - nu)
  double delta;                // p^{-sigma/(r-1)}
  double m_tilde;              // (r-1+mu) mu, the real minimum of the kernel
  std::vector<double> alphas;  // the unique real minimizer; alphas[0] = 0,
                               // alphas[r-1] = sigma
};

// Unique solution of p^sigma x^{r-1} = (1-x)^2 on (0,1). Requires r >= 2 and
// sigma >= (r-1) log 2 / log p; relative residual below 1e-12.
double relaxation_root(std::uint64_t p, double sigma, unsigned r);

RelaxationSolution relax(std::uint64_t p, double sigma, unsigned r);

// f(x_1..x_r) = sum over contiguous index ranges [k..i] of prod_{j=k..i} x_j,
// for x_j in [0,1]. The kernel in gap coordinates x_j = p^{-(a_{j+1}-a_j)}.
double contiguous_product_sum(std::span<const double> x);

// Upper bound on the maximal energy over divisor sets of size r, from the
// real relaxation: 2(p-1)p^{s-1} (r - (p-1) m_tilde(s-1, r)). The normalized
// variant omits the 2(p-1)p^{s-1} factor. For r = 2 the exact value
// m_tilde = p^{-(s-1)} is used directly.
double max_energy_upper_bound(std::uint64_t p, unsigned s, unsigned r);
double max_energy_upper_bound_normalized(std::uint64_t p, unsigned s, unsigned r);

// Quantitative estimates tying the relaxation to the equidistant profile
// delta = p^{-(s-1)/(r-1)}; all five must hold for sigma = s-1, r >= 3.
struct SpacingEstimates {
  double delta;
  bool mu_in_band;       // delta <= mu < delta + delta^2/(1-delta)
  bool nu_in_band;       // delta - delta^2/(1+delta) <= nu < delta <= 1/p
  bool log_nu_in_band;   // 0 < log(1/nu) - (s-1)/(r-1) log p < 3/((r-1)p)
  bool log_mu_in_band;   // -3/(2p) < log(1/mu) - (s-1)/(r-1) log p <= 0
  bool alphas_near_equidistant;  // |alpha_j - (j-1)(s-1)/(r-1)| < 3/(p log p)
  double max_alpha_deviation;

  bool all() const {
    return mu_in_band && nu_in_band && log_nu_in_band && log_mu_in_band &&
           alphas_near_equidistant;
  }
};

SpacingEstimates spacing_estimates(const RelaxationSolution& sol, unsigned s);

}  // namespace icg
