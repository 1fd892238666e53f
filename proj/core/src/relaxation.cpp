#include "icg/relaxation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace icg {

namespace {

// Residual of p^sigma x^{r-1} = (1-x)^2 in log form; strictly increasing in x.
double log_residual(double log_p, double sigma, unsigned r, double x) {
  return sigma * log_p + (r - 1) * std::log(x) - 2.0 * std::log1p(-x);
}

}  // namespace

double relaxation_root(std::uint64_t p, double sigma, unsigned r) {
  if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
  if (r < 2) throw std::invalid_argument("relaxation needs r >= 2");
  const double log_p = std::log(static_cast<double>(p));
  if (sigma < (r - 1) * std::log(2.0) / log_p - 1e-12) {
    throw std::domain_error("sigma below (r-1) log 2 / log p; p^-sigma > 2^-(r-1)");
  }

  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-9 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (log_residual(log_p, sigma, r, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Newton polish; the derivative (r-1)/x + 2/(1-x) is available in closed form.
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 50; ++i) {
    const double f = log_residual(log_p, sigma, r, x);
    const double fp = (r - 1) / x + 2.0 / (1.0 - x);
    const double next = x - f / fp;
    if (!(next > 0.0 && next < 1.0)) break;
    x = next;
    if (std::abs(f) < 1e-15) break;
  }
  return x;
}

RelaxationSolution relax(std::uint64_t p, double sigma, unsigned r) {
  RelaxationSolution sol;
  sol.p = p;
  sol.sigma = sigma;
  sol.r = r;
  sol.nu = relaxation_root(p, sigma, r);
  sol.mu = sol.nu / (1.0 - sol.nu);
  const double log_p = std::log(static_cast<double>(p));
  sol.rho = std::exp(-sigma * log_p);
  sol.delta = std::exp(-sigma / (r - 1) * log_p);
  sol.m_tilde = (r - 1 + sol.mu) * sol.mu;

  sol.alphas.assign(r, 0.0);
  sol.alphas[r - 1] = sigma;
  if (r >= 3) {
    const double edge_gap = -std::log(sol.mu) / log_p;
    const double inner_gap = -std::log(sol.nu) / log_p;
    sol.alphas[1] = edge_gap;
    for (unsigned j = 2; j + 1 < r; ++j) {
      sol.alphas[j] = sol.alphas[j - 1] + inner_gap;
    }
  }
  return sol;
}

double contiguous_product_sum(std::span<const double> x) {
  for (double v : x) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::domain_error("arguments must lie in [0,1]");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    double prod = 1.0;
    for (std::size_t i = k; i < x.size(); ++i) {
      prod *= x[i];
      total += prod;
    }
  }
  return total;
}

double max_energy_upper_bound_normalized(std::uint64_t p, unsigned s, unsigned r) {
  if (r < 2 || r > s) throw std::invalid_argument("bound needs 2 <= r <= s");
  const double m_tilde =
      r == 2 ? std::pow(static_cast<double>(p), -static_cast<double>(s - 1))
             : relax(p, s - 1, r).m_tilde;
  return r - (p - 1) * m_tilde;
}

double max_energy_upper_bound(std::uint64_t p, unsigned s, unsigned r) {
  const double scale =
      2.0 * (p - 1) * std::pow(static_cast<double>(p), static_cast<double>(s - 1));
  return scale * max_energy_upper_bound_normalized(p, s, r);
}

SpacingEstimates spacing_estimates(const RelaxationSolution& sol, unsigned s) {
  if (sol.r < 3) throw std::invalid_argument("spacing estimates need r >= 3");
  if (std::abs(sol.sigma - (s - 1)) > 1e-9) {
    throw std::invalid_argument("spacing estimates expect sigma = s - 1");
  }
  const double p = static_cast<double>(sol.p);
  const double log_p = std::log(p);
  const unsigned r = sol.r;
  const double delta = sol.delta;
  // Slack for the sides that are exact equalities at r = 3.
  const auto ge = [](double a, double b) { return a >= b - 1e-12 * std::max(1.0, std::abs(b)); };

  SpacingEstimates e;
  e.delta = delta;
  e.mu_in_band = ge(sol.mu, delta) && sol.mu < delta + delta * delta / (1.0 - delta);
  e.nu_in_band =
      ge(sol.nu, delta - delta * delta / (1.0 + delta)) && sol.nu < delta && ge(1.0 / p, delta);
  const double step = (s - 1.0) / (r - 1.0) * log_p;
  const double nu_excess = -std::log(sol.nu) - step;
  e.log_nu_in_band = nu_excess > 0.0 && nu_excess < 3.0 / ((r - 1.0) * p);
  const double mu_excess = -std::log(sol.mu) - step;
  e.log_mu_in_band = mu_excess > -1.5 / p && ge(0.0, mu_excess);
  double worst = 0.0;
  for (unsigned j = 0; j < r; ++j) {
    worst = std::max(worst, std::abs(sol.alphas[j] - j * (s - 1.0) / (r - 1.0)));
  }
  e.max_alpha_deviation = worst;
  e.alphas_near_equidistant = worst < 3.0 / (p * log_p);
  return e;
}

}  // namespace icg
