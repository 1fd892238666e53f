// icg: command line front end for the integral circulant graph energy
// toolkit. Subcommands cover single-set evaluation, the exact spectral
// oracle, brute-force maximization, the near-maximal construction, bound
// tables, and hyperenergetic enumeration.
//
// Exit codes: 0 success, 2 malformed input, 3 enumeration cap exceeded.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "icg/construction.hpp"
#include "icg/energy.hpp"
#include "icg/relaxation.hpp"
#include "icg/search.hpp"
#include "icg/spectrum.hpp"

using ojson = nlohmann::ordered_json;

namespace {

struct Fmt {
  std::string format = "text";  // text | tsv | json
  int precision = 6;            // significant decimals
  std::optional<int> decimals;  // fixed decimals override
};

std::string fmt_double(double v, const Fmt& f) {
  char buf[64];
  if (f.decimals) {
    std::snprintf(buf, sizeof buf, "%.*f", *f.decimals, v);
  } else {
    std::snprintf(buf, sizeof buf, "%.*g", f.precision, v);
  }
  return buf;
}

std::string join_exponents(const std::vector<unsigned>& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(exps[i]);
  }
  return out;
}

std::string render_scalar(const ojson& v, const Fmt& f) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return fmt_double(v.get<double>(), f);
  if (v.is_number()) return v.dump();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += render_scalar(v[i], f);
    }
    return out;
  }
  return v.dump();
}

bool is_row_array(const ojson& v) { return v.is_array() && !v.empty() && v[0].is_object(); }

void print_row_block(const ojson& rows, const Fmt& f, std::ostream& os) {
  std::vector<std::string> keys;
  for (const auto& [k, _] : rows[0].items()) keys.push_back(k);
  std::vector<std::vector<std::string>> cells;
  cells.emplace_back(keys);
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& k : keys) line.push_back(render_scalar(row.at(k), f));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(keys.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << line[c];
      if (c + 1 < line.size()) os << std::string(width[c] - line[c].size() + 2, ' ');
    }
    os << '\n';
  }
}

void print_text(const ojson& rec, const Fmt& f) {
  for (const auto& [key, value] : rec.items()) {
    if (is_row_array(value)) {
      std::cout << key << ":\n";
      print_row_block(value, f, std::cout);
    } else {
      std::cout << key << ": " << render_scalar(value, f) << '\n';
    }
  }
}

void print_tsv(const ojson& rec, const Fmt& f) {
  // Row-style records print just the rows; scalar records print one
  // header/value pair of lines.
  for (const auto& [key, value] : rec.items()) {
    if (is_row_array(value)) {
      std::vector<std::string> keys;
      for (const auto& [k, _] : value[0].items()) keys.push_back(k);
      for (std::size_t c = 0; c < keys.size(); ++c) {
        std::cout << keys[c] << (c + 1 < keys.size() ? '\t' : '\n');
      }
      for (const auto& row : value) {
        for (std::size_t c = 0; c < keys.size(); ++c) {
          std::cout << render_scalar(row.at(keys[c]), f) << (c + 1 < keys.size() ? '\t' : '\n');
        }
      }
      return;
    }
  }
  std::string header, line;
  for (const auto& [key, value] : rec.items()) {
    if (!header.empty()) header += '\t', line += '\t';
    header += key;
    line += render_scalar(value, f);
  }
  std::cout << header << '\n' << line << '\n';
}

void emit(const ojson& rec, const Fmt& f) {
  if (f.format == "json") {
    std::cout << rec.dump(2) << '\n';
  } else if (f.format == "tsv") {
    print_tsv(rec, f);
  } else {
    print_text(rec, f);
  }
}

icg::ExponentSet canonical_exponents(std::vector<unsigned> exps) {
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  return icg::ExponentSet(std::move(exps));
}

std::string rational_str(const icg::Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// subcommand bodies

ojson run_energy(std::uint64_t p, unsigned s, std::vector<unsigned> exps) {
  const icg::PrimePower order(p, s);
  const icg::ExponentSet d = canonical_exponents(std::move(exps));
  const icg::EnergyReport rep = icg::energy_report(order, d);
  ojson rec;
  rec["command"] = "energy";
  rec["prime"] = p;
  rec["exp"] = s;
  rec["exponents"] = join_exponents(d.values());
  rec["energy"] = rep.energy.get_str();
  rec["normalized_exact"] = rational_str(rep.normalized);
  rec["normalized"] = icg::to_double(rep.normalized);
  rec["degree"] = rep.degree.get_str();
  rec["hyperenergetic"] = rep.hyperenergetic;
  rec["provenance"] = "closed-form";
  return rec;
}

ojson run_spectrum(std::uint64_t n, std::vector<std::uint64_t> divisors) {
  const icg::GraphSpec g(n, std::move(divisors));
  const icg::SpectrumResult res = icg::spectrum_of(g);
  const icg::ClassicalBounds bounds = icg::classical_bounds(res, n);
  std::vector<long long> sorted = res.eigenvalues;
  std::sort(sorted.rbegin(), sorted.rend());
  ojson rec;
  rec["command"] = "spectrum";
  rec["n"] = n;
  {
    std::string ds;
    for (std::size_t i = 0; i < g.divisors.size(); ++i) {
      if (i) ds += ',';
      ds += std::to_string(g.divisors[i]);
    }
    rec["divisors"] = ds;
  }
  rec["degree"] = std::to_string(res.degree);
  rec["energy"] = std::to_string(res.energy);
  rec["eigenvalues"] = sorted;
  rec["koolen_moulton"] = bounds.koolen_moulton;
  rec["koolen_moulton_slack"] = bounds.koolen_moulton - static_cast<double>(res.energy);
  rec["balakrishnan"] = bounds.balakrishnan;
  rec["balakrishnan_slack"] = bounds.balakrishnan - static_cast<double>(res.energy);
  rec["provenance"] = "bruteforce";
  return rec;
}

ojson run_maximize(std::uint64_t p, unsigned s, std::optional<unsigned> r, unsigned cap) {
  const icg::PrimePower order(p, s);
  ojson rec;
  rec["command"] = "maximize";
  rec["prime"] = p;
  rec["exp"] = s;
  icg::BigInt energy;
  std::vector<icg::ExponentSet> sets;
  if (r) {
    if (s > cap) throw icg::CapExceeded("exponent exceeds the enumeration cap");
    rec["r"] = *r;
    icg::FixedSizeMax fixed = icg::max_energy_fixed_size(order, *r);
    energy = std::move(fixed.energy);
    sets = std::move(fixed.maximal_sets);
  } else {
    icg::MaxEnergyResult full = icg::max_energy(order, cap);
    energy = std::move(full.energy);
    sets = std::move(full.maximal_sets);
  }
  rec["energy"] = energy.get_str();
  const icg::Rational norm = icg::normalized_energy(order, energy);
  rec["normalized_exact"] = rational_str(norm);
  rec["normalized"] = icg::to_double(norm);
  ojson set_list = ojson::array();
  for (const auto& d : sets) set_list.push_back(join_exponents(d.values()));
  rec["maximal_sets"] = set_list;
  rec["provenance"] = "bruteforce";
  return rec;
}

ojson run_construct(std::uint64_t p, unsigned s) {
  const icg::ConstructionResult res = icg::construct_near_maximal(p, s);
  ojson rec;
  rec["command"] = "construct";
  rec["prime"] = p;
  rec["exp"] = s;
  rec["r0"] = res.r0;
  rec["alphas"] = res.alphas;
  rec["exponents"] = join_exponents(res.exponents.values());
  rec["energy"] = res.energy.get_str();
  rec["normalized_exact"] = rational_str(res.normalized);
  rec["normalized"] = icg::to_double(res.normalized);
  rec["lower"] = res.bounds.lower;
  rec["upper"] = res.bounds.upper;
  rec["guarantee"] = res.bounds.guarantee;
  rec["provenance"] = "relaxation";
  return rec;
}

ojson run_table(unsigned s, std::vector<std::uint64_t> primes, unsigned cap) {
  ojson rec;
  rec["command"] = "table";
  rec["s"] = s;
  ojson rows = ojson::array();
  for (std::uint64_t p : primes) {
    const icg::PrimePower order(p, s);
    const icg::ConstructionResult cons = icg::construct_near_maximal(p, s);
    const icg::MaxEnergyResult best = icg::max_energy(order, cap);
    ojson row;
    row["n"] = std::to_string(p) + "^" + std::to_string(s);
    row["r0"] = cons.r0;
    row["d0"] = join_exponents(cons.exponents.values());
    row["lower"] = cons.bounds.lower;
    row["emax"] = icg::to_double(best.normalized);
    row["upper"] = cons.bounds.upper;
    row["emax_exact"] = best.energy.get_str();
    rows.push_back(std::move(row));
  }
  rec["rows"] = std::move(rows);
  rec["provenance"] = "bruteforce";
  return rec;
}

ojson run_hyper(std::uint64_t p, unsigned s, std::optional<unsigned> r,
                std::optional<std::vector<unsigned>> exps, unsigned cap) {
  const icg::PrimePower order(p, s);
  ojson rec;
  rec["command"] = "hyper";
  rec["prime"] = p;
  rec["exp"] = s;
  if (exps) {
    const icg::ExponentSet d = canonical_exponents(std::move(*exps));
    const icg::Rational threshold = icg::hyperenergetic_threshold(p, s, d.size());
    const icg::Rational margin = threshold - icg::gap_kernel(p, d);
    rec["exponents"] = join_exponents(d.values());
    rec["threshold_exact"] = rational_str(threshold);
    rec["hyperenergetic"] = icg::is_hyperenergetic(order, d);
    rec["margin_exact"] = rational_str(margin);
    rec["margin"] = icg::to_double(margin);
    rec["provenance"] = "closed-form";
    return rec;
  }
  std::vector<unsigned> sizes;
  if (r) {
    rec["r"] = *r;
    sizes.push_back(*r);
  } else {
    for (unsigned k = 1; k <= s; ++k) sizes.push_back(k);
  }
  ojson members = ojson::array();
  std::size_t count = 0;
  for (unsigned k : sizes) {
    const icg::Rational threshold = icg::hyperenergetic_threshold(p, s, k);
    for (const auto& d : icg::hyperenergetic_sets(order, k, cap)) {
      const icg::Rational margin = threshold - icg::gap_kernel(p, d);
      ojson m;
      m["exponents"] = join_exponents(d.values());
      m["margin_exact"] = rational_str(margin);
      m["margin"] = icg::to_double(margin);
      members.push_back(std::move(m));
      ++count;
    }
  }
  rec["count"] = count;
  rec["members"] = std::move(members);
  rec["provenance"] = "closed-form";
  return rec;
}

// Randomized invariant checks; deterministic under --seed.
ojson run_selfcheck(std::uint64_t seed, unsigned trials) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> prime_pick(0, 5);
  constexpr std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};

  bool convexity_ok = true;
  for (unsigned t = 0; t < trials && convexity_ok; ++t) {
    const std::uint64_t p = primes[prime_pick(rng)];
    std::uniform_int_distribution<unsigned> len(2, 8);
    const unsigned r = len(rng);
    std::uniform_real_distribution<double> coord(0.0, 12.0);
    std::vector<double> u(r), v(r), mid(r);
    for (auto& x : u) x = coord(rng);
    for (auto& x : v) x = coord(rng);
    std::sort(u.begin(), u.end());
    std::sort(v.begin(), v.end());
    for (unsigned i = 0; i < r; ++i) mid[i] = 0.5 * (u[i] + v[i]);
    const double lhs = icg::gap_kernel(p, std::span<const double>(mid));
    const double rhs = 0.5 * (icg::gap_kernel(p, std::span<const double>(u)) +
                              icg::gap_kernel(p, std::span<const double>(v)));
    convexity_ok = lhs <= rhs + 1e-12;
  }

  bool optimality_ok = true;
  for (unsigned t = 0; t < trials && optimality_ok; ++t) {
    const std::uint64_t p = primes[prime_pick(rng)];
    std::uniform_int_distribution<unsigned> rr(3, 9);
    const unsigned r = rr(rng);
    std::uniform_real_distribution<double> sig(r - 1.0, 3.0 * r);
    const icg::RelaxationSolution sol = icg::relax(p, sig(rng), r);
    std::vector<double> x(r - 1, sol.nu);
    x.front() = x.back() = sol.mu;
    const double base = icg::contiguous_product_sum(x);
    std::uniform_int_distribution<std::size_t> idx(0, x.size() - 1);
    std::uniform_real_distribution<double> scale(0.9, 1.1);
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const double tfac = scale(rng);
    std::vector<double> y = x;
    y[i] *= tfac;
    y[j] /= tfac;
    if (y[i] > 1.0 || y[j] > 1.0) continue;
    optimality_ok = icg::contiguous_product_sum(y) >= base - 1e-12;
  }

  bool oracle_ok = true;
  for (unsigned t = 0; t < trials && oracle_ok; ++t) {
    std::uniform_int_distribution<std::uint64_t> order(2, 200);
    const std::uint64_t n = order(rng);
    auto divs = icg::divisors_of(n);
    divs.pop_back();  // drop n itself
    std::vector<std::uint64_t> chosen;
    for (std::uint64_t d : divs) {
      if (rng() % 2) chosen.push_back(d);
    }
    if (chosen.empty()) chosen.push_back(1);
    const icg::GraphSpec g(n, chosen);
    const auto exact = icg::spectrum_of(g);
    const auto approx = icg::dft_eigenvalues(g);
    for (std::uint64_t j = 0; j < n && oracle_ok; ++j) {
      oracle_ok = std::abs(approx[j] - static_cast<double>(exact.eigenvalues[j])) < 1e-6;
    }
  }

  ojson rec;
  rec["command"] = "selfcheck";
  rec["seed"] = seed;
  rec["trials"] = trials;
  rec["midpoint_convexity"] = convexity_ok ? "pass" : "fail";
  rec["minimizer_optimality"] = optimality_ok ? "pass" : "fail";
  rec["oracle_agreement"] = oracle_ok ? "pass" : "fail";
  rec["provenance"] = "bruteforce";
  return rec;
}

bool selfcheck_failed(const ojson& rec) {
  if (!rec.contains("command") || rec["command"] != "selfcheck") return false;
  for (const char* key : {"midpoint_convexity", "minimizer_optimality", "oracle_agreement"}) {
    if (rec[key] != "pass") return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact energy toolkit for integral circulant graphs (gcd graphs)"};
  app.require_subcommand(1);

  Fmt fmt;
  ojson record;

  auto add_format = [&fmt](CLI::App* sub) {
    sub->add_option("--format", fmt.format, "output format")
        ->check(CLI::IsMember({"text", "tsv", "json"}))
        ->capture_default_str();
    sub->add_option("--precision", fmt.precision, "significant decimals for reals")
        ->capture_default_str();
    sub->add_option("--decimals", fmt.decimals, "fixed decimals for reals");
  };

  std::uint64_t p = 0, n = 0, seed = 12345;
  unsigned s = 0, table_s = 0, trials = 200;
  unsigned cap = icg::kDefaultEnumerationCap;
  std::optional<unsigned> fixed_r;
  std::optional<std::vector<unsigned>> opt_exps;
  std::vector<unsigned> exps;
  std::vector<std::uint64_t> divisors, primes;

  auto* c_energy = app.add_subcommand("energy", "exact energy of one divisor set");
  c_energy->add_option("--prime", p, "prime p")->required();
  c_energy->add_option("--exp", s, "exponent s of the order p^s")->required();
  c_energy->add_option("--exponents", exps, "divisor exponents a1,a2,...")
      ->required()
      ->delimiter(',');
  add_format(c_energy);
  c_energy->callback([&] { record = run_energy(p, s, exps); });

  auto* c_spectrum = app.add_subcommand("spectrum", "exact eigenvalues for arbitrary order");
  c_spectrum->add_option("--n", n, "graph order")->required();
  c_spectrum->add_option("--divisors", divisors, "proper divisors d1,d2,...")
      ->required()
      ->delimiter(',');
  add_format(c_spectrum);
  c_spectrum->callback([&] { record = run_spectrum(n, divisors); });

  auto* c_max = app.add_subcommand("maximize", "brute-force maximal energy");
  c_max->add_option("--prime", p, "prime p")->required();
  c_max->add_option("--exp", s, "exponent s")->required();
  c_max->add_option("--r", fixed_r, "restrict to divisor sets of this size");
  c_max->add_option("--max-exponent", cap, "enumeration cap")->capture_default_str();
  add_format(c_max);
  c_max->callback([&] { record = run_maximize(p, s, fixed_r, cap); });

  auto* c_cons = app.add_subcommand("construct", "near-maximal divisor set");
  c_cons->add_option("--prime", p, "prime p")->required();
  c_cons->add_option("--exp", s, "exponent s (>= 2)")->required();
  add_format(c_cons);
  c_cons->callback([&] { record = run_construct(p, s); });

  auto* c_table = app.add_subcommand("table", "bounds/construction/exact table per prime");
  c_table->add_option("--s", table_s, "exponent s")->required();
  c_table->add_option("--primes", primes, "primes p1,p2,...")->required()->delimiter(',');
  c_table->add_option("--max-exponent", cap, "enumeration cap")->capture_default_str();
  add_format(c_table);
  c_table->callback([&] { record = run_table(table_s, primes, cap); });

  auto* c_hyper = app.add_subcommand("hyper", "hyperenergetic divisor sets");
  c_hyper->add_option("--prime", p, "prime p")->required();
  c_hyper->add_option("--exp", s, "exponent s")->required();
  c_hyper->add_option("--r", fixed_r, "divisor set size");
  c_hyper->add_option("--exponents", opt_exps, "test one exponent set")->delimiter(',');
  c_hyper->add_option("--max-exponent", cap, "enumeration cap")->capture_default_str();
  add_format(c_hyper);
  c_hyper->callback([&] { record = run_hyper(p, s, fixed_r, opt_exps, cap); });

  auto* c_check = app.add_subcommand("selfcheck", "randomized invariant checks");
  c_check->add_option("--seed", seed, "RNG seed")->capture_default_str();
  c_check->add_option("--trials", trials, "trials per property")->capture_default_str();
  add_format(c_check);
  c_check->callback([&] { record = run_selfcheck(seed, trials); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  } catch (const icg::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  emit(record, fmt);
  return selfcheck_failed(record) ? 1 : 0;
}
