#include "spectraltk/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "spectraltk/walk.hpp"

namespace spectraltk {

double gamma_function(double z) {
  if (!(z > 0.0) || z > 50.0)
    throw std::invalid_argument("gamma_function requires z in (0, 50]");
  return std::tgamma(z);
}

bool BoundReport::all_pass() const {
  for (const BoundRow& r : rows)
    if (r.applicable && !r.pass) return false;
  return true;
}

std::string BoundReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "bound-report/v1";
  j["graph"] = graph_name;
  j["n"] = n;
  j["elapsed_sec"] = elapsed_sec;
  j["all_pass"] = all_pass();
  j["rows"] = nlohmann::json::array();
  for (const BoundRow& r : rows) {
    nlohmann::json row;
    row["check"] = r.check;
    row["params"] = r.params;
    row["lhs"] = r.lhs;
    row["rhs"] = r.rhs;
    row["margin"] = r.margin();
    row["strict"] = r.strict;
    row["pass"] = r.pass;
    row["applicable"] = r.applicable;
    if (!r.note.empty()) row["note"] = r.note;
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string BoundReport::to_table() const {
  std::string out = graph_name + " (n=" + std::to_string(n) + ")\n";
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-34s %-28s %13s %13s %13s  %s\n", "check",
                "params", "lhs", "rhs", "margin", "status");
  out += buf;
  for (const BoundRow& r : rows) {
    const char* status =
        !r.applicable ? "n/a" : (r.pass ? "pass" : "FAIL");
    std::snprintf(buf, sizeof buf, "%-34s %-28s %13.6g %13.6g %13.6g  %s\n",
                  r.check.c_str(), r.params.c_str(), r.lhs, r.rhs, r.margin(),
                  status);
    out += buf;
  }
  out += all_pass() ? "all rows pass\n" : "SOME ROWS FAIL\n";
  return out;
}

namespace {

bool holds(double lhs, double rhs, bool strict) {
  return strict ? (lhs - kRoundGuard < rhs) : (lhs <= rhs + kRoundGuard);
}

BoundRow make_row(std::string check, std::string params, double lhs, double rhs,
                  bool strict, std::string note = "") {
  BoundRow r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.strict = strict;
  r.pass = holds(lhs, rhs, strict);
  r.note = std::move(note);
  return r;
}

BoundRow skip_row(std::string check, std::string why) {
  BoundRow r;
  r.check = std::move(check);
  r.lhs = 0.0;
  r.rhs = 0.0;
  r.strict = false;
  r.pass = true;
  r.applicable = false;
  r.note = std::move(why);
  return r;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

}  // namespace

std::vector<double> eigenvalue_avoiding_grid(const Spectrum& s, int points) {
  std::vector<double> grid;
  grid.reserve(points);
  auto too_close = [&](double d) {
    for (double l : s.eigenvalues)
      if (std::abs(d - l) < 1e-6) return true;
    return false;
  };
  for (int i = 0; i < points; ++i) {
    double d = 2.0 * (i + 0.5) / points;
    while (too_close(d) && d < 2.0) d += 2.1e-6;
    if (d > 0.0 && d < 2.0 && !too_close(d)) grid.push_back(d);
  }
  return grid;
}

void check_eigenvalue_lower_bounds(const WeightedGraph& g, const Spectrum& s,
                                   const ResistanceProfile& rp,
                                   std::vector<BoundRow>& rows) {
  const int n = g.num_vertices();
  const double n3 = static_cast<double>(n) * n * n;

  if (g.unit_weight()) {
    for (int k = 2; k <= n; ++k) {
      const double km1 = k - 1;
      rows.push_back(make_row("eig_cubic", "k=" + std::to_string(k),
                              km1 * km1 * km1 / (3200.0 * n3),
                              s.eigenvalues[k - 1], true));
    }
    rows.push_back(make_row("eig_gap_universal", "",
                            2.0 / (n * static_cast<double>(n - 1) * (n - 1)),
                            s.eigenvalues[1], false));
  } else {
    rows.push_back(skip_row("eig_cubic", "requires unit weights"));
    rows.push_back(skip_row("eig_gap_universal", "requires unit weights"));
  }

  if (g.regular() && g.unit_weight()) {
    for (int k = 2; k <= n; ++k) {
      const double km1 = k - 1;
      rows.push_back(make_row("eig_quadratic_regular", "k=" + std::to_string(k),
                              km1 * km1 / (100.0 * n * static_cast<double>(n)),
                              s.eigenvalues[k - 1], false));
    }
  } else {
    rows.push_back(skip_row("eig_quadratic_regular", "requires regular unit weights"));
  }

  rows.push_back(make_row("eig_gap_commute", "", 2.0 / rp.commute_max,
                          s.eigenvalues[1], false));
}

void check_measure_upper_bounds(const WeightedGraph& g, const Spectrum& s,
                                const ResistanceProfile& rp,
                                const std::vector<double>& delta_grid,
                                std::vector<BoundRow>& rows) {
  const int n = g.num_vertices();
  if (!g.unit_weight()) {
    rows.push_back(skip_row("measure_cubic", "requires unit weights"));
    rows.push_back(skip_row("measure_effres", "requires unit weights"));
    rows.push_back(skip_row("measure_growth", "requires unit weights"));
    rows.push_back(skip_row("measure_sqrt_regular", "requires unit weights"));
    return;
  }

  std::vector<std::vector<double>> mu_star(n);  // [x] -> per-delta values
  for (int x = 0; x < n; ++x) {
    mu_star[x].reserve(delta_grid.size());
    for (double d : delta_grid)
      mu_star[x].push_back(vertex_measure(s, g, x, d).mu_star);
  }

  // mu*(delta) < 14.8 delta^{1/3}; worst grid point kept
  {
    BoundRow worst;
    bool first = true;
    for (std::size_t i = 0; i < delta_grid.size(); ++i) {
      const double d = delta_grid[i];
      const double lhs = graph_measure(s, d).mu_star;
      const double rhs = 14.8 * std::cbrt(d);
      if (first || lhs - rhs > worst.lhs - worst.rhs) {
        worst = make_row("measure_cubic", "delta=" + fmt("%.6g", d), lhs, rhs, true);
        first = false;
      }
    }
    rows.push_back(worst);
  }

  // mu*_x(delta) + pi(x) <= R_diam(x) delta w(x) whenever mu*_x(delta) > 0
  // (the argument normalizes the embedding of x); worst (x, delta) kept
  {
    BoundRow worst;
    bool first = true;
    for (std::size_t i = 0; i < delta_grid.size(); ++i)
      for (int x = 0; x < n; ++x) {
        if (mu_star[x][i] <= 1e-12) continue;
        const double lhs = mu_star[x][i] + g.stationary(x);
        const double rhs = rp.r_diam_per_vertex[x] * delta_grid[i] * g.degree(x);
        if (first || lhs - rhs > worst.lhs - worst.rhs) {
          worst = make_row("measure_effres",
                           "x=" + std::to_string(x) +
                               " delta=" + fmt("%.6g", delta_grid[i]),
                           lhs, rhs, false);
          first = false;
        }
      }
    if (first)
      rows.push_back(skip_row("measure_effres", "mu*_x vanishes on the grid"));
    else
      rows.push_back(worst);
  }

  // mu*_x(delta) <= 4 w(x)/vol(x,r) whenever delta <= 1/(r vol(x,r))
  {
    BoundRow worst;
    bool first = true;
    for (int x = 0; x < n; ++x) {
      const auto dist = distances_from(g, x);
      const int ecc = *std::max_element(dist.begin(), dist.end());
      for (int r = 1; r <= ecc; ++r) {
        const BallVolume bv = ball_volume(dist, g, r);
        const double dmax = 1.0 / (r * bv.vol);
        const double rhs = 4.0 * g.degree(x) / bv.vol;
        for (std::size_t i = 0; i < delta_grid.size(); ++i) {
          if (delta_grid[i] > dmax) continue;
          const double lhs = mu_star[x][i];
          if (first || lhs - rhs > worst.lhs - worst.rhs) {
            worst = make_row("measure_growth",
                             "x=" + std::to_string(x) + " r=" + std::to_string(r) +
                                 " delta=" + fmt("%.6g", delta_grid[i]),
                             lhs, rhs, false);
            first = false;
          }
        }
      }
    }
    if (first)
      rows.push_back(skip_row("measure_growth", "no admissible (r, delta) pair"));
    else
      rows.push_back(worst);
  }

  if (g.regular()) {
    BoundRow worst;
    bool first = true;
    for (std::size_t i = 0; i < delta_grid.size(); ++i)
      for (int x = 0; x < n; ++x) {
        const double lhs = mu_star[x][i];
        const double rhs = 10.0 * std::sqrt(delta_grid[i]);
        if (first || lhs - rhs > worst.lhs - worst.rhs) {
          worst = make_row("measure_sqrt_regular",
                           "x=" + std::to_string(x) +
                               " delta=" + fmt("%.6g", delta_grid[i]),
                           lhs, rhs, true);
          first = false;
        }
      }
    rows.push_back(worst);
  } else {
    rows.push_back(skip_row("measure_sqrt_regular", "requires a regular graph"));
  }
}

void check_mixing_and_return_bounds(const WeightedGraph& g, const Spectrum& s,
                                    const ResistanceProfile& rp,
                                    const BoundSuiteOptions& opt,
                                    std::vector<BoundRow>& rows) {
  const int n = g.num_vertices();
  const double n_d = n;
  WalkKernel k(g, s);

  if (opt.include_mixing) {
    const double tau_inf = static_cast<double>(linf_mixing_time(k, 0.25));
    rows.push_back(make_row("mixing_commute", "eps=1/4", tau_inf,
                            2.0 * std::ceil(4.0 * rp.commute_max), false));
    if (g.unit_weight())
      rows.push_back(make_row("mixing_cubic", "eps=1/4", tau_inf,
                              8.0 * n_d * n_d * n_d, false));
    else
      rows.push_back(skip_row("mixing_cubic", "requires unit weights"));
    if (g.regular() && g.unit_weight())
      rows.push_back(make_row("mixing_quadratic_regular", "eps=1/4", tau_inf,
                              24.0 * n_d * n_d, false));
    else
      rows.push_back(
          skip_row("mixing_quadratic_regular", "requires regular unit weights"));
  }

  // return-probability decay over t in {1, 2, 4, ..., max_return_time}
  bool first_vertex = true, first_avg = true, first_reg = true;
  BoundRow worst_vertex, worst_avg, worst_reg;
  for (long long t = 1; t <= opt.max_return_time; t *= 2) {
    double trace = 0.0;
    for (int x = 0; x < n; ++x) {
      const double pt = return_probability(k, x, t);
      trace += pt;
      const double pi = g.stationary(x);
      {
        const double lhs = pt / pi - 1.0;
        const double rhs = 2.0 * rp.commute_per_vertex[x] / t;
        if (first_vertex || lhs - rhs > worst_vertex.lhs - worst_vertex.rhs) {
          worst_vertex = make_row(
              "return_commute",
              "x=" + std::to_string(x) + " t=" + std::to_string(t), lhs, rhs, true);
          first_vertex = false;
        }
      }
      if (g.regular() && g.unit_weight()) {
        const double lhs = pt - pi;
        const double rhs = 13.0 / std::sqrt(static_cast<double>(t));
        if (first_reg || lhs - rhs > worst_reg.lhs - worst_reg.rhs) {
          worst_reg = make_row(
              "return_sqrt_regular",
              "x=" + std::to_string(x) + " t=" + std::to_string(t), lhs, rhs, true);
          first_reg = false;
        }
      }
    }
    if (g.unit_weight()) {
      const double lhs = (trace - 1.0) / n_d;
      const double rhs = 17.0 / std::cbrt(static_cast<double>(t));
      if (first_avg || lhs - rhs > worst_avg.lhs - worst_avg.rhs) {
        worst_avg = make_row("return_average", "t=" + std::to_string(t), lhs,
                             rhs, true);
        first_avg = false;
      }
    }
  }
  rows.push_back(worst_vertex);
  if (g.unit_weight())
    rows.push_back(worst_avg);
  else
    rows.push_back(skip_row("return_average", "requires unit weights"));
  if (g.regular() && g.unit_weight())
    rows.push_back(worst_reg);
  else
    rows.push_back(
        skip_row("return_sqrt_regular", "requires regular unit weights"));
}

void check_transitive_bounds(const WeightedGraph& g, const Spectrum& s,
                             const std::vector<double>& delta_grid,
                             std::vector<BoundRow>& rows) {
  if (!g.vertex_transitive) {
    rows.push_back(skip_row("transitive_ball", "not declared vertex-transitive"));
    rows.push_back(skip_row("transitive_uniform_measure", ""));
    rows.push_back(skip_row("transitive_gap_diam", ""));
    rows.push_back(skip_row("transitive_poly_growth", ""));
    return;
  }
  const int n = g.num_vertices();
  const double w = g.degree(0);
  const auto dist0 = distances_from(g, 0);
  const int diam = diameter(g);

  // per-vertex measures must coincide; report the largest spread on the grid
  {
    double spread = 0.0;
    double at_delta = delta_grid.empty() ? 0.0 : delta_grid[0];
    for (double d : delta_grid) {
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (int x = 0; x < n; ++x) {
        const double v = vertex_measure(s, g, x, d).mu_star;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      if (hi - lo > spread) {
        spread = hi - lo;
        at_delta = d;
      }
    }
    rows.push_back(make_row("transitive_uniform_measure",
                            "delta=" + fmt("%.6g", at_delta), spread, 1e-9,
                            false));
  }

  // mu*(delta) <= 1/((1-alpha)^2 N(alpha/sqrt(2 w delta))); hop balls, floored radius
  for (double alpha : {0.25, 0.5, 0.75}) {
    BoundRow worst;
    bool first = true;
    for (double d : delta_grid) {
      const double radius = alpha / std::sqrt(2.0 * w * d);
      const double N = ball_volume(dist0, g, radius).count;
      const double lhs = graph_measure(s, d).mu_star;
      const double rhs = 1.0 / ((1.0 - alpha) * (1.0 - alpha) * N);
      if (first || lhs - rhs > worst.lhs - worst.rhs) {
        worst = make_row("transitive_ball",
                         "alpha=" + fmt("%.2g", alpha) + " delta=" + fmt("%.6g", d),
                         lhs, rhs, false, "ball radius floored to hop metric");
        first = false;
      }
    }
    rows.push_back(worst);
  }

  rows.push_back(make_row("transitive_gap_diam", "",
                          1.0 / (2.0 * w * diam * static_cast<double>(diam)),
                          s.eigenvalues[1], false));

  if (g.growth_dimension >= 1) {
    // fit N(r) >= C0 r^a with a = lattice dimension, then the corollary constant
    const double a = g.growth_dimension;
    double C0 = std::numeric_limits<double>::infinity();
    for (int r = 1; r <= diam; ++r)
      C0 = std::min(C0, ball_volume(dist0, g, r).count / std::pow(r, a));
    const double Cp = std::pow(a + 2.0, a + 2.0) * std::pow(2.0 * w, a / 2.0) /
                      (4.0 * C0 * std::pow(a, a));
    BoundRow worst;
    bool first = true;
    for (double d : delta_grid) {
      const double lhs = graph_measure(s, d).mu_star;
      const double rhs = Cp * std::pow(d, a / 2.0);
      if (first || lhs - rhs > worst.lhs - worst.rhs) {
        worst = make_row("transitive_poly_growth",
                         "a=" + fmt("%.2g", a) + " C0=" + fmt("%.4g", C0) +
                             " delta=" + fmt("%.6g", d),
                         lhs, rhs, false);
        first = false;
      }
    }
    rows.push_back(worst);
  } else {
    rows.push_back(
        skip_row("transitive_poly_growth", "no declared growth dimension"));
  }
}

void check_sharpness(const WeightedGraph& g, const Spectrum& s,
                     std::vector<BoundRow>& rows) {
  const double n3 = std::pow(static_cast<double>(g.num_vertices()), 3.0);
  if (g.family == "barbell") {
    // lambda_2 = Theta(1/n^3); the slack 60 was fixed from exact spectra
    rows.push_back(make_row("sharp_barbell", "", s.eigenvalues[1] * n3, 60.0,
                            false, "empirical slack over the asymptotic 54"));
  } else if (g.family == "clique_cycle" && g.family_k >= 2) {
    const int k = g.family_k;
    const double k3 = std::pow(static_cast<double>(k), 3.0);
    rows.push_back(make_row("sharp_clique_cycle", "k=" + std::to_string(k),
                            s.eigenvalues[k - 1] * n3 / k3, 40.0, false,
                            "empirical slack"));
  } else {
    rows.push_back(skip_row("sharpness", "no sharpness family declared"));
  }
}

GrowthConstants growth_constants(double a, double c, double C0, double d,
                                 double c2) {
  if (!(a > 0.0) || !(c > 0.0) || !(C0 > 0.0) || !(d > 0.0) || !(c2 > 0.0))
    throw std::invalid_argument("growth constants need positive parameters");
  GrowthConstants gc;
  gc.C = std::pow(1.5, a / (a + 1.0)) * (a + 1.0) * (a + 1.0) /
         (std::pow(c, 1.0 / (a + 1.0)) * a * a);
  gc.C_prime = std::pow(3.0, a / (a + 1.0)) * (a + 1.0) /
               (std::pow(c, 1.0 / (a + 1.0)) * a) * gamma_function(a / (a + 1.0));
  gc.C_prime_trans = std::pow(a + 2.0, a + 2.0) * std::pow(2.0 * d, a / 2.0) /
                     (4.0 * C0 * std::pow(a, a));
  gc.C_double_prime_trans = std::pow(a + 2.0, a + 2.0) *
                            std::pow(4.0 * d, a / 2.0) /
                            (8.0 * C0 * std::pow(a, a - 1.0)) *
                            gamma_function(a / 2.0);
  gc.c3 = c2 * std::pow(8.0 * d, -a / 2.0);
  gc.c4 = std::pow(std::pow(c2, 2.0 / a) / (8.0 * a * d), a / (a + 2.0));
  return gc;
}

LogSobolevBracket log_sobolev_bracket(const WeightedGraph& g, const Spectrum& s) {
  WalkKernel k(g, s);
  LogSobolevBracket b;
  b.lower = 1.0 / (2.0 * continuous_l2_mixing_time(k, std::exp(-1.0)));
  b.upper = s.eigenvalues[1] / 2.0;
  b.rho0_lower = 4.0 * b.lower;
  b.rho0_upper = 2.0 * s.eigenvalues[1];
  return b;
}

BoundReport run_bound_suite(const WeightedGraph& g, const Spectrum& s,
                            const BoundSuiteOptions& opt) {
  g.require_connected("bound suite");
  const auto t0 = std::chrono::steady_clock::now();

  BoundReport rep;
  rep.graph_name = g.name;
  rep.n = g.num_vertices();

  const ResistanceProfile rp = resistance_profile(g);
  const auto grid = eigenvalue_avoiding_grid(s, opt.delta_grid_points);

  check_eigenvalue_lower_bounds(g, s, rp, rep.rows);
  check_measure_upper_bounds(g, s, rp, grid, rep.rows);
  check_mixing_and_return_bounds(g, s, rp, opt, rep.rows);
  check_transitive_bounds(g, s, grid, rep.rows);
  if (opt.include_sharpness) check_sharpness(g, s, rep.rows);

  // log-Sobolev bracket sanity: lower <= upper
  const LogSobolevBracket lsb = log_sobolev_bracket(g, s);
  rep.rows.push_back(
      make_row("log_sobolev_bracket", "eps=1/e", lsb.lower, lsb.upper, false));

  rep.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace spectraltk
