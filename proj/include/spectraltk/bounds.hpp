#pragma once

#include <string>
#include <vector>

#include "spectraltk/graph.hpp"
#include "spectraltk/resistance.hpp"
#include "spectraltk/spectrum.hpp"

namespace spectraltk {

double gamma_function(double z);  // z in (0, 50]

struct BoundRow {
  std::string check;   // stable identifier, e.g. "measure_cubic"
  std::string params;  // parameter slice, e.g. "delta=0.531"
  double lhs;
  double rhs;
  bool strict;  // lhs < rhs required (vs <=)
  bool pass;
  bool applicable = true;
  std::string note;

  double margin() const { return rhs - lhs; }
};

struct BoundReport {
  std::string graph_name;
  int n = 0;
  double elapsed_sec = 0.0;
  std::vector<BoundRow> rows;

  bool all_pass() const;
  std::string to_json() const;
  std::string to_table() const;
};

struct BoundSuiteOptions {
  int delta_grid_points = 64;
  int max_return_time = 1024;     // t in {1,2,4,...,max}
  bool include_sharpness = true;  // barbell / clique_cycle scaled asymptotics
  bool include_mixing = true;     // exact tau_inf rows (costlier)
};

// Strict inequalities compare after a 1e-12 rounding guard.
inline constexpr double kRoundGuard = 1e-12;

// 'points' values in (0,2) staying at least 1e-6 from every eigenvalue.
std::vector<double> eigenvalue_avoiding_grid(const Spectrum& s, int points);

// Per-theorem row producers. Each appends to 'rows'.
void check_eigenvalue_lower_bounds(const WeightedGraph& g, const Spectrum& s,
                                   const ResistanceProfile& rp,
                                   std::vector<BoundRow>& rows);
void check_measure_upper_bounds(const WeightedGraph& g, const Spectrum& s,
                                const ResistanceProfile& rp,
                                const std::vector<double>& delta_grid,
                                std::vector<BoundRow>& rows);
void check_mixing_and_return_bounds(const WeightedGraph& g, const Spectrum& s,
                                    const ResistanceProfile& rp,
                                    const BoundSuiteOptions& opt,
                                    std::vector<BoundRow>& rows);
void check_transitive_bounds(const WeightedGraph& g, const Spectrum& s,
                             const std::vector<double>& delta_grid,
                             std::vector<BoundRow>& rows);
void check_sharpness(const WeightedGraph& g, const Spectrum& s,
                     std::vector<BoundRow>& rows);

struct GrowthConstants {
  // polynomial volume growth vol(x,r) >= c (r+1)^a, a >= 1:
  double C;        // measure bound constant
  double C_prime;  // return-probability constant
  // transitive polynomial growth N(r) >= C0 r^a with degree d:
  double C_prime_trans;
  double C_double_prime_trans;
  // transitive super-polynomial growth N(r) >= c1 exp(c2 r^a), 0 < a <= 1:
  double c3;
  double c4;
};
GrowthConstants growth_constants(double a, double c, double C0, double d,
                                 double c2);

struct LogSobolevBracket {
  double lower;      // 1 / (2 tau2_cont(1/e))
  double upper;      // lambda_2 / 2
  double rho0_lower; // 4 * lower
  double rho0_upper; // 2 * lambda_2
};
LogSobolevBracket log_sobolev_bracket(const WeightedGraph& g, const Spectrum& s);

BoundReport run_bound_suite(const WeightedGraph& g, const Spectrum& s,
                            const BoundSuiteOptions& opt = {});

}  // namespace spectraltk
