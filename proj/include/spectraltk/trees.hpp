#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "spectraltk/graph.hpp"
#include "spectraltk/rng.hpp"
#include "spectraltk/spectrum.hpp"

namespace spectraltk {

// Exhaustive oracle: enumerate (n-1)-edge subsets. Unweighted, n <= 10.
std::uint64_t brute_force_tree_count(const WeightedGraph& g);

// Matrix-Tree cofactor determinant; exact integer (Bareiss, GMP) for
// unweighted graphs with n <= 256.
mpz_class spanning_tree_count_exact(const WeightedGraph& g);
// Weighted variant (floating LU on the cofactor).
double spanning_tree_count_weighted(const WeightedGraph& g);
// ln tau(G), exact route (integer count for unweighted, LU for weighted).
double log_tau_exact(const WeightedGraph& g);

// ln tau = -ln(sum_x 2w(x)) + sum_x ln 2w(x) + sum_{j>=2} ln(l_j / 2);
// the kernel eigenvalue is skipped by index.
double log_tau_spectral(const WeightedGraph& g, const Spectrum& s);

struct TruncatedLogTau {
  double value;        // series truncated at t < 2r
  double error_bound;  // 45 n / r^{1/3}
};
TruncatedLogTau log_tau_series_truncated(const WeightedGraph& g,
                                         const Spectrum& s, int r);

// --- local estimation over an abstract oracle --------------------------------

class GraphOracle {
 public:
  virtual ~GraphOracle() = default;
  virtual int random_vertex() = 0;
  virtual int random_neighbor(int x) = 0;
  virtual double degree(int x) = 0;
  virtual int num_vertices() const = 0;
  virtual long long num_edges() const = 0;
  virtual long long query_count() const = 0;
};

// Oracle backed by an in-memory unweighted graph; deterministic given seed.
std::unique_ptr<GraphOracle> in_memory_oracle(const WeightedGraph& g,
                                              std::uint64_t seed);

struct EstimatorOverrides {
  std::optional<long long> r;
  std::optional<long long> num_samples;
  std::optional<long long> degree_samples;
};

struct TreeEstimate {
  double value;  // estimate of ln tau(G) / n
  long long r;
  double s;  // sum_{1 <= t < 2r} 1/t
  long long num_samples;
  long long degree_samples;
  double epsilon;
  double delta_fail;
  long long queries_used;
  std::uint64_t seed;

  std::string to_json() const;
};

// Local sampling estimator of ln tau / n. Defaults follow
//   r = ceil(90 eps^-3), N = ceil(64 ln(1/delta) s^2 / eps^2),
//   degree_samples = ceil(256 ln(1/delta) (ln n)^2 / eps^2);
// the overrides exist for desk-scale testing only.
TreeEstimate estimate_log_tau_local(GraphOracle& oracle, double epsilon,
                                    double delta_fail, std::uint64_t seed,
                                    const EstimatorOverrides& overrides = {});

}  // namespace spectraltk
