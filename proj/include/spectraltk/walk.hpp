#pragma once

#include <cstdint>
#include <utility>

#include "spectraltk/graph.hpp"
#include "spectraltk/spectrum.hpp"

namespace spectraltk {

// Lazy walk P = (I + D^{-1}A)/2; its eigenvalues are 1 - l_j/2.
struct WalkKernel {
  const WeightedGraph* g;
  const Spectrum* s;

  WalkKernel(const WeightedGraph& graph, const Spectrum& spectrum)
      : g(&graph), s(&spectrum) {}
};

double return_probability(const WalkKernel& k, int x, long long t);
double transition_probability(const WalkKernel& k, int x, int y, long long t);
// Continuous-time return probability q_t(x,x) = sum_j exp(-l_j t) g_j(x)^2.
double heat_return_probability(const WalkKernel& k, int x, double t);

struct MonteCarloEstimate {
  double estimate;
  double half_width;  // Hoeffding 95% half-width sqrt(ln(40)/(2 samples))
  std::uint64_t seed;
  long long samples;
};

// Empirical frequency of X_t = x over lazy-walk simulations; sample i uses
// substream i of the seed, so any fan-out across jobs merges to the same value.
MonteCarloEstimate monte_carlo_return(const WeightedGraph& g, int x, long long t,
                                      long long samples, std::uint64_t seed,
                                      int jobs = 1);

struct MixingReport {
  long long tau2;
  long long tau_inf;
  std::pair<int, int> witness;  // pair attaining the max at tau_inf - 1
};

// min t with max_x p_{2t}(x,x)/pi(x) <= 1 + eps^2
long long l2_mixing_time(const WalkKernel& k, double eps);
// min t with |p_t(x,y)/pi(y) - 1| <= eps for all x,y
long long linf_mixing_time(const WalkKernel& k, double eps);
MixingReport mixing_report(const WalkKernel& k, double eps);

// Continuous-time L2 mixing time (real-valued), used for the log-Sobolev
// bracket: inf{t : max_x q_{2t}(x,x)/pi(x) <= 1 + eps^2}.
double continuous_l2_mixing_time(const WalkKernel& k, double eps);

struct MeasureReturnBounds {
  double lhs;             // mu*_x(delta)
  double rhs_discrete;    // 2e (p_{floor(2/delta)}(x,x) - pi(x)), delta <= 1
  double rhs_continuous;  // e (q_{1/delta}(x,x) - pi(x))
};
MeasureReturnBounds measure_return_bounds(const WalkKernel& k, int x, double delta);

}  // namespace spectraltk
