#include "spectraltk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "spectraltk/rng.hpp"

namespace spectraltk {

namespace {

// Eigenvalues of the lazy kernel, mu_j = 1 - l_j/2 in [0,1].
double lazy_mu(double lambda) { return 1.0 - lambda / 2.0; }

constexpr double kPowCutoff = 1e-18;
// Threshold comparisons admit this rounding slack so exact ties (e.g. the C4
// antipodal pair hitting eps precisely) resolve the way the algebra does.
constexpr double kTieGuard = 1e-12;
constexpr long long kScanCapFactor = 16;  // cap = 16 n^3

long long scan_cap(int n) {
  return kScanCapFactor * static_cast<long long>(n) * n * n + 16;
}

}  // namespace

double return_probability(const WalkKernel& k, int x, long long t) {
  double p = 0.0;
  for (int j = 0; j < k.s->n(); ++j) {
    const double mu = lazy_mu(k.s->eigenvalues[j]);
    const double g = k.s->g(x, j);
    p += std::pow(mu, static_cast<double>(t)) * g * g;
  }
  return p;
}

double transition_probability(const WalkKernel& k, int x, int y, long long t) {
  const double scale = std::sqrt(k.g->degree(y) / k.g->degree(x));
  double p = 0.0;
  for (int j = 0; j < k.s->n(); ++j) {
    const double mu = lazy_mu(k.s->eigenvalues[j]);
    p += std::pow(mu, static_cast<double>(t)) * k.s->g(x, j) * k.s->g(y, j);
  }
  return p * scale;
}

double heat_return_probability(const WalkKernel& k, int x, double t) {
  double q = 0.0;
  for (int j = 0; j < k.s->n(); ++j) {
    const double g = k.s->g(x, j);
    q += std::exp(-k.s->eigenvalues[j] * t) * g * g;
  }
  return q;
}

MonteCarloEstimate monte_carlo_return(const WeightedGraph& g, int x, long long t,
                                      long long samples, std::uint64_t seed,
                                      int jobs) {
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  g.require_connected("random walk");
  const CounterRng root(seed);

  auto run_range = [&](long long lo, long long hi, long long* hits) {
    long long h = 0;
    for (long long i = lo; i < hi; ++i) {
      CounterRng rng = root.substream(static_cast<std::uint64_t>(i));
      int pos = x;
      for (long long step = 0; step < t; ++step) {
        if (rng.coin()) continue;  // lazy half-step
        const auto& nbrs = g.neighbors(pos);
        if (g.unit_weight()) {
          pos = nbrs[rng.below(nbrs.size())].to;
        } else {
          double target = rng.uniform() * g.degree(pos);
          double acc = 0.0;
          pos = nbrs.back().to;
          for (const Neighbor& nb : nbrs) {
            acc += nb.w;
            if (target < acc) {
              pos = nb.to;
              break;
            }
          }
        }
      }
      if (pos == x) ++h;
    }
    *hits = h;
  };

  long long total = 0;
  if (jobs <= 1) {
    run_range(0, samples, &total);
  } else {
    std::vector<long long> hits(jobs, 0);
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) {
      const long long lo = samples * w / jobs, hi = samples * (w + 1) / jobs;
      threads.emplace_back(run_range, lo, hi, &hits[w]);
    }
    for (auto& th : threads) th.join();
    for (long long h : hits) total += h;
  }

  MonteCarloEstimate est;
  est.estimate = static_cast<double>(total) / samples;
  est.half_width = std::sqrt(std::log(40.0) / (2.0 * samples));
  est.seed = seed;
  est.samples = samples;
  return est;
}

namespace {

// max_x p_{2t}(x,x)/pi(x) - 1; monotone decreasing in t.
double l2_distance_sq(const WalkKernel& k, long long t) {
  const int n = k.s->n();
  double worst = 0.0;
  for (int x = 0; x < n; ++x) {
    double d = 0.0;
    for (int j = 1; j < n; ++j) {
      const double mu = lazy_mu(k.s->eigenvalues[j]);
      const double p = std::pow(mu, 2.0 * t);
      if (p < kPowCutoff) continue;
      const double g = k.s->g(x, j);
      d += p * g * g;
    }
    worst = std::max(worst, d / k.g->stationary(x));
  }
  return worst;
}

// max_{x,y} |p_t(x,y)/pi(y) - 1| and a witness pair.
double linf_distance(const WalkKernel& k, long long t, std::pair<int, int>* witness) {
  const int n = k.s->n();
  const double vol = k.g->vol_total();
  std::vector<double> c;
  std::vector<int> live;
  for (int j = 1; j < n; ++j) {
    const double p = std::pow(lazy_mu(k.s->eigenvalues[j]), static_cast<double>(t));
    if (std::abs(p) < kPowCutoff) continue;
    c.push_back(p);
    live.push_back(j);
  }
  // f_j(x) = g_j(x) sqrt(vol/w(x)); p_t(x,y)/pi(y) - 1 = sum_j c_j f_j(x) f_j(y)
  std::vector<std::vector<double>> f(live.size(), std::vector<double>(n));
  for (std::size_t a = 0; a < live.size(); ++a)
    for (int x = 0; x < n; ++x)
      f[a][x] = k.s->g(x, live[a]) * std::sqrt(vol / k.g->degree(x));
  double worst = 0.0;
  std::pair<int, int> arg{0, 0};
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      double d = 0.0;
      for (std::size_t a = 0; a < live.size(); ++a) d += c[a] * f[a][x] * f[a][y];
      if (std::abs(d) > worst) {
        worst = std::abs(d);
        arg = {x, y};
      }
    }
  if (witness) *witness = arg;
  return worst;
}

// Smallest t in [1, cap] where pred(t) holds; pred must be monotone (once true,
// true for all larger t). Exponential bracketing then bisection.
template <class Pred>
long long first_success(Pred pred, long long cap) {
  long long hi = 1;
  while (!pred(hi)) {
    if (hi >= cap) throw std::runtime_error("mixing-time scan exceeded its cap");
    hi = std::min(cap, hi * 2);
  }
  long long lo = hi / 2;  // pred(lo) false (or lo == 0)
  while (lo + 1 < hi) {
    const long long mid = lo + (hi - lo) / 2;
    if (pred(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace

long long l2_mixing_time(const WalkKernel& k, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const double target = eps * eps + kTieGuard;
  if (l2_distance_sq(k, 0) <= target) return 0;
  return first_success(
      [&](long long t) { return l2_distance_sq(k, t) <= target; },
      scan_cap(k.s->n()));
}

long long linf_mixing_time(const WalkKernel& k, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("epsilon must be positive");
  // d_inf(t) <= max_x p_{2 floor(t/2)}(x,x)/pi(x) - 1, which is monotone, so
  // success at t implies success at every larger t and bisection is sound.
  if (linf_distance(k, 0, nullptr) <= eps + kTieGuard) return 0;
  return first_success(
      [&](long long t) { return linf_distance(k, t, nullptr) <= eps + kTieGuard; },
      scan_cap(k.s->n()));
}

MixingReport mixing_report(const WalkKernel& k, double eps) {
  MixingReport r;
  r.tau2 = l2_mixing_time(k, eps);
  r.tau_inf = linf_mixing_time(k, eps);
  if (r.tau_inf > 0)
    linf_distance(k, r.tau_inf - 1, &r.witness);
  else
    r.witness = {0, 0};
  return r;
}

double continuous_l2_mixing_time(const WalkKernel& k, double eps) {
  const int n = k.s->n();
  const double target = eps * eps;
  auto dist = [&](double t) {
    double worst = 0.0;
    for (int x = 0; x < n; ++x) {
      double d = 0.0;
      for (int j = 1; j < n; ++j) {
        const double g = k.s->g(x, j);
        d += std::exp(-2.0 * k.s->eigenvalues[j] * t) * g * g;
      }
      worst = std::max(worst, d / k.g->stationary(x));
    }
    return worst;
  };
  if (dist(0.0) <= target) return 0.0;
  double hi = 1.0;
  while (dist(hi) > target) {
    hi *= 2.0;
    if (hi > 1e12) throw std::runtime_error("continuous mixing-time scan diverged");
  }
  double lo = hi / 2.0;
  if (hi == 1.0) lo = 0.0;
  for (int it = 0; it < 100 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (dist(mid) <= target)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

MeasureReturnBounds measure_return_bounds(const WalkKernel& k, int x, double delta) {
  if (!(delta > 0.0) || delta > 2.0)
    throw std::invalid_argument("delta must lie in (0, 2]");
  MeasureReturnBounds b;
  b.lhs = vertex_measure(*k.s, *k.g, x, delta).mu_star;
  const double pi = k.g->stationary(x);
  if (delta <= 1.0) {
    const long long t = static_cast<long long>(std::floor(2.0 / delta));
    b.rhs_discrete = 2.0 * std::exp(1.0) * (return_probability(k, x, t) - pi);
  } else {
    b.rhs_discrete = std::numeric_limits<double>::quiet_NaN();
  }
  b.rhs_continuous =
      std::exp(1.0) * (heat_return_probability(k, x, 1.0 / delta) - pi);
  return b;
}

}  // namespace spectraltk
