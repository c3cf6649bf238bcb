#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "corpus.hpp"
#include "spectraltk/bounds.hpp"
#include "spectraltk/spectrum.hpp"
#include "spectraltk/walk.hpp"

using namespace spectraltk;

namespace {

struct Fixture {
  WeightedGraph g;
  Spectrum s;
  explicit Fixture(WeightedGraph graph)
      : g(std::move(graph)), s(compute_spectrum(g)) {}
  WalkKernel kernel() const { return WalkKernel(g, s); }
};

}  // namespace

TEST_CASE("return probabilities: closed forms") {
  const Fixture k2(make_complete(2));
  CHECK(return_probability(k2.kernel(), 0, 0) == doctest::Approx(1.0));
  CHECK(return_probability(k2.kernel(), 0, 1) == doctest::Approx(0.5));
  CHECK(return_probability(k2.kernel(), 0, 5) == doctest::Approx(0.5));

  const Fixture c4(make_cycle(4));
  // p_t(x,x) = (1/4)(1 + 2 (1/2)^t + 0^t)
  CHECK(return_probability(c4.kernel(), 0, 2) == doctest::Approx(3.0 / 8.0));
  CHECK(return_probability(c4.kernel(), 0, 3) == doctest::Approx(5.0 / 16.0));
}

TEST_CASE("transition probabilities: closed forms and stochasticity") {
  const Fixture c4(make_cycle(4));
  const WalkKernel k = c4.kernel();
  CHECK(transition_probability(k, 0, 2, 0) == doctest::Approx(0.0));
  CHECK(transition_probability(k, 0, 1, 1) == doctest::Approx(0.25));
  CHECK(transition_probability(k, 0, 1, 7) == doctest::Approx(0.25));
  CHECK(transition_probability(k, 0, 2, 3) == doctest::Approx(3.0 / 16.0));

  for (const auto& g : corpus::up_to(16)) {
    const Fixture f(g);
    for (long long t : {0LL, 1LL, 3LL, 8LL}) {
      for (int x = 0; x < g.num_vertices(); x += 3) {
        double row = 0.0;
        for (int y = 0; y < g.num_vertices(); ++y)
          row += transition_probability(f.kernel(), x, y, t);
        CHECK(row == doctest::Approx(1.0).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("reversibility: pi(x) p_t(x,y) = pi(y) p_t(y,x)") {
  for (const auto& g : corpus::up_to(10)) {
    const Fixture f(g);
    for (long long t : {1LL, 4LL})
      for (int x = 0; x < g.num_vertices(); ++x)
        for (int y = x + 1; y < g.num_vertices(); ++y)
          CHECK(std::abs(g.stationary(x) *
                             transition_probability(f.kernel(), x, y, t) -
                         g.stationary(y) *
                             transition_probability(f.kernel(), y, x, t)) <=
                1e-10);
  }
}

TEST_CASE("heat kernel values") {
  const Fixture k2(make_complete(2));
  for (double t : {0.0, 0.5, 1.0, 3.0})
    CHECK(heat_return_probability(k2.kernel(), 0, t) ==
          doctest::Approx(0.5 + 0.5 * std::exp(-2.0 * t)));
  for (const auto& g : corpus::up_to(10)) {
    const Fixture f(g);
    for (int x = 0; x < g.num_vertices(); ++x) {
      CHECK(heat_return_probability(f.kernel(), x, 0.0) == doctest::Approx(1.0));
      CHECK(heat_return_probability(f.kernel(), x, 2.5) >=
            g.stationary(x) - 1e-12);
    }
  }
}

TEST_CASE("return probability is nonincreasing and dominated by the heat kernel") {
  for (const auto& g : corpus::up_to(16)) {
    const Fixture f(g);
    for (int x = 0; x < g.num_vertices(); x += 2) {
      double prev = 1.0;
      for (long long t = 1; t <= 32; ++t) {
        const double pt = return_probability(f.kernel(), x, t);
        CHECK(pt <= prev + 1e-12);
        CHECK(pt < heat_return_probability(f.kernel(), x, t / 2.0) + 1e-12);
        prev = pt;
      }
    }
  }
}

TEST_CASE("trace identity against the spectral measure") {
  // (1/n)(sum_x p_t(x,x) - 1) = (t/2) int (1 - l/2)^{t-1} dmu*(l), as a finite
  // sum over atoms evaluated by the layer-cake formula over eigenvalues
  for (const auto& g : corpus::up_to(16)) {
    const Fixture f(g);
    const int n = g.num_vertices();
    for (long long t : {1LL, 2LL, 7LL, 32LL, 64LL}) {
      double lhs = -1.0;
      for (int x = 0; x < n; ++x) lhs += return_probability(f.kernel(), x, t);
      lhs /= n;
      double rhs = 0.0;
      for (int j = 1; j < n; ++j)
        rhs += std::pow(1.0 - f.s.eigenvalues[j] / 2.0, static_cast<double>(t));
      rhs /= n;
      CHECK(std::abs(lhs - rhs) <= 1e-8);
    }
  }
}

TEST_CASE("monte carlo return estimates") {
  const WeightedGraph k2 = make_complete(2);
  const MonteCarloEstimate a = monte_carlo_return(k2, 0, 1, 100000, 42);
  CHECK(std::abs(a.estimate - 0.5) <= 0.01);
  CHECK(a.half_width == doctest::Approx(std::sqrt(std::log(40.0) / 200000.0)));

  CHECK(monte_carlo_return(k2, 0, 0, 100, 1).estimate == doctest::Approx(1.0));

  const WeightedGraph c4 = make_cycle(4);
  const MonteCarloEstimate b = monte_carlo_return(c4, 0, 2, 100000, 42);
  CHECK(std::abs(b.estimate - 3.0 / 8.0) <= 0.01);
}

TEST_CASE("monte carlo fan-out merges to the single-threaded value") {
  const WeightedGraph g = make_cycle(8);
  const MonteCarloEstimate one = monte_carlo_return(g, 0, 6, 20000, 7, 1);
  const MonteCarloEstimate four = monte_carlo_return(g, 0, 6, 20000, 7, 4);
  CHECK(one.estimate == four.estimate);
}

TEST_CASE("mixing time examples") {
  const Fixture k2(make_complete(2));
  CHECK(l2_mixing_time(k2.kernel(), 0.5) == 1);
  CHECK(l2_mixing_time(k2.kernel(), 0.01) == 1);
  CHECK(linf_mixing_time(k2.kernel(), 0.25) == 1);

  const Fixture c4(make_cycle(4));
  CHECK(l2_mixing_time(c4.kernel(), 0.5) == 2);
  CHECK(linf_mixing_time(c4.kernel(), 0.25) == 3);

  // K_n: max_x p_2(x,x)/pi(x) - 1 = (n-2)^2/(4(n-1)), <= 1 only up to n = 6
  for (int n : {4, 5, 6}) {
    const Fixture kn(make_complete(n));
    CHECK(l2_mixing_time(kn.kernel(), 1.0) == 1);
  }
  for (int n : {8, 16}) {
    const Fixture kn(make_complete(n));
    CHECK(l2_mixing_time(kn.kernel(), 1.0) == 2);
  }

  CHECK_THROWS_AS(l2_mixing_time(c4.kernel(), 0.0), std::invalid_argument);
}

TEST_CASE("mixing equivalence ceil(tau_inf/2) = tau2(sqrt(eps))") {
  for (const auto& g : corpus::up_to(16)) {
    const Fixture f(g);
    for (double eps : {1.0 / 16.0, 0.25, 1.0}) {
      const long long ti = linf_mixing_time(f.kernel(), eps);
      const long long t2 = l2_mixing_time(f.kernel(), std::sqrt(eps));
      CHECK((ti + 1) / 2 == t2);
    }
  }
}

TEST_CASE("mixing report witness attains the max at tau_inf - 1") {
  const Fixture c4(make_cycle(4));
  const MixingReport r = mixing_report(c4.kernel(), 0.25);
  CHECK(r.tau_inf == 3);
  // the witness pair must still violate the threshold one step earlier
  const double v = transition_probability(c4.kernel(), r.witness.first,
                                          r.witness.second, r.tau_inf - 1) /
                       c4.g.stationary(r.witness.second) -
                   1.0;
  CHECK(std::abs(v) > 0.25);
}

TEST_CASE("continuous-time L2 mixing: K2 closed form") {
  const Fixture k2(make_complete(2));
  CHECK(continuous_l2_mixing_time(k2.kernel(), std::exp(-1.0)) ==
        doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("reverse spectral bounds from return probabilities") {
  const Fixture c4(make_cycle(4));
  const MeasureReturnBounds b = measure_return_bounds(c4.kernel(), 0, 1.0);
  CHECK(b.lhs == doctest::Approx(0.5));
  CHECK(b.rhs_discrete == doctest::Approx(2.0 * std::exp(1.0) * (3.0 / 8.0 - 0.25)));
  CHECK(b.lhs < b.rhs_discrete);

  const Fixture k2(make_complete(2));
  const MeasureReturnBounds kb = measure_return_bounds(k2.kernel(), 0, 1.0);
  CHECK(kb.lhs == doctest::Approx(0.0));  // lambda_2 = 2 > 1

  for (const auto& g : corpus::up_to(16)) {
    const Fixture f(g);
    for (double delta : eigenvalue_avoiding_grid(f.s, 8)) {
      for (int x = 0; x < g.num_vertices(); ++x) {
        const MeasureReturnBounds mb = measure_return_bounds(f.kernel(), x, delta);
        if (delta <= 1.0)
          CHECK(mb.lhs - 1e-12 < mb.rhs_discrete);
        CHECK(mb.lhs <= mb.rhs_continuous + 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(measure_return_bounds(c4.kernel(), 0, 0.0), std::invalid_argument);
}
