// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "spectraltk/bounds.hpp"
#include "spectraltk/rng.hpp"
#include "spectraltk/spectrum.hpp"
#include "spectraltk/trees.hpp"
#include "spectraltk/walk.hpp"

using namespace spectraltk;

namespace {

int failures = 0;

void report(int id, const char* what, bool ok, const std::string& detail = "") {
  std::printf("criterion %2d [%s] %s%s%s\n", id, ok ? "PASS" : "FAIL", what,
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++failures;
}

struct Entry {
  WeightedGraph g;
  Spectrum s;
};

std::vector<Entry> load_corpus() {
  std::vector<Entry> out;
  for (auto& g : corpus::full()) {
    Spectrum s = compute_spectrum(g);
    out.push_back({std::move(g), std::move(s)});
  }
  return out;
}

// 95% Hoeffding half-width for a mean of 'samples' values with range 'range'
double hoeffding(double range, double samples) {
  return range * std::sqrt(std::log(40.0) / (2.0 * samples));
}

}  // namespace

// --- criterion 1: cycle spectra --------------------------------------------

static void criterion1() {
  bool ok = true;
  std::string detail;
  for (int n = 3; n <= 64 && ok; ++n) {
    const Spectrum s = compute_spectrum(make_cycle(n));
    std::vector<double> expect;
    for (int k = 0; k < n; ++k)
      expect.push_back(1.0 - std::cos(2.0 * std::numbers::pi * k / n));
    std::sort(expect.begin(), expect.end());
    for (int j = 0; j < n; ++j)
      if (std::abs(s.eigenvalues[j] - expect[j]) > 1e-9) {
        ok = false;
        detail = "cycle n=" + std::to_string(n);
        break;
      }
  }
  report(1, "cycle spectra match 1 - cos(2 pi k / n)", ok, detail);
}

// --- criterion 2: three-way spanning-tree agreement --------------------------

static void criterion2(const std::vector<Entry>& corpus) {
  bool ok = true;
  std::string detail;
  for (const Entry& e : corpus) {
    if (!e.g.unit_weight()) continue;
    const int n = e.g.num_vertices();
    const double spectral = log_tau_spectral(e.g, e.s);
    if (n <= 10) {
      const std::uint64_t brute = brute_force_tree_count(e.g);
      const mpz_class kirchhoff = spanning_tree_count_exact(e.g);
      if (kirchhoff != mpz_class(static_cast<unsigned long>(brute)) ||
          std::abs(spectral - std::log(static_cast<double>(brute))) > 1e-8) {
        ok = false;
        detail = e.g.name;
      }
    } else if (n <= 256) {
      if (std::abs(log_tau_exact(e.g) - spectral) > 1e-6 * n) {
        ok = false;
        detail = e.g.name;
      }
    }
  }
  for (int n = 2; n <= 8; ++n) {
    mpz_class cayley = 1;
    for (int i = 0; i < n - 2; ++i) cayley *= n;
    if (spanning_tree_count_exact(make_complete(n)) != cayley) {
      ok = false;
      detail = "complete_" + std::to_string(n);
    }
  }
  report(2, "spanning trees: brute force = Kirchhoff = spectral", ok, detail);
}

// --- criterion 3: truncated series error bound --------------------------------

static void criterion3(const std::vector<Entry>& corpus) {
  bool ok = true;
  std::string detail;
  for (const Entry& e : corpus) {
    const double exact = log_tau_spectral(e.g, e.s);
    for (int r : {2, 8, 32, 128}) {
      const TruncatedLogTau t = log_tau_series_truncated(e.g, e.s, r);
      if (std::abs(t.value - exact) > t.error_bound) {
        ok = false;
        detail = e.g.name + " r=" + std::to_string(r);
      }
    }
  }
  report(3, "series truncation within 45 n / r^{1/3}", ok, detail);
}

// --- criterion 4: local estimator concentration --------------------------------

static void criterion4() {
  bool ok = true;
  std::string detail;
  for (const char* fam : {"cycle", "path"}) {
    const WeightedGraph g =
        std::string(fam) == "cycle" ? make_cycle(8) : make_path(8);
    const Spectrum s = compute_spectrum(g);
    const int n = g.num_vertices();
    const double exact = log_tau_exact(g) / n;

    EstimatorOverrides ov;
    ov.r = 60;
    ov.num_samples = 200000;
    ov.degree_samples = 1000;

    // run-time combined 95% bound: actual truncation deficit of the series at
    // this r, plus Hoeffding terms for the walk and degree sample means
    const double trunc =
        std::abs(log_tau_series_truncated(g, s, 60).value / n - exact);
    double s_sum = 0.0;
    for (int t = 1; t < 120; ++t) s_sum += 1.0 / t;
    double lo = 1e300, hi = -1e300;
    for (int x = 0; x < n; ++x) {
      lo = std::min(lo, std::log(2.0 * g.degree(x)));
      hi = std::max(hi, std::log(2.0 * g.degree(x)));
    }
    const double bound = trunc + s_sum * hoeffding(1.0, 200000.0) +
                         hoeffding(hi - lo, 1000.0);

    int hits = 0;
    bool budget_ok = true;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      auto oracle = in_memory_oracle(g, seed);
      const TreeEstimate est = estimate_log_tau_local(*oracle, 1.0, 0.5, seed, ov);
      if (std::abs(est.value - exact) <= bound) ++hits;
      if (est.queries_used > 2 * est.num_samples * est.r + est.degree_samples +
                                 est.num_samples)
        budget_ok = false;
    }
    if (hits < 45 || !budget_ok) {
      ok = false;
      detail = std::string(fam) + "_8: " + std::to_string(hits) +
               "/50 within bound" + (budget_ok ? "" : ", budget exceeded");
    }
  }
  report(4, "local estimator: 45/50 seeded runs within combined bound", ok, detail);
}

// --- criterion 5: bound suite zero failing rows --------------------------------

static void criterion5(const std::vector<Entry>& corpus) {
  bool ok = true;
  std::string detail;
  for (const Entry& e : corpus) {
    const BoundReport rep = run_bound_suite(e.g, e.s);
    if (!rep.all_pass()) {
      ok = false;
      for (const BoundRow& r : rep.rows)
        if (r.applicable && !r.pass) {
          detail = e.g.name + ": " + r.check + " " + r.params;
          break;
        }
    }
  }
  report(5, "bound suite passes with zero failing rows on the corpus", ok, detail);
}

// --- criterion 6: mixing equivalence and bounds ---------------------------------

static void criterion6(const std::vector<Entry>& corpus) {
  bool ok = true;
  std::string detail;
  for (const Entry& e : corpus) {
    const WalkKernel k(e.g, e.s);
    const int n = e.g.num_vertices();
    if (n <= 32) {
      for (double eps : {1.0 / 16.0, 0.25, 1.0}) {
        const long long ti = linf_mixing_time(k, eps);
        const long long t2 = l2_mixing_time(k, std::sqrt(eps));
        if ((ti + 1) / 2 != t2) {
          ok = false;
          detail = e.g.name + " eps mismatch";
        }
      }
    }
    if (e.g.unit_weight()) {
      const long long ti = linf_mixing_time(k, 0.25);
      if (ti > 8LL * n * n * n) {
        ok = false;
        detail = e.g.name + " cubic";
      }
      if (e.g.regular() && ti > 24LL * n * n) {
        ok = false;
        detail = e.g.name + " quadratic";
      }
    }
  }
  {
    const WeightedGraph c4 = make_cycle(4);
    const Spectrum s4 = compute_spectrum(c4);
    if (linf_mixing_time(WalkKernel(c4, s4), 0.25) != 3) {
      ok = false;
      detail = "C4 tau_inf != 3";
    }
    const WeightedGraph k2 = make_complete(2);
    const Spectrum s2 = compute_spectrum(k2);
    if (linf_mixing_time(WalkKernel(k2, s2), 0.25) != 1) {
      ok = false;
      detail = "K2 tau_inf != 1";
    }
  }
  report(6, "mixing equivalence and tau_inf upper bounds", ok, detail);
}

// --- criterion 7: sharpness of the asymptotics ----------------------------------

static void criterion7() {
  bool ok = true;
  std::string detail;
  for (int n : {30, 60}) {
    const WeightedGraph g = make_barbell(n);
    const double l2 = compute_spectrum(g).eigenvalues[1];
    if (l2 * n * n * n > 60.0) {
      ok = false;
      detail = g.name;
    }
  }
  for (auto [n, k] : {std::pair{60, 3}, std::pair{120, 4}}) {
    const WeightedGraph g = make_clique_cycle(n, k);
    const double lk = compute_spectrum(g).eigenvalues[k - 1];
    if (lk * std::pow(n, 3) / std::pow(k, 3) > 40.0) {
      ok = false;
      detail = g.name;
    }
  }
  for (int n : {16, 32, 64}) {
    const WeightedGraph g = make_cycle(n);
    const Spectrum s = compute_spectrum(g);
    if (linf_mixing_time(WalkKernel(g, s), 0.25) < n * n / 40.0) {
      ok = false;
      detail = g.name + " tau_inf below n^2/40";
    }
  }
  report(7, "sharpness: barbell/clique-cycle eigenvalues, cycle mixing", ok, detail);
}

// --- criterion 8: embedding invariant suite --------------------------------------

static void criterion8(const std::vector<Entry>& corpus) {
  bool ok = true;
  std::string detail;
  CounterRng rng(271828);
  auto fail = [&](const Entry& e, const char* what) {
    ok = false;
    if (detail.empty()) detail = e.g.name + ": " + what;
  };

  for (const Entry& e : corpus) {
    const int n = e.g.num_vertices();
    for (double delta : eigenvalue_avoiding_grid(e.s, 16)) {
      if (e.s.count_below(delta) < 2) continue;
      const SpectralEmbedding emb = spectral_embedding(e.s, e.g, delta);

      std::vector<double> mu_star(n);
      for (int x = 0; x < n; ++x)
        mu_star[x] = vertex_measure(e.s, e.g, x, delta).mu_star;

      // centering and the norm identity
      std::vector<double> center(emb.dims, 0.0);
      double mass_total = 0.0;
      for (int x = 0; x < n; ++x) {
        if (std::abs(e.g.degree(x) * emb.norm2(x) - mu_star[x]) > 1e-8)
          fail(e, "norm identity");
        for (int j = 0; j < emb.dims; ++j)
          center[j] += e.g.degree(x) * emb.row(x)[j];
        mass_total += e.g.degree(x) * emb.norm2(x);
      }
      for (double c : center)
        if (std::abs(c) > 1e-8) fail(e, "centering");

      // isotropy with 32 random unit vectors
      for (int trial = 0; trial < 32; ++trial) {
        std::vector<double> v(emb.dims);
        double norm = 0.0;
        for (double& vi : v) {
          const double u1 = rng.uniform() + 1e-300, u2 = rng.uniform();
          vi = std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
          norm += vi * vi;
        }
        norm = std::sqrt(norm);
        for (double& vi : v) vi /= norm;
        double mass = 0.0;
        for (int x = 0; x < n; ++x) {
          double dot = 0.0;
          for (int j = 0; j < emb.dims; ++j) dot += v[j] * emb.row(x)[j];
          mass += e.g.degree(x) * dot * dot;
        }
        if (std::abs(mass - 1.0) > 1e-8) fail(e, "isotropy");
      }

      // Rayleigh energy bound
      if (embedding_energy_total(e.g, emb) > delta * mass_total + 1e-8)
        fail(e, "rayleigh energy");

      // ball-mass bound at alpha in {1/4, 1/2}
      for (double alpha : {0.25, 0.5}) {
        const double cap = 1.0 / ((1.0 - 2.0 * alpha * alpha) *
                                  (1.0 - 2.0 * alpha * alpha));
        for (int x = 0; x < n; ++x) {
          const double rad2 = alpha * alpha * emb.norm2(x);
          double mass = 0.0;
          for (int y = 0; y < n; ++y)
            if (emb.dist2(x, y) <= rad2 + 1e-15) mass += mu_star[y];
          if (mass > cap + 1e-8) fail(e, "ball mass");
        }
      }

      // Ball-Selection structure
      const BallSelection sel = ball_selection(e.g, e.s, delta);
      const double mu_star_avg = graph_measure(e.s, delta).mu_star;
      std::vector<char> seen(n, 0);
      for (const auto& hb : sel.half_balls)
        for (int v : hb) {
          if (seen[v]) fail(e, "half-ball overlap");
          seen[v] = 1;
        }
      for (int c : sel.centers)
        if (mu_star[c] < mu_star_avg / 3.0 - 1e-9) fail(e, "light center");
    }
  }
  report(8, "embedding invariants and Ball-Selection structure", ok, detail);
}

// --- criterion 9: reverse spectral bounds -----------------------------------------

static void criterion9(const std::vector<Entry>& corpus) {
  bool ok = true;
  std::string detail;
  for (const Entry& e : corpus) {
    const WalkKernel k(e.g, e.s);
    for (double delta : eigenvalue_avoiding_grid(e.s, 16)) {
      for (int x = 0; x < e.g.num_vertices(); ++x) {
        const MeasureReturnBounds b = measure_return_bounds(k, x, delta);
        if (delta <= 1.0 && !(b.lhs - 1e-12 < b.rhs_discrete)) {
          ok = false;
          detail = e.g.name + " discrete x=" + std::to_string(x);
        }
        if (!(b.lhs <= b.rhs_continuous + 1e-12)) {
          ok = false;
          detail = e.g.name + " continuous x=" + std::to_string(x);
        }
      }
    }
  }
  report(9, "reverse bounds from return probabilities", ok, detail);
}

// --- criterion 10: constant evaluations --------------------------------------------

static void criterion10() {
  bool ok = true;
  const GrowthConstants gc = growth_constants(1.0, 1.0, 1.0, 4.0, 1.0);
  if (std::abs(gc.C - 4.0 * std::sqrt(1.5)) > 1e-10) ok = false;
  if (std::abs(gc.C_prime - 2.0 * std::sqrt(3.0 * std::numbers::pi)) > 1e-10)
    ok = false;
  if (std::abs(gamma_function(1.0) - 1.0) > 1e-10) ok = false;
  if (std::abs(gamma_function(5.0) - 24.0) > 1e-10) ok = false;
  if (std::abs(gamma_function(0.5) - std::sqrt(std::numbers::pi)) > 1e-10)
    ok = false;
  report(10, "growth constants and gamma evaluations", ok);
}

int main() {
  const std::vector<Entry> corpus = load_corpus();
  criterion1();
  criterion2(corpus);
  criterion3(corpus);
  criterion4();
  criterion5(corpus);
  criterion6(corpus);
  criterion7();
  criterion8(corpus);
  criterion9(corpus);
  criterion10();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
