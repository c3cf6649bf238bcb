#include "spectraltk/trees.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace spectraltk {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

void require_unweighted(const WeightedGraph& g, const char* op) {
  if (!g.unit_weight())
    throw std::invalid_argument(std::string(op) + " requires unit edge weights");
}

}  // namespace

std::uint64_t brute_force_tree_count(const WeightedGraph& g) {
  g.require_connected("tree counting");
  require_unweighted(g, "brute-force tree counting");
  const int n = g.num_vertices();
  if (n > 10) throw std::invalid_argument("brute force is limited to n <= 10");
  if (n == 1) return 1;
  const int m = g.num_edges();
  const int k = n - 1;
  if (m < k) return 0;

  std::uint64_t count = 0;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    UnionFind uf(n);
    bool acyclic = true;
    for (int i : pick) {
      const Edge& e = g.edges()[i];
      if (!uf.unite(e.u, e.v)) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) ++count;  // n-1 acyclic edges on n vertices span
    // next k-combination of {0..m-1}
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

mpz_class spanning_tree_count_exact(const WeightedGraph& g) {
  g.require_connected("tree counting");
  require_unweighted(g, "exact tree counting");
  const int n = g.num_vertices();
  if (n > 256) throw std::invalid_argument("exact tree counting is limited to n <= 256");
  if (n == 1) return 1;
  // Bareiss fraction-free elimination on the grounded Laplacian minor.
  const int d = n - 1;
  std::vector<std::vector<mpz_class>> a(d, std::vector<mpz_class>(d, 0));
  for (const Edge& e : g.edges()) {
    if (e.u < d) a[e.u][e.u] += 1;
    if (e.v < d) a[e.v][e.v] += 1;
    if (e.u < d && e.v < d) {
      a[e.u][e.v] -= 1;
      a[e.v][e.u] -= 1;
    }
  }
  mpz_class prev = 1;
  for (int k = 0; k < d - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < d; ++r)
        if (a[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      for (auto& x : a[k]) x = -x;  // row swap flips the sign; matrix is PSD so fold it in
    }
    for (int i = k + 1; i < d; ++i)
      for (int j = k + 1; j < d; ++j) {
        mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return a[d - 1][d - 1];
}

double spanning_tree_count_weighted(const WeightedGraph& g) {
  return std::exp(log_tau_exact(g));
}

namespace {

// log-determinant of the grounded Laplacian minor (SPD), floating elimination.
double grounded_log_det(const WeightedGraph& g) {
  const int d = g.num_vertices() - 1;
  std::vector<std::vector<double>> a(d, std::vector<double>(d, 0.0));
  for (const Edge& e : g.edges()) {
    if (e.u < d) a[e.u][e.u] += e.w;
    if (e.v < d) a[e.v][e.v] += e.w;
    if (e.u < d && e.v < d) {
      a[e.u][e.v] -= e.w;
      a[e.v][e.u] -= e.w;
    }
  }
  double log_det = 0.0;
  for (int k = 0; k < d; ++k) {
    if (!(a[k][k] > 0.0)) throw std::runtime_error("grounded laplacian not SPD");
    log_det += std::log(a[k][k]);
    for (int i = k + 1; i < d; ++i) {
      const double f = a[i][k] / a[k][k];
      if (f == 0.0) continue;
      for (int j = k + 1; j < d; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return log_det;
}

}  // namespace

double log_tau_exact(const WeightedGraph& g) {
  g.require_connected("tree counting");
  if (g.num_vertices() == 1) return 0.0;
  if (g.unit_weight() && g.num_vertices() <= 256) {
    const mpz_class tau = spanning_tree_count_exact(g);
    signed long exp2;
    const double mant = mpz_get_d_2exp(&exp2, tau.get_mpz_t());
    return std::log(mant) + exp2 * std::log(2.0);
  }
  return grounded_log_det(g);
}

double log_tau_spectral(const WeightedGraph& g, const Spectrum& s) {
  g.require_connected("tree counting");
  double v = -std::log(2.0 * g.vol_total());
  for (int x = 0; x < g.num_vertices(); ++x) v += std::log(2.0 * g.degree(x));
  for (int j = 1; j < s.n(); ++j) v += std::log(s.eigenvalues[j] / 2.0);
  return v;
}

TruncatedLogTau log_tau_series_truncated(const WeightedGraph& g,
                                         const Spectrum& s, int r) {
  if (r < 2) throw std::invalid_argument("truncation radius must be at least 2");
  const int n = g.num_vertices();
  // ln(l_j/2) = ln(1 - mu_j) = -sum_t mu_j^t / t with mu_j the lazy eigenvalue,
  // so sum_{j>=2} ln(l_j/2) = -sum_t (tr P^t - 1)/t.
  double v = -std::log(2.0 * g.vol_total());
  for (int x = 0; x < n; ++x) v += std::log(2.0 * g.degree(x));
  for (long long t = 1; t < 2LL * r; ++t) {
    double trace = 0.0;
    for (int j = 1; j < s.n(); ++j)
      trace += std::pow(1.0 - s.eigenvalues[j] / 2.0, static_cast<double>(t));
    v -= trace / t;
  }
  return {v, 45.0 * n / std::cbrt(static_cast<double>(r))};
}

// --- oracle --------------------------------------------------------------------

namespace {

class InMemoryOracle final : public GraphOracle {
 public:
  InMemoryOracle(const WeightedGraph& g, std::uint64_t seed)
      : g_(&g), rng_(seed) {
    g.require_connected("local estimation");
    if (!g.unit_weight())
      throw std::invalid_argument("local estimation requires unit edge weights");
    // the degree average needs ln 2w(y) <= 2 ln n
    const double n = g.num_vertices();
    for (int y = 0; y < g.num_vertices(); ++y)
      if (2.0 * g.degree(y) > n * n)
        throw std::invalid_argument("degree exceeds the n^2/2 contract");
  }

  int random_vertex() override {
    ++queries_;
    return static_cast<int>(rng_.below(g_->num_vertices()));
  }

  int random_neighbor(int x) override {
    ++queries_;
    const auto& nbrs = g_->neighbors(x);
    return nbrs[rng_.below(nbrs.size())].to;
  }

  double degree(int x) override {
    ++queries_;
    return g_->degree(x);
  }

  int num_vertices() const override { return g_->num_vertices(); }
  long long num_edges() const override { return g_->num_edges(); }
  long long query_count() const override { return queries_; }

 private:
  const WeightedGraph* g_;
  CounterRng rng_;
  long long queries_ = 0;
};

}  // namespace

std::unique_ptr<GraphOracle> in_memory_oracle(const WeightedGraph& g,
                                              std::uint64_t seed) {
  return std::make_unique<InMemoryOracle>(g, seed);
}

std::string TreeEstimate::to_json() const {
  nlohmann::json j;
  j["schema"] = "tree-estimate/v1";
  j["value"] = value;
  j["r"] = r;
  j["s"] = s;
  j["num_samples"] = num_samples;
  j["degree_samples"] = degree_samples;
  j["epsilon"] = epsilon;
  j["delta_fail"] = delta_fail;
  j["queries_used"] = queries_used;
  j["seed"] = seed;
  return j.dump(2) + "\n";
}

TreeEstimate estimate_log_tau_local(GraphOracle& oracle, double epsilon,
                                    double delta_fail, std::uint64_t seed,
                                    const EstimatorOverrides& overrides) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (!(delta_fail > 0.0 && delta_fail < 1.0))
    throw std::invalid_argument("failure probability must lie in (0,1)");
  const long long n = oracle.num_vertices();
  const double ln_inv_delta = std::log(1.0 / delta_fail);

  TreeEstimate est;
  est.epsilon = epsilon;
  est.delta_fail = delta_fail;
  est.seed = seed;
  est.r = overrides.r.value_or(
      static_cast<long long>(std::ceil(90.0 / (epsilon * epsilon * epsilon))));
  double s = 0.0;
  for (long long t = 1; t < 2 * est.r; ++t) s += 1.0 / t;
  est.s = s;
  est.num_samples = overrides.num_samples.value_or(static_cast<long long>(
      std::ceil(64.0 * ln_inv_delta * s * s / (epsilon * epsilon))));
  const double ln_n = std::log(static_cast<double>(n));
  est.degree_samples = overrides.degree_samples.value_or(static_cast<long long>(
      std::ceil(256.0 * ln_inv_delta * ln_n * ln_n / (epsilon * epsilon))));

  // inverse-CDF table for P(t) = 1/(s t), 1 <= t < 2r
  std::vector<double> cdf(2 * est.r - 1);
  double acc = 0.0;
  for (long long t = 1; t < 2 * est.r; ++t) {
    acc += 1.0 / (s * t);
    cdf[t - 1] = acc;
  }
  cdf.back() = 1.0;

  CounterRng rng(seed);
  double y_sum = 0.0;
  for (long long i = 0; i < est.num_samples; ++i) {
    const double u = rng.uniform();
    const long long t =
        1 + (std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    const int start = oracle.random_vertex();
    int pos = start;
    for (long long step = 0; step < t; ++step)
      if (rng.coin()) pos = oracle.random_neighbor(pos);
    if (pos == start) y_sum += 1.0;
  }
  const double y_bar = y_sum / est.num_samples;

  // vertex ids for degree probes come from our own stream so the degree pass
  // spends exactly one oracle query per sample
  double w_sum = 0.0;
  for (long long i = 0; i < est.degree_samples; ++i) {
    const int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    w_sum += std::log(2.0 * oracle.degree(x));
  }
  const double w_bar = w_sum / est.degree_samples;

  est.value = -std::log(4.0 * static_cast<double>(oracle.num_edges())) / n +
              w_bar - s * y_bar + s / n;
  est.queries_used = oracle.query_count();
  return est;
}

}  // namespace spectraltk
