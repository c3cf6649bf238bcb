#include "spectraltk/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace spectraltk {

int Spectrum::count_below(double delta) const {
  int c = 0;
  for (double l : eigenvalues)
    if (l <= delta + kThresholdTol) ++c;
  return c;
}

Matrix normalized_laplacian(const WeightedGraph& g) {
  const int n = g.num_vertices();
  Matrix m = Matrix::identity(n);
  for (const Edge& e : g.edges()) {
    const double v = e.w / std::sqrt(g.degree(e.u) * g.degree(e.v));
    m(e.u, e.v) -= v;
    m(e.v, e.u) -= v;
  }
  return m;
}

Matrix combinatorial_laplacian(const WeightedGraph& g) {
  const int n = g.num_vertices();
  Matrix m(n, n);
  for (const Edge& e : g.edges()) {
    m(e.u, e.u) += e.w;
    m(e.v, e.v) += e.w;
    m(e.u, e.v) -= e.w;
    m(e.v, e.u) -= e.w;
  }
  return m;
}

Spectrum eigendecompose(const Matrix& m) {
  EigenDecomposition d = jacobi_eigensolve(m);
  Spectrum s;
  s.eigenvalues = std::move(d.values);
  s.eigenvectors = std::move(d.vectors);
  s.residual_tol = d.residual_tol;
  return s;
}

Spectrum compute_spectrum(const WeightedGraph& g) {
  g.require_connected("spectrum");
  if (g.num_vertices() > 2048)
    throw std::invalid_argument("dense eigensolve is limited to n <= 2048");
  Spectrum s = eigendecompose(normalized_laplacian(g));
  // pin the kernel: l1 = 0 with eigenvector proportional to sqrt(pi)
  s.eigenvalues[0] = 0.0;
  double norm = 0.0;
  for (int x = 0; x < g.num_vertices(); ++x) norm += g.degree(x);
  for (int x = 0; x < g.num_vertices(); ++x)
    s.eigenvectors(x, 0) = std::sqrt(g.degree(x) / norm);
  for (double& l : s.eigenvalues) {
    if (l < 0.0 && l > -1e-9) l = 0.0;
    if (l > 2.0 && l < 2.0 + 1e-9) l = 2.0;
  }
  return s;
}

std::string spectrum_to_json(const Spectrum& s, bool with_vectors) {
  nlohmann::json j;
  j["schema"] = "spectrum/v1";
  j["n"] = s.n();
  j["eigenvalues"] = s.eigenvalues;
  j["residual_tol"] = s.residual_tol;
  if (with_vectors) {
    std::vector<std::vector<double>> vecs(s.n(), std::vector<double>(s.n()));
    for (int j2 = 0; j2 < s.n(); ++j2)
      for (int x = 0; x < s.n(); ++x) vecs[j2][x] = s.g(x, j2);
    j["eigenvectors"] = vecs;
  }
  return j.dump(2) + "\n";
}

// --- spectral measures -------------------------------------------------------

VertexMeasure vertex_measure(const Spectrum& s, const WeightedGraph& g, int x,
                             double delta) {
  if (delta < 0.0 || delta > 2.0)
    throw std::invalid_argument("delta must lie in [0, 2]");
  double mu = 0.0;
  for (int j = 0; j < s.n(); ++j)
    if (s.eigenvalues[j] <= delta + kThresholdTol) mu += s.g(x, j) * s.g(x, j);
  return {mu, mu - g.stationary(x)};
}

GraphMeasure graph_measure(const Spectrum& s, double delta) {
  const double mu = static_cast<double>(s.count_below(delta)) / s.n();
  return {mu, mu - 1.0 / s.n()};
}

// --- spectral embedding ------------------------------------------------------

double SpectralEmbedding::norm2(int x) const {
  const double* r = row(x);
  double v = 0.0;
  for (int j = 0; j < dims; ++j) v += r[j] * r[j];
  return v;
}

double SpectralEmbedding::dist2(int x, int y) const {
  const double *rx = row(x), *ry = row(y);
  double v = 0.0;
  for (int j = 0; j < dims; ++j) {
    const double d = rx[j] - ry[j];
    v += d * d;
  }
  return v;
}

SpectralEmbedding spectral_embedding(const Spectrum& s, const WeightedGraph& g,
                                     double delta) {
  if (!(delta > 0.0) || delta > 2.0)
    throw std::invalid_argument("delta must lie in (0, 2]");
  const int n = s.n();
  std::vector<int> idx;
  for (int j = 1; j < n; ++j)  // kernel skipped by index
    if (s.eigenvalues[j] <= delta + kThresholdTol) idx.push_back(j);
  if (idx.empty())
    throw std::invalid_argument("no eigenvalue in (0, delta]; embedding is trivial");
  SpectralEmbedding emb;
  emb.delta = delta;
  emb.dims = static_cast<int>(idx.size());
  emb.coords.resize(static_cast<std::size_t>(n) * emb.dims);
  for (int x = 0; x < n; ++x) {
    const double inv = 1.0 / std::sqrt(g.degree(x));
    for (int j = 0; j < emb.dims; ++j)
      emb.coords[static_cast<std::size_t>(x) * emb.dims + j] = s.g(x, idx[j]) * inv;
  }
  return emb;
}

double rayleigh_quotient(const WeightedGraph& g, const std::vector<double>& f) {
  double num = 0.0, den = 0.0;
  for (const Edge& e : g.edges()) {
    const double d = f[e.u] - f[e.v];
    num += e.w * d * d;
  }
  for (int x = 0; x < g.num_vertices(); ++x) den += g.degree(x) * f[x] * f[x];
  if (den == 0.0) throw std::invalid_argument("rayleigh quotient of the zero function");
  return num / den;
}

double embedding_energy(const WeightedGraph& g, const SpectralEmbedding& emb,
                        const std::vector<int>& edge_subset) {
  double e = 0.0;
  for (int i : edge_subset) {
    const Edge& ed = g.edges()[i];
    e += ed.w * emb.dist2(ed.u, ed.v);
  }
  return e;
}

double embedding_energy_total(const WeightedGraph& g, const SpectralEmbedding& emb) {
  double e = 0.0;
  for (const Edge& ed : g.edges()) e += ed.w * emb.dist2(ed.u, ed.v);
  return e;
}

double embedding_energy_vertex_set(const WeightedGraph& g,
                                   const SpectralEmbedding& emb,
                                   const std::vector<int>& vertices) {
  std::vector<char> in(g.num_vertices(), 0);
  for (int v : vertices) in[v] = 1;
  double e = 0.0;
  for (const Edge& ed : g.edges())
    if (in[ed.u] && in[ed.v]) e += ed.w * emb.dist2(ed.u, ed.v);
  return e;
}

// --- greedy ball selection ---------------------------------------------------

BallSelection ball_selection(const WeightedGraph& g, const Spectrum& s,
                             double delta, double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::invalid_argument("alpha must lie in (0, 1/2)");
  const int n = g.num_vertices();
  BallSelection sel;
  sel.delta = delta;
  sel.alpha = alpha;
  const GraphMeasure gm = graph_measure(s, delta);
  sel.k = static_cast<int>(std::floor(gm.mu_star * n / 2.0)) + 1;

  if (s.count_below(delta) < 2) {
    // F == 0: one ball covering everything
    sel.k = 1;
    sel.centers = {0};
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    sel.balls = {all};
    sel.half_balls = {all};
    return sel;
  }

  const SpectralEmbedding emb = spectral_embedding(s, g, delta);
  std::vector<double> mu_star(n);
  for (int x = 0; x < n; ++x)
    mu_star[x] = vertex_measure(s, g, x, delta).mu_star;

  std::vector<char> removed(n, 0);
  for (int i = 0; i < sel.k; ++i) {
    int best = -1;
    for (int x = 0; x < n; ++x)
      if (!removed[x] && (best < 0 || mu_star[x] > mu_star[best])) best = x;
    if (best < 0) throw std::logic_error("ball selection ran out of vertices");
    const double rad2 = alpha * alpha * emb.norm2(best);
    std::vector<int> ball, half;
    for (int y = 0; y < n; ++y) {
      const double d2 = emb.dist2(best, y);
      if (d2 <= rad2 + 1e-15) ball.push_back(y);
      if (d2 <= rad2 / 4.0 + 1e-15) half.push_back(y);
    }
    for (int y : ball) removed[y] = 1;
    sel.centers.push_back(best);
    sel.balls.push_back(std::move(ball));
    sel.half_balls.push_back(std::move(half));
  }
  return sel;
}

}  // namespace spectraltk
