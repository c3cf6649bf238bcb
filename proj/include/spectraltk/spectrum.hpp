#pragma once

#include <string>
#include <vector>

#include "spectraltk/graph.hpp"
#include "spectraltk/matrix.hpp"

namespace spectraltk {

// Membership of an eigenvalue in [0, delta] is decided with this slack; the
// closed interval is ambiguous under floating point, so test grids must stay
// at least 1e-6 away from every eigenvalue.
inline constexpr double kThresholdTol = 1e-9;

struct Spectrum {
  std::vector<double> eigenvalues;  // 0 = l1 <= ... <= ln <= 2
  Matrix eigenvectors;              // column j = g_j, orthonormal
  double residual_tol;

  int n() const { return static_cast<int>(eigenvalues.size()); }
  double g(int x, int j) const { return eigenvectors(x, j); }
  // Number of eigenvalues <= delta (+ threshold slack).
  int count_below(double delta) const;
};

// L = I - D^{-1/2} A D^{-1/2}
Matrix normalized_laplacian(const WeightedGraph& g);
// D - A
Matrix combinatorial_laplacian(const WeightedGraph& g);

Spectrum eigendecompose(const Matrix& m);
Spectrum compute_spectrum(const WeightedGraph& g);

std::string spectrum_to_json(const Spectrum& s, bool with_vectors);

// --- spectral measures -------------------------------------------------------

struct VertexMeasure {
  double mu;       // mu_x(delta)
  double mu_star;  // mu_x(delta) - pi(x)
};
VertexMeasure vertex_measure(const Spectrum& s, const WeightedGraph& g, int x,
                             double delta);

struct GraphMeasure {
  double mu;       // |{k : l_k <= delta}| / n
  double mu_star;  // mu - 1/n
};
GraphMeasure graph_measure(const Spectrum& s, double delta);

// --- spectral embedding ------------------------------------------------------

struct SpectralEmbedding {
  double delta;
  int dims;                  // |{j : 0 < l_j <= delta}| (kernel skipped by index)
  std::vector<double> coords;  // row-major n x dims, f_j(x) = g_j(x)/sqrt(w(x))

  int n() const { return dims == 0 ? 0 : static_cast<int>(coords.size()) / dims; }
  const double* row(int x) const { return coords.data() + static_cast<std::size_t>(x) * dims; }
  double norm2(int x) const;            // ||F(x)||^2
  double dist2(int x, int y) const;     // ||F(x) - F(y)||^2
};

// Requires at least one eigenvalue in (0, delta].
SpectralEmbedding spectral_embedding(const Spectrum& s, const WeightedGraph& g,
                                     double delta);

double rayleigh_quotient(const WeightedGraph& g, const std::vector<double>& f);

// Energy of F over an edge subset (indices into g.edges()).
double embedding_energy(const WeightedGraph& g, const SpectralEmbedding& emb,
                        const std::vector<int>& edge_subset);
double embedding_energy_total(const WeightedGraph& g, const SpectralEmbedding& emb);
// Energy of the edges induced by a vertex set.
double embedding_energy_vertex_set(const WeightedGraph& g,
                                   const SpectralEmbedding& emb,
                                   const std::vector<int>& vertices);

// --- greedy ball selection ---------------------------------------------------

struct BallSelection {
  double delta;
  double alpha;
  int k;  // floor(mu*(delta) n / 2) + 1
  std::vector<int> centers;
  std::vector<std::vector<int>> balls;       // B_F(x_i, alpha ||F(x_i)||)
  std::vector<std::vector<int>> half_balls;  // radius alpha ||F(x_i)|| / 2
};

// Greedy argmax of mu*_x over surviving vertices; ties broken by lowest id.
// alpha in (0, 1/2); default 1/4.
BallSelection ball_selection(const WeightedGraph& g, const Spectrum& s,
                             double delta, double alpha = 0.25);

}  // namespace spectraltk
