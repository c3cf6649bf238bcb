#include "spectraltk/resistance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "spectraltk/spectrum.hpp"

namespace spectraltk {

namespace {

// Rational inverse of the Laplacian grounded at vertex n-1; exact when every
// weight is representable (weights are parsed doubles, hence dyadic rationals).
std::vector<std::vector<mpq_class>> grounded_inverse_exact(const WeightedGraph& g) {
  const int n = g.num_vertices() - 1;
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n, 0));
  for (const Edge& e : g.edges()) {
    mpq_class w(e.w);
    w.canonicalize();
    if (e.u < n) a[e.u][e.u] += w;
    if (e.v < n) a[e.v][e.v] += w;
    if (e.u < n && e.v < n) {
      a[e.u][e.v] -= w;
      a[e.v][e.u] -= w;
    }
  }
  for (int i = 0; i < n; ++i) a[i][n + i] = 1;

  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("grounded laplacian is singular");
    std::swap(a[col], a[piv]);
    const mpq_class inv = 1 / a[col][col];
    for (int j = col; j < 2 * n; ++j) a[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (int j = col; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

// Moore-Penrose pseudo-inverse of the combinatorial Laplacian via the dense
// eigensolver; used above the exact-arithmetic size cutoff.
std::vector<std::vector<double>> laplacian_pinv(const WeightedGraph& g) {
  const int n = g.num_vertices();
  EigenDecomposition d = jacobi_eigensolve(combinatorial_laplacian(g));
  std::vector<std::vector<double>> pinv(n, std::vector<double>(n, 0.0));
  for (int j = 0; j < n; ++j) {
    if (d.values[j] < 1e-9 * n) continue;  // kernel
    const double inv = 1.0 / d.values[j];
    for (int i = 0; i < n; ++i) {
      const double vij = d.vectors(i, j) * inv;
      for (int k = 0; k < n; ++k) pinv[i][k] += vij * d.vectors(k, j);
    }
  }
  return pinv;
}

constexpr int kExactCutoff = 64;

std::vector<std::vector<double>> resistance_matrix_impl(const WeightedGraph& g) {
  g.require_connected("effective resistance");
  const int n = g.num_vertices();
  std::vector<std::vector<double>> r(n, std::vector<double>(n, 0.0));
  if (n <= kExactCutoff) {
    auto inv = grounded_inverse_exact(g);
    auto entry = [&](int i, int j) -> mpq_class {
      if (i == n - 1 || j == n - 1) return 0;
      return inv[i][j];
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const mpq_class rij = entry(i, i) + entry(j, j) - 2 * entry(i, j);
        r[i][j] = r[j][i] = rij.get_d();
      }
  } else {
    auto pinv = laplacian_pinv(g);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        r[i][j] = r[j][i] = pinv[i][i] + pinv[j][j] - 2 * pinv[i][j];
  }
  return r;
}

}  // namespace

double effective_resistance(const WeightedGraph& g, int s, int t) {
  g.require_connected("effective resistance");
  if (s == t) return 0.0;
  const int n = g.num_vertices();
  if (s < 0 || s >= n || t < 0 || t >= n)
    throw std::invalid_argument("vertex id out of range");
  if (n <= kExactCutoff) {
    // ground at t: R_eff(s,t) = (L_t^{-1})_{ss} after relabeling t to the end
    std::vector<int> relabel(n);
    for (int i = 0, next = 0; i < n; ++i)
      relabel[i] = (i == t) ? n - 1 : next++;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
      edges.push_back({relabel[e.u], relabel[e.v], e.w});
    WeightedGraph h(n, std::move(edges));
    auto inv = grounded_inverse_exact(h);
    return inv[relabel[s]][relabel[s]].get_d();
  }
  auto pinv = laplacian_pinv(g);
  return pinv[s][s] + pinv[t][t] - 2 * pinv[s][t];
}

std::vector<std::vector<double>> resistance_matrix(const WeightedGraph& g) {
  return resistance_matrix_impl(g);
}

ResistanceProfile resistance_profile(const WeightedGraph& g) {
  const auto r = resistance_matrix_impl(g);
  const int n = g.num_vertices();
  ResistanceProfile p;
  p.r_diam_per_vertex.resize(n);
  p.commute_per_vertex.resize(n);
  p.r_diam = 0.0;
  for (int x = 0; x < n; ++x) {
    double mx = 0.0;
    for (int y = 0; y < n; ++y) mx = std::max(mx, r[x][y]);
    p.r_diam_per_vertex[x] = mx;
    p.commute_per_vertex[x] = g.vol_total() * mx;
    p.r_diam = std::max(p.r_diam, mx);
  }
  p.commute_max = g.vol_total() * p.r_diam;
  return p;
}

}  // namespace spectraltk
