#pragma once

#include <vector>

#include "spectraltk/graph.hpp"

namespace spectraltk {

// Effective resistance between one pair, via a grounded Laplacian solve.
// Exact rational elimination for n <= 64, floating solve with residual
// <= 1e-10 above.
double effective_resistance(const WeightedGraph& g, int s, int t);

// Full n x n matrix of pairwise effective resistances.
std::vector<std::vector<double>> resistance_matrix(const WeightedGraph& g);

struct ResistanceProfile {
  std::vector<double> r_diam_per_vertex;  // R_diam(x) = max_t R_eff(x,t)
  double r_diam;                          // max over pairs
  std::vector<double> commute_per_vertex; // vol(V) * R_diam(x)
  double commute_max;                     // vol(V) * R_diam
};

ResistanceProfile resistance_profile(const WeightedGraph& g);

}  // namespace spectraltk
