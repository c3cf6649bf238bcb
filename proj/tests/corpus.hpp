#pragma once

// Shared graph corpus for unit and acceptance tests.
#include <vector>

#include "spectraltk/graph.hpp"

namespace corpus {

inline std::vector<spectraltk::WeightedGraph> full() {
  using namespace spectraltk;
  std::vector<WeightedGraph> out;
  for (int n : {3, 4, 5, 6, 7, 8, 9, 10, 16, 32, 64}) out.push_back(make_cycle(n));
  for (int n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 16, 32, 64}) out.push_back(make_path(n));
  for (int n : {2, 3, 4, 5, 6, 7, 8, 16, 32}) out.push_back(make_complete(n));
  for (int n : {9, 15, 30, 60}) out.push_back(make_barbell(n));
  out.push_back(make_clique_cycle(60, 3));
  out.push_back(make_clique_cycle(120, 4));
  out.push_back(make_torus({8, 8}));
  out.push_back(make_hypercube(4));
  for (int seed = 1; seed <= 20; ++seed)
    out.push_back(make_erdos_renyi(24, 0.15, seed));
  return out;
}

inline std::vector<spectraltk::WeightedGraph> up_to(int max_n) {
  std::vector<spectraltk::WeightedGraph> out;
  for (auto& g : full())
    if (g.num_vertices() <= max_n) out.push_back(std::move(g));
  return out;
}

}  // namespace corpus
