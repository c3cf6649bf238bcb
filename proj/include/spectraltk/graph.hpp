#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spectraltk {

struct Edge {
  int u;
  int v;
  double w;
};

struct Neighbor {
  int to;
  double w;
};

// Finite simple weighted graph. Vertex ids are dense integers 0..n-1 and
// neighbor lists are kept sorted by id so every downstream algorithm is
// deterministic.
class WeightedGraph {
 public:
  WeightedGraph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Neighbor>& neighbors(int x) const { return adj_[x]; }

  double degree(int x) const { return degree_[x]; }
  double vol_total() const { return vol_total_; }
  bool unit_weight() const { return unit_weight_; }
  bool connected() const { return connected_; }
  bool regular() const { return regular_; }

  // pi(x) = w(x)/vol(V)
  double stationary(int x) const;
  std::vector<double> stationary() const;

  void require_connected(const char* op) const;

  // Family metadata filled in by the generators; "custom" for parsed input.
  std::string family = "custom";
  std::string name = "custom";
  bool vertex_transitive = false;
  // Growth exponent used for the polynomial-growth corollary on transitive
  // members (cycle 1, torus #dims, hypercube d). 0 = not applicable.
  int growth_dimension = 0;
  int family_k = 0;  // clique count for clique_cycle

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adj_;
  std::vector<double> degree_;
  double vol_total_ = 0.0;
  bool unit_weight_ = true;
  bool connected_ = false;
  bool regular_ = false;
};

// --- file format -----------------------------------------------------------
//
// First line "n m", then m lines "u v [w]" with 0-based ids; weight defaults
// to 1 and is omitted by the serializer when it equals 1.

WeightedGraph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const WeightedGraph& g);

// --- generators -------------------------------------------------------------

WeightedGraph make_cycle(int n);
WeightedGraph make_path(int n);
WeightedGraph make_complete(int n);
// Two floor(n/3)-cliques joined by a path on the remaining vertices.
WeightedGraph make_barbell(int n);
// k cliques of size floor(2n/(3k)) joined cyclically by paths of length
// floor(n/(3k)); leftover vertices extend the last bridge. Requires k < n/6.
WeightedGraph make_clique_cycle(int n, int k);
WeightedGraph make_torus(const std::vector<int>& dims);
WeightedGraph make_hypercube(int d);
// Connected G(n,p); resamples deterministically from the seed until connected.
WeightedGraph make_erdos_renyi(int n, double p, std::uint64_t seed);

// Dispatch by family name ("cycle", "path", "complete", "barbell",
// "clique_cycle", "torus", "hypercube", "erdos_renyi").
WeightedGraph generate(const std::string& kind, int n, int k = 0,
                       const std::vector<int>& dims = {},
                       double p = 0.0, std::uint64_t seed = 0);

// --- metric primitives -------------------------------------------------------

// BFS hop distances (edge weights ignored).
std::vector<int> distances_from(const WeightedGraph& g, int x);

struct BallVolume {
  int count;    // N(x,r)
  double vol;   // vol(x,r)
};
BallVolume ball_volume(const WeightedGraph& g, int x, double r);
BallVolume ball_volume(const std::vector<int>& dist, const WeightedGraph& g,
                       double r);

int eccentricity(const WeightedGraph& g, int x);
int diameter(const WeightedGraph& g);

}  // namespace spectraltk
