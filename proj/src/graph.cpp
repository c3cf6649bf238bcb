#include "spectraltk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spectraltk/rng.hpp"

namespace spectraltk {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  adj_.assign(n_, {});
  degree_.assign(n_, 0.0);
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("loop edges are not allowed");
    if (!(e.w > 0.0)) throw std::invalid_argument("edge weight must be positive");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate edge");
    adj_[e.u].push_back({e.v, e.w});
    adj_[e.v].push_back({e.u, e.w});
    degree_[e.u] += e.w;
    degree_[e.v] += e.w;
    vol_total_ += 2.0 * e.w;
    if (e.w != 1.0) unit_weight_ = false;
  }
  for (auto& nbrs : adj_)
    std::sort(nbrs.begin(), nbrs.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });

  // connectivity via BFS from 0
  std::vector<char> vis(n_, 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (const Neighbor& nb : adj_[x])
      if (!vis[nb.to]) {
        vis[nb.to] = 1;
        ++reached;
        q.push(nb.to);
      }
  }
  connected_ = (reached == n_);

  regular_ = true;
  for (int x = 1; x < n_; ++x)
    if (std::abs(degree_[x] - degree_[0]) > 1e-12) {
      regular_ = false;
      break;
    }
}

double WeightedGraph::stationary(int x) const { return degree_[x] / vol_total_; }

std::vector<double> WeightedGraph::stationary() const {
  std::vector<double> pi(n_);
  for (int x = 0; x < n_; ++x) pi[x] = stationary(x);
  return pi;
}

void WeightedGraph::require_connected(const char* op) const {
  if (!connected_)
    throw std::invalid_argument(std::string(op) + " requires a connected graph");
}

// --- file format -------------------------------------------------------------

WeightedGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
  };

  int n = 0;
  long long m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!(ls >> n >> m)) fail("expected header 'n m'");
    break;
  }
  if (m < 0) throw std::invalid_argument("missing 'n m' header");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u >> v)) fail("expected 'u v [w]'");
    double w = 1.0;
    if (!ls.eof()) {
      if (!(ls >> w)) fail("malformed weight");
    }
    std::string trailing;
    if (ls >> trailing) fail("trailing tokens");
    if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex id out of range");
    if (u == v) fail("loop edge");
    if (!(w > 0.0)) fail("nonpositive weight");
    edges.push_back({u, v, w});
  }
  if (static_cast<long long>(edges.size()) != m)
    throw std::invalid_argument("edge count does not match header");

  std::set<std::pair<int, int>> seen;
  lineno = 0;
  for (const Edge& e : edges)
    if (!seen.insert(std::minmax(e.u, e.v)).second)
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
  return WeightedGraph(n, std::move(edges));
}

std::string serialize_edge_list(const WeightedGraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.w != 1.0) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", e.w);
      out << ' ' << buf;
    }
    out << '\n';
  }
  return out.str();
}

// --- generators ---------------------------------------------------------------

WeightedGraph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  WeightedGraph g(n, std::move(edges));
  g.family = "cycle";
  g.name = "cycle_" + std::to_string(n);
  g.vertex_transitive = true;
  g.growth_dimension = 1;
  return g;
}

WeightedGraph make_path(int n) {
  if (n < 2) throw std::invalid_argument("path requires n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  WeightedGraph g(n, std::move(edges));
  g.family = "path";
  g.name = "path_" + std::to_string(n);
  g.vertex_transitive = (n == 2);
  return g;
}

WeightedGraph make_complete(int n) {
  if (n < 2) throw std::invalid_argument("complete requires n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  WeightedGraph g(n, std::move(edges));
  g.family = "complete";
  g.name = "complete_" + std::to_string(n);
  g.vertex_transitive = true;
  g.growth_dimension = 1;
  return g;
}

WeightedGraph make_barbell(int n) {
  if (n < 8) throw std::invalid_argument("barbell requires n >= 8");
  const int c = n / 3;              // clique size
  const int bridge = n - 2 * c;     // path vertices between the cliques
  std::vector<Edge> edges;
  auto clique = [&](int base) {
    for (int i = 0; i < c; ++i)
      for (int j = i + 1; j < c; ++j) edges.push_back({base + i, base + j, 1.0});
  };
  clique(0);
  clique(c);
  // bridge vertices are 2c .. 2c+bridge-1, attached to vertex c-1 and vertex c
  int prev = c - 1;
  for (int i = 0; i < bridge; ++i) {
    edges.push_back({prev, 2 * c + i, 1.0});
    prev = 2 * c + i;
  }
  edges.push_back({prev, c, 1.0});
  WeightedGraph g(n, std::move(edges));
  g.family = "barbell";
  g.name = "barbell_" + std::to_string(n);
  return g;
}

WeightedGraph make_clique_cycle(int n, int k) {
  if (k < 2) throw std::invalid_argument("clique_cycle requires k >= 2");
  if (6 * k >= n) throw std::invalid_argument("clique_cycle requires k < n/6");
  const int s = (2 * n) / (3 * k);      // clique size
  const int len = n / (3 * k);          // bridge length in edges
  int internal = len - 1;               // interior vertices per bridge
  int used = k * s + k * internal;
  int leftover = n - used;              // appended to the last bridge
  if (s < 2 || len < 1 || leftover < 0)
    throw std::invalid_argument("clique_cycle parameters out of range");

  std::vector<Edge> edges;
  std::vector<int> clique_base(k);
  int next = 0;
  for (int i = 0; i < k; ++i) {
    clique_base[i] = next;
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b)
        edges.push_back({next + a, next + b, 1.0});
    next += s;
  }
  for (int i = 0; i < k; ++i) {
    int from = clique_base[i] + s - 1;          // exit vertex of clique i
    int to = clique_base[(i + 1) % k];          // entry vertex of clique i+1
    int interior = internal + (i == k - 1 ? leftover : 0);
    int prev = from;
    for (int a = 0; a < interior; ++a) {
      edges.push_back({prev, next, 1.0});
      prev = next++;
    }
    edges.push_back({prev, to, 1.0});
  }
  if (next != n) throw std::logic_error("clique_cycle vertex accounting");
  WeightedGraph g(n, std::move(edges));
  g.family = "clique_cycle";
  g.name = "clique_cycle_" + std::to_string(n) + "_" + std::to_string(k);
  g.family_k = k;
  return g;
}

WeightedGraph make_torus(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("torus requires dimensions");
  long long n = 1;
  for (int d : dims) {
    if (d < 3) throw std::invalid_argument("torus dimensions must be >= 3");
    n *= d;
  }
  if (n > 100000) throw std::invalid_argument("torus too large");
  auto index = [&](const std::vector<int>& coord) {
    long long idx = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + coord[i];
    return static_cast<int>(idx);
  };
  std::vector<Edge> edges;
  std::vector<int> coord(dims.size(), 0);
  for (long long v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < dims.size(); ++i) {
      std::vector<int> nb = coord;
      nb[i] = (coord[i] + 1) % dims[i];
      int u = static_cast<int>(v), w = index(nb);
      if (u < w)
        edges.push_back({u, w, 1.0});
      else
        edges.push_back({w, u, 1.0});
    }
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
      if (++coord[i] < dims[i]) break;
      coord[i] = 0;
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const Edge& a, const Edge& b) {
                            return a.u == b.u && a.v == b.v;
                          }),
              edges.end());
  WeightedGraph g(static_cast<int>(n), std::move(edges));
  g.family = "torus";
  std::string nm = "torus";
  for (int d : dims) nm += "_" + std::to_string(d);
  g.name = nm;
  g.vertex_transitive = true;
  g.growth_dimension = static_cast<int>(dims.size());
  return g;
}

WeightedGraph make_hypercube(int d) {
  if (d < 1 || d > 16) throw std::invalid_argument("hypercube requires 1 <= d <= 16");
  int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b) {
      int u = v ^ (1 << b);
      if (v < u) edges.push_back({v, u, 1.0});
    }
  WeightedGraph g(n, std::move(edges));
  g.family = "hypercube";
  g.name = "hypercube_" + std::to_string(d);
  g.vertex_transitive = true;
  g.growth_dimension = d;
  return g;
}

WeightedGraph make_erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 2 || p <= 0.0 || p > 1.0)
    throw std::invalid_argument("erdos_renyi requires n >= 2 and p in (0,1]");
  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    CounterRng rng(seed + attempt * 0x9E3779B97F4A7C15ull);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.uniform() < p) edges.push_back({i, j, 1.0});
    WeightedGraph g(n, std::move(edges));
    if (g.connected()) {
      g.family = "erdos_renyi";
      g.name = "er_" + std::to_string(n) + "_" + std::to_string(seed);
      return g;
    }
  }
  throw std::runtime_error("could not sample a connected G(n,p)");
}

WeightedGraph generate(const std::string& kind, int n, int k,
                       const std::vector<int>& dims, double p,
                       std::uint64_t seed) {
  if (kind == "cycle") return make_cycle(n);
  if (kind == "path") return make_path(n);
  if (kind == "complete") return make_complete(n);
  if (kind == "barbell") return make_barbell(n);
  if (kind == "clique_cycle") return make_clique_cycle(n, k);
  if (kind == "torus") return make_torus(dims);
  if (kind == "hypercube") return make_hypercube(n);
  if (kind == "erdos_renyi") return make_erdos_renyi(n, p, seed);
  throw std::invalid_argument("unknown graph family: " + kind);
}

// --- metric primitives ---------------------------------------------------------

std::vector<int> distances_from(const WeightedGraph& g, int x) {
  g.require_connected("distances_from");
  std::vector<int> dist(g.num_vertices(), -1);
  std::queue<int> q;
  dist[x] = 0;
  q.push(x);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const Neighbor& nb : g.neighbors(v))
      if (dist[nb.to] < 0) {
        dist[nb.to] = dist[v] + 1;
        q.push(nb.to);
      }
  }
  return dist;
}

BallVolume ball_volume(const std::vector<int>& dist, const WeightedGraph& g,
                       double r) {
  const int rr = static_cast<int>(std::floor(r));
  BallVolume b{0, 0.0};
  for (int y = 0; y < g.num_vertices(); ++y)
    if (dist[y] <= rr) {
      ++b.count;
      b.vol += g.degree(y);
    }
  return b;
}

BallVolume ball_volume(const WeightedGraph& g, int x, double r) {
  return ball_volume(distances_from(g, x), g, r);
}

int eccentricity(const WeightedGraph& g, int x) {
  auto d = distances_from(g, x);
  return *std::max_element(d.begin(), d.end());
}

int diameter(const WeightedGraph& g) {
  int best = 0;
  for (int x = 0; x < g.num_vertices(); ++x)
    best = std::max(best, eccentricity(g, x));
  return best;
}

}  // namespace spectraltk
