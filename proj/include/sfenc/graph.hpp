#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace sfenc {

using Vertex = std::size_t;
using EdgeId = std::size_t;
/// Zero-based position of an edge in a vertex's ordering. The JSON format uses
/// one-based ports.
using Port = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Port port_u = 0;
  Port port_v = 0;
  /// epsilon_{u,v}: +1 when u is the head of the edge, -1 when it is the tail.
  int orientation = 1;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  Port port_at(Vertex w) const { return w == u ? port_u : port_v; }
  /// epsilon_{from, other(from)}.
  int orientation_from(Vertex from) const { return from == u ? orientation : -orientation; }
};

/// Edge as supplied by a caller; missing ports and orientations are filled in
/// by InteractionGraph::build.
struct EdgeInput {
  Vertex u = 0;
  Vertex v = 0;
  std::optional<Port> port_u;
  std::optional<Port> port_v;
  std::optional<int> orientation;
};

/// Walk in the graph. vertices[j] and vertices[j + 1] are joined by edges[j];
/// the edge is stored explicitly so parallel edges stay distinguishable.
struct Path {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool is_loop() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  Path reversed() const;
  /// Concatenation; requires back() of *this == front() of tail.
  Path then(const Path& tail) const;
};

/// Connected multigraph without self-loops. Every vertex carries an ordering of
/// its incident edges (ports 0..d-1, a bijection) and every edge an
/// orientation. Immutable once built.
class InteractionGraph {
 public:
  InteractionGraph() = default;

  /// Validating constructor; all ports and orientations must be present.
  InteractionGraph(std::size_t num_vertices, std::vector<Edge> edges);

  /// Builds from partially specified edges. Ports must be given for every edge
  /// or for none; the same holds for orientations. Defaults:
  ///  - ports at vertex i ascend by (neighbour index, insertion order);
  ///  - orientation follows an Eulerian walk when every degree is even (see
  ///    eulerian_orientation), otherwise epsilon_{ij} = +1 for i < j.
  static InteractionGraph build(std::size_t num_vertices, const std::vector<EdgeInput>& edges);
  static InteractionGraph from_pairs(std::size_t num_vertices,
                                     const std::vector<std::pair<Vertex, Vertex>>& pairs);

  std::size_t num_vertices() const { return incident_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::size_t degree(Vertex v) const { return incident_[v].size(); }
  /// Incident edges of v indexed by port.
  const std::vector<EdgeId>& incident(Vertex v) const { return incident_[v]; }
  /// N(v, p).
  Vertex neighbor(Vertex v, Port p) const { return edges_[incident_[v][p]].other(v); }

  bool all_degrees_even() const;
  /// Lowest-id edge joining a and b, if any.
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  std::vector<EdgeId> edges_between(Vertex a, Vertex b) const;

  /// Same edges with new port assignments (ports[e] = {port_u, port_v});
  /// orientation is recomputed with the default rule.
  InteractionGraph with_ports(const std::vector<std::pair<Port, Port>>& ports) const;
  /// Same edges and ports with explicit orientations.
  InteractionGraph with_orientations(const std::vector<int>& orientation) const;

  /// A uniformly random permutation of the ports at every vertex, default
  /// orientation.
  InteractionGraph with_random_ports(std::mt19937_64& rng) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

struct SpanningTree {
  std::vector<EdgeId> tree_edges;
  Vertex root = 0;
  /// parent_edge[v] is the tree edge towards the root (unset for the root).
  std::vector<std::optional<EdgeId>> parent_edge;
  std::vector<bool> in_tree;  // indexed by EdgeId
};

/// Breadth-first spanning tree from vertex 0, scanning edges in port order.
/// Throws StructuralError when the graph is disconnected.
SpanningTree spanning_tree(const InteractionGraph& g);

/// Tree path from the root to v.
Path root_path(const InteractionGraph& g, const SpanningTree& tree, Vertex v);

/// One loop per non-tree edge, in edge-id order: root -> u along the tree,
/// the edge u -> v, then v -> root along the tree.
std::vector<Path> fundamental_cycles(const InteractionGraph& g, const SpanningTree& tree);

/// Hierholzer walk from vertex 0 using every edge exactly once.
/// Throws PreconditionError if some degree is odd.
Path eulerian_cycle(const InteractionGraph& g);

/// True iff the graph minus any two vertices stays connected (m >= 4).
bool is_three_connected(const InteractionGraph& g);

std::size_t max_parallel_edges(const InteractionGraph& g);

bool is_connected_without(const InteractionGraph& g, const std::vector<bool>& removed);

/// Orientation for an even-degree graph: every step a -> b of the Eulerian
/// walk gets epsilon_{a,b} = +1, then the closing step is flipped if needed so
/// that the walk's loop operator equals +prod_i B_i for any local Majorana
/// encoding. The sign of that relation depends only on the port orders met
/// along the walk, not on the mode family.
std::vector<int> eulerian_orientation(const InteractionGraph& g);

/// Sign s in A(walk) = s * prod_i B_i for the current orientation and any
/// local Majorana encoding. Requires all degrees even.
int eulerian_loop_sign(const InteractionGraph& g, const Path& walk);

/// Named graphs with default ports and orientation.
InteractionGraph complete_graph(std::size_t m);
InteractionGraph cycle_graph(std::size_t m);
InteractionGraph octahedron_graph();

}  // namespace sfenc
