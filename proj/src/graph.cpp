#include "sfenc/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "sfenc/errors.hpp"

namespace sfenc {

Path Path::reversed() const {
  Path out;
  out.vertices.assign(vertices.rbegin(), vertices.rend());
  out.edges.assign(edges.rbegin(), edges.rend());
  return out;
}

Path Path::then(const Path& tail) const {
  if (vertices.empty()) return tail;
  if (tail.vertices.empty()) return *this;
  if (vertices.back() != tail.vertices.front()) {
    throw StructuralError("paths are not composable");
  }
  Path out = *this;
  out.vertices.insert(out.vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
  out.edges.insert(out.edges.end(), tail.edges.begin(), tail.edges.end());
  return out;
}

InteractionGraph::InteractionGraph(std::size_t num_vertices, std::vector<Edge> edges)
    : edges_(std::move(edges)), incident_(num_vertices) {
  if (num_vertices == 0) throw StructuralError("graph has no vertices");
  std::vector<std::size_t> degree(num_vertices, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u >= num_vertices || ed.v >= num_vertices) {
      throw StructuralError("edge " + std::to_string(e) + " references a vertex out of range");
    }
    if (ed.u == ed.v) throw StructuralError("edge " + std::to_string(e) + " is a self-loop");
    if (ed.orientation != 1 && ed.orientation != -1) {
      throw ValidationError("edge " + std::to_string(e) + " orientation must be +1 or -1");
    }
    ++degree[ed.u];
    ++degree[ed.v];
  }
  for (Vertex v = 0; v < num_vertices; ++v) {
    incident_[v].assign(degree[v], static_cast<EdgeId>(-1));
  }
  auto place = [&](Vertex v, Port p, EdgeId e) {
    if (p >= degree[v]) {
      throw ValidationError("port " + std::to_string(p + 1) + " at vertex " + std::to_string(v) +
                            " exceeds its degree " + std::to_string(degree[v]));
    }
    if (incident_[v][p] != static_cast<EdgeId>(-1)) {
      throw ValidationError("port " + std::to_string(p + 1) + " used twice at vertex " +
                            std::to_string(v));
    }
    incident_[v][p] = e;
  };
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    place(edges_[e].u, edges_[e].port_u, e);
    place(edges_[e].v, edges_[e].port_v, e);
  }
  if (!is_connected_without(*this, std::vector<bool>(num_vertices, false))) {
    throw StructuralError("interaction graph is not connected");
  }
}

InteractionGraph InteractionGraph::build(std::size_t num_vertices,
                                         const std::vector<EdgeInput>& inputs) {
  if (num_vertices == 0) throw StructuralError("graph has no vertices");
  const bool any_ports = std::any_of(inputs.begin(), inputs.end(),
                                     [](const EdgeInput& e) { return e.port_u || e.port_v; });
  const bool all_ports = std::all_of(inputs.begin(), inputs.end(),
                                     [](const EdgeInput& e) { return e.port_u && e.port_v; });
  if (any_ports && !all_ports) {
    throw ValidationError("ports must be given for every edge or for none");
  }
  const bool any_orient = std::any_of(inputs.begin(), inputs.end(),
                                      [](const EdgeInput& e) { return e.orientation.has_value(); });
  const bool all_orient = std::all_of(inputs.begin(), inputs.end(),
                                      [](const EdgeInput& e) { return e.orientation.has_value(); });
  if (any_orient && !all_orient) {
    throw ValidationError("orientations must be given for every edge or for none");
  }

  std::vector<Edge> edges(inputs.size());
  for (std::size_t e = 0; e < inputs.size(); ++e) {
    edges[e].u = inputs[e].u;
    edges[e].v = inputs[e].v;
    if (edges[e].u >= num_vertices || edges[e].v >= num_vertices) {
      throw StructuralError("edge " + std::to_string(e) + " references a vertex out of range");
    }
    if (edges[e].u == edges[e].v) {
      throw StructuralError("edge " + std::to_string(e) + " is a self-loop");
    }
  }
  if (all_ports && !inputs.empty()) {
    for (std::size_t e = 0; e < inputs.size(); ++e) {
      edges[e].port_u = *inputs[e].port_u;
      edges[e].port_v = *inputs[e].port_v;
    }
  } else {
    // Ascending (neighbour index, insertion order).
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> around(num_vertices);
    for (EdgeId e = 0; e < edges.size(); ++e) {
      around[edges[e].u].emplace_back(edges[e].v, e);
      around[edges[e].v].emplace_back(edges[e].u, e);
    }
    for (Vertex v = 0; v < num_vertices; ++v) {
      std::sort(around[v].begin(), around[v].end());
      for (Port p = 0; p < around[v].size(); ++p) {
        Edge& ed = edges[around[v][p].second];
        (ed.u == v ? ed.port_u : ed.port_v) = p;
      }
    }
  }
  if (all_orient && !inputs.empty()) {
    for (std::size_t e = 0; e < inputs.size(); ++e) edges[e].orientation = *inputs[e].orientation;
    return InteractionGraph(num_vertices, std::move(edges));
  }
  for (Edge& ed : edges) ed.orientation = ed.u < ed.v ? 1 : -1;
  InteractionGraph g(num_vertices, std::move(edges));
  if (g.all_degrees_even()) return g.with_orientations(eulerian_orientation(g));
  return g;
}

InteractionGraph InteractionGraph::from_pairs(std::size_t num_vertices,
                                              const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<EdgeInput> inputs;
  inputs.reserve(pairs.size());
  for (auto [a, b] : pairs) inputs.push_back(EdgeInput{a, b, {}, {}, {}});
  return build(num_vertices, inputs);
}

bool InteractionGraph::all_degrees_even() const {
  return std::all_of(incident_.begin(), incident_.end(),
                     [](const std::vector<EdgeId>& inc) { return inc.size() % 2 == 0; });
}

std::optional<EdgeId> InteractionGraph::find_edge(Vertex a, Vertex b) const {
  std::optional<EdgeId> best;
  if (a >= num_vertices()) return best;
  for (EdgeId e : incident_[a]) {
    if (edges_[e].other(a) == b && (!best || e < *best)) best = e;
  }
  return best;
}

std::vector<EdgeId> InteractionGraph::edges_between(Vertex a, Vertex b) const {
  std::vector<EdgeId> out;
  for (EdgeId e : incident_[a]) {
    if (edges_[e].other(a) == b) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

InteractionGraph InteractionGraph::with_ports(
    const std::vector<std::pair<Port, Port>>& ports) const {
  if (ports.size() != edges_.size()) throw ValidationError("port table size mismatch");
  std::vector<EdgeInput> inputs;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    inputs.push_back(EdgeInput{edges_[e].u, edges_[e].v, ports[e].first, ports[e].second, {}});
  }
  return build(num_vertices(), inputs);
}

InteractionGraph InteractionGraph::with_orientations(const std::vector<int>& orientation) const {
  if (orientation.size() != edges_.size()) throw ValidationError("orientation table size mismatch");
  std::vector<Edge> edges = edges_;
  for (EdgeId e = 0; e < edges.size(); ++e) edges[e].orientation = orientation[e];
  return InteractionGraph(num_vertices(), std::move(edges));
}

InteractionGraph InteractionGraph::with_random_ports(std::mt19937_64& rng) const {
  std::vector<std::pair<Port, Port>> ports(edges_.size());
  for (Vertex v = 0; v < num_vertices(); ++v) {
    std::vector<EdgeId> order = incident_[v];
    std::shuffle(order.begin(), order.end(), rng);
    for (Port p = 0; p < order.size(); ++p) {
      const Edge& ed = edges_[order[p]];
      (ed.u == v ? ports[order[p]].first : ports[order[p]].second) = p;
    }
  }
  return with_ports(ports);
}

bool is_connected_without(const InteractionGraph& g, const std::vector<bool>& removed) {
  const std::size_t m = g.num_vertices();
  Vertex start = m;
  std::size_t alive = 0;
  for (Vertex v = 0; v < m; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start == m) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<bool> seen(m, false);
  std::vector<Vertex> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      const Vertex w = g.edge(e).other(v);
      if (!removed[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

SpanningTree spanning_tree(const InteractionGraph& g) {
  SpanningTree tree;
  const std::size_t m = g.num_vertices();
  tree.root = 0;
  tree.parent_edge.assign(m, std::nullopt);
  tree.in_tree.assign(g.num_edges(), false);
  std::vector<bool> seen(m, false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(v)) {
      const Vertex w = g.edge(e).other(v);
      if (seen[w]) continue;
      seen[w] = true;
      tree.parent_edge[w] = e;
      tree.in_tree[e] = true;
      tree.tree_edges.push_back(e);
      queue.push_back(w);
    }
  }
  if (tree.tree_edges.size() + 1 != m) throw StructuralError("graph is disconnected");
  return tree;
}

Path root_path(const InteractionGraph& g, const SpanningTree& tree, Vertex v) {
  // Walk up, then reverse.
  Path up;
  up.vertices.push_back(v);
  while (tree.parent_edge[v]) {
    const EdgeId e = *tree.parent_edge[v];
    v = g.edge(e).other(v);
    up.edges.push_back(e);
    up.vertices.push_back(v);
  }
  return up.reversed();
}

std::vector<Path> fundamental_cycles(const InteractionGraph& g, const SpanningTree& tree) {
  std::vector<Path> loops;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (tree.in_tree[e]) continue;
    const Edge& ed = g.edge(e);
    Path step;
    step.vertices = {ed.u, ed.v};
    step.edges = {e};
    loops.push_back(root_path(g, tree, ed.u).then(step).then(root_path(g, tree, ed.v).reversed()));
  }
  return loops;
}

Path eulerian_cycle(const InteractionGraph& g) {
  if (!g.all_degrees_even()) {
    throw PreconditionError("Eulerian cycle requires every vertex degree to be even");
  }
  Path walk;
  walk.vertices.push_back(0);
  if (g.num_edges() == 0) return walk;
  std::vector<bool> used(g.num_edges(), false);
  std::vector<std::size_t> next_port(g.num_vertices(), 0);
  // Stack of (vertex, edge used to reach it).
  std::vector<std::pair<Vertex, std::optional<EdgeId>>> stack{{0, std::nullopt}};
  std::vector<std::pair<Vertex, std::optional<EdgeId>>> circuit;
  while (!stack.empty()) {
    const Vertex v = stack.back().first;
    auto& p = next_port[v];
    while (p < g.degree(v) && used[g.incident(v)[p]]) ++p;
    if (p == g.degree(v)) {
      circuit.push_back(stack.back());
      stack.pop_back();
    } else {
      const EdgeId e = g.incident(v)[p];
      used[e] = true;
      stack.emplace_back(g.edge(e).other(v), e);
    }
  }
  // circuit is the walk reversed; rebuild forwards.
  std::reverse(circuit.begin(), circuit.end());
  walk.vertices.clear();
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    walk.vertices.push_back(circuit[i].first);
    if (i > 0) walk.edges.push_back(*circuit[i].second);
  }
  return walk;
}

bool is_three_connected(const InteractionGraph& g) {
  const std::size_t m = g.num_vertices();
  if (m < 4) throw PreconditionError("3-connectivity check needs at least 4 vertices");
  std::vector<bool> removed(m, false);
  for (Vertex a = 0; a < m; ++a) {
    removed[a] = true;
    for (Vertex b = a + 1; b < m; ++b) {
      removed[b] = true;
      const bool ok = is_connected_without(g, removed);
      removed[b] = false;
      if (!ok) return false;
    }
    removed[a] = false;
  }
  return true;
}

std::size_t max_parallel_edges(const InteractionGraph& g) {
  std::map<std::pair<Vertex, Vertex>, std::size_t> count;
  std::size_t best = 0;
  for (const Edge& e : g.edges()) {
    best = std::max(best, ++count[{std::min(e.u, e.v), std::max(e.u, e.v)}]);
  }
  return best;
}

int eulerian_loop_sign(const InteractionGraph& g, const Path& walk) {
  if (!g.all_degrees_even()) throw PreconditionError("loop sign needs even degrees");
  if (walk.length() != g.num_edges() || !walk.is_loop()) {
    throw PreconditionError("walk is not an Eulerian cycle");
  }
  // A(walk) = i^s prod_j eps_j gamma_{a_j,p_j} gamma_{b_j,q_j}. Sorting the
  // gamma word into per-vertex blocks in port order costs the permutation
  // sign at each vertex (cross-vertex swaps commute), and each block equals
  // i^{d/2} B. With s = |E| = sum d/2 the i-powers combine to (-1)^{|E|}.
  int sign = (g.num_edges() % 2 == 0) ? 1 : -1;
  std::vector<std::vector<Port>> seen(g.num_vertices());
  for (std::size_t j = 0; j < walk.length(); ++j) {
    const Vertex a = walk.vertices[j];
    const Vertex b = walk.vertices[j + 1];
    const Edge& ed = g.edge(walk.edges[j]);
    sign *= ed.orientation_from(a);
    seen[a].push_back(ed.port_at(a));
    seen[b].push_back(ed.port_at(b));
  }
  for (const auto& ports : seen) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < ports.size(); ++i) {
      for (std::size_t k = i + 1; k < ports.size(); ++k) {
        if (ports[i] > ports[k]) ++inversions;
      }
    }
    if (inversions % 2 == 1) sign = -sign;
  }
  return sign;
}

std::vector<int> eulerian_orientation(const InteractionGraph& g) {
  const Path walk = eulerian_cycle(g);
  std::vector<int> orientation(g.num_edges(), 1);
  for (std::size_t j = 0; j < walk.length(); ++j) {
    const Edge& ed = g.edge(walk.edges[j]);
    orientation[walk.edges[j]] = (walk.vertices[j] == ed.u) ? 1 : -1;
  }
  if (walk.length() == 0) return orientation;
  const InteractionGraph oriented = g.with_orientations(orientation);
  if (eulerian_loop_sign(oriented, walk) < 0) orientation[walk.edges.back()] *= -1;
  return orientation;
}

InteractionGraph complete_graph(std::size_t m) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < m; ++a) {
    for (Vertex b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
  }
  return InteractionGraph::from_pairs(m, pairs);
}

InteractionGraph cycle_graph(std::size_t m) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < m; ++a) pairs.emplace_back(a, (a + 1) % m);
  return InteractionGraph::from_pairs(m, pairs);
}

InteractionGraph octahedron_graph() {
  // K_{2,2,2}: every vertex except its antipode (v ^ 1).
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = a + 1; b < 6; ++b) {
      if ((a ^ 1U) != b) pairs.emplace_back(a, b);
    }
  }
  return InteractionGraph::from_pairs(6, pairs);
}

}  // namespace sfenc
