#include "sfenc/encoding.hpp"

#include "sfenc/errors.hpp"

namespace sfenc {

std::string_view to_string(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::kSuperfast: return "superfast";
    case EncodingKind::kErrorCorrecting: return "error-correcting";
    case EncodingKind::kFenwick: return "fenwick";
  }
  return "unknown";
}

EncodingKind parse_encoding_kind(std::string_view name) {
  if (name == "superfast" || name == "bksf") return EncodingKind::kSuperfast;
  if (name == "error-correcting" || name == "error_correcting" || name == "ec" ||
      name == "gse-ec") {
    return EncodingKind::kErrorCorrecting;
  }
  if (name == "fenwick" || name == "gse-fenwick") return EncodingKind::kFenwick;
  throw ValidationError("unknown encoding kind '" + std::string(name) +
                        "' (expected superfast, error-correcting or fenwick)");
}

EncodingMap::EncodingMap(EncodingKind kind, InteractionGraph graph, std::size_t num_qubits,
                         std::vector<std::vector<std::size_t>> vertex_qubits,
                         std::vector<Pauli> edge_ops, std::vector<Pauli> vertex_ops,
                         std::vector<std::vector<Pauli>> local_modes)
    : kind_(kind),
      graph_(std::move(graph)),
      num_qubits_(num_qubits),
      vertex_qubits_(std::move(vertex_qubits)),
      edge_ops_(std::move(edge_ops)),
      vertex_ops_(std::move(vertex_ops)),
      local_modes_(std::move(local_modes)) {
  if (edge_ops_.size() != graph_.num_edges() || vertex_ops_.size() != graph_.num_vertices() ||
      vertex_qubits_.size() != graph_.num_vertices()) {
    throw ValidationError("encoding tables do not match the graph size");
  }
  for (const Pauli& p : edge_ops_) {
    if (p.num_qubits() != num_qubits_) throw DimensionError("edge operator has wrong qubit count");
  }
  for (const Pauli& p : vertex_ops_) {
    if (p.num_qubits() != num_qubits_) throw DimensionError("vertex operator has wrong qubit count");
  }
  if (is_gse()) {
    if (local_modes_.size() != graph_.num_vertices()) {
      throw ValidationError("GSE encoding needs local modes for every vertex");
    }
    for (Vertex v = 0; v < graph_.num_vertices(); ++v) {
      if (local_modes_[v].size() != graph_.degree(v)) {
        throw ValidationError("vertex " + std::to_string(v) + " needs one local mode per port");
      }
    }
  }
}

Pauli EncodingMap::edge_operator(EdgeId e, Vertex from) const {
  const Edge& ed = graph_.edge(e);
  if (from != ed.u && from != ed.v) {
    throw StructuralError("vertex " + std::to_string(from) + " is not an endpoint of edge " +
                          std::to_string(e));
  }
  return from == ed.u ? edge_ops_[e] : edge_ops_[e].negated();
}

const Pauli& EncodingMap::local_mode(Vertex v, Port p) const {
  if (!is_gse()) throw PreconditionError("local modes exist only for GSE encodings");
  return local_modes_.at(v).at(p);
}

std::optional<Pauli> EncodingMap::edge_operator_between(Vertex a, Vertex b) const {
  const auto e = graph_.find_edge(a, b);
  if (!e) return std::nullopt;
  return edge_operator(*e, a);
}

EncodingMap superfast_encode(const InteractionGraph& g) {
  const std::size_t n = g.num_edges();
  std::vector<Pauli> vertex_ops;
  std::vector<std::vector<std::size_t>> vertex_qubits(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Pauli b = Pauli::identity(n);
    for (EdgeId e : g.incident(v)) {
      b *= Pauli::single(n, e, 'Z');
      vertex_qubits[v].push_back(e);
    }
    vertex_ops.push_back(std::move(b));
  }
  std::vector<Pauli> edge_ops;
  for (EdgeId e = 0; e < n; ++e) {
    const Edge& ed = g.edge(e);
    Pauli a = Pauli::single(n, e, 'X');
    for (Port p = 0; p < ed.port_u; ++p) a *= Pauli::single(n, g.incident(ed.u)[p], 'Z');
    for (Port q = 0; q < ed.port_v; ++q) a *= Pauli::single(n, g.incident(ed.v)[q], 'Z');
    if (ed.orientation < 0) a = a.negated();
    edge_ops.push_back(std::move(a));
  }
  return EncodingMap(EncodingKind::kSuperfast, g, n, std::move(vertex_qubits), std::move(edge_ops),
                     std::move(vertex_ops), {});
}

std::vector<std::size_t> gse_block_offsets(const InteractionGraph& g) {
  std::vector<std::size_t> offsets(g.num_vertices(), 0);
  std::size_t next = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    offsets[v] = next;
    next += g.degree(v) / 2;
  }
  return offsets;
}

EncodingMap gse_encode(const InteractionGraph& g, EncodingKind family) {
  if (family == EncodingKind::kSuperfast) {
    throw PreconditionError("gse_encode needs a local mode family, not superfast");
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::size_t d = g.degree(v);
    if (d % 2 != 0) {
      throw PreconditionError("GSE needs even degrees; vertex " + std::to_string(v) +
                              " has degree " + std::to_string(d));
    }
    if (family == EncodingKind::kErrorCorrecting && d < 6) {
      throw PreconditionError("error-correcting GSE needs degree >= 6; vertex " +
                              std::to_string(v) + " has degree " + std::to_string(d));
    }
  }
  const std::vector<std::size_t> offsets = gse_block_offsets(g);
  const std::size_t n = g.num_edges();

  std::vector<std::vector<Pauli>> modes(g.num_vertices());
  std::vector<std::vector<std::size_t>> vertex_qubits(g.num_vertices());
  std::vector<Pauli> vertex_ops;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::size_t d = g.degree(v);
    const ModeFamily local =
        family == EncodingKind::kFenwick ? mode_family_fenwick(d) : mode_family_general(d);
    for (const Pauli& gamma : local.modes) modes[v].push_back(gamma.embed(n, offsets[v]));
    for (std::size_t k = 0; k < d / 2; ++k) vertex_qubits[v].push_back(offsets[v] + k);
    vertex_ops.push_back(local.parity().embed(n, offsets[v]));
  }
  std::vector<Pauli> edge_ops;
  for (EdgeId e = 0; e < n; ++e) {
    const Edge& ed = g.edge(e);
    Pauli a = modes[ed.u][ed.port_u] * modes[ed.v][ed.port_v];
    if (ed.orientation < 0) a = a.negated();
    edge_ops.push_back(std::move(a));
  }
  return EncodingMap(family, g, n, std::move(vertex_qubits), std::move(edge_ops),
                     std::move(vertex_ops), std::move(modes));
}

EncodingMap encode(const InteractionGraph& g, EncodingKind kind) {
  return kind == EncodingKind::kSuperfast ? superfast_encode(g) : gse_encode(g, kind);
}

Pauli path_operator(const EncodingMap& enc, const Path& path) {
  const InteractionGraph& g = enc.graph();
  if (path.vertices.size() != path.edges.size() + 1) {
    throw StructuralError("path must list one more vertex than edges");
  }
  Pauli result = Pauli::identity(enc.num_qubits());
  for (std::size_t j = 0; j < path.edges.size(); ++j) {
    const EdgeId e = path.edges[j];
    if (e >= g.num_edges()) throw StructuralError("path uses unknown edge " + std::to_string(e));
    const Edge& ed = g.edge(e);
    const Vertex a = path.vertices[j];
    const Vertex b = path.vertices[j + 1];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) {
      throw StructuralError("path step " + std::to_string(j) + " does not follow edge " +
                            std::to_string(e));
    }
    result *= enc.edge_operator(e, a);
  }
  return result.times_i(static_cast<unsigned>(path.length() % 4));
}

std::vector<std::string> check_operator_algebra(const EncodingMap& enc) {
  std::vector<std::string> errors;
  const InteractionGraph& g = enc.graph();
  const Pauli id = Pauli::identity(enc.num_qubits());
  if (enc.num_qubits() != g.num_edges()) {
    errors.push_back("qubit count " + std::to_string(enc.num_qubits()) + " != |E| = " +
                     std::to_string(g.num_edges()));
  }
  auto check_basic = [&](const Pauli& p, const std::string& name) {
    if (!p.is_hermitian()) errors.push_back(name + " is not Hermitian");
    if (p * p != id) errors.push_back(name + " does not square to identity");
  };
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    check_basic(enc.vertex_operator(v), "B" + std::to_string(v));
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    check_basic(enc.edge_operator(e), "A(edge " + std::to_string(e) + ")");
  }
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    for (Vertex b = a + 1; b < g.num_vertices(); ++b) {
      if (!enc.vertex_operator(a).commutes_with(enc.vertex_operator(b))) {
        errors.push_back("B" + std::to_string(a) + " and B" + std::to_string(b) + " anticommute");
      }
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    for (Vertex k = 0; k < g.num_vertices(); ++k) {
      const bool expect_anti = (k == ed.u) != (k == ed.v);
      if (enc.edge_operator(e).commutes_with(enc.vertex_operator(k)) == expect_anti) {
        errors.push_back("A(edge " + std::to_string(e) + ") vs B" + std::to_string(k) +
                         (expect_anti ? " should anticommute" : " should commute"));
      }
    }
    for (EdgeId f = e + 1; f < g.num_edges(); ++f) {
      const Edge& fd = g.edge(f);
      const int shared = (ed.u == fd.u) + (ed.u == fd.v) + (ed.v == fd.u) + (ed.v == fd.v);
      const bool expect_anti = shared % 2 == 1;
      if (enc.edge_operator(e).commutes_with(enc.edge_operator(f)) == expect_anti) {
        errors.push_back("A(edge " + std::to_string(e) + ") vs A(edge " + std::to_string(f) +
                         (expect_anti ? ") should anticommute" : ") should commute"));
      }
    }
  }
  if (enc.is_gse()) {
    for (Vertex a = 0; a < g.num_vertices(); ++a) {
      for (Vertex b = a + 1; b < g.num_vertices(); ++b) {
        for (const Pauli& ga : enc.local_modes()[a]) {
          for (const Pauli& gb : enc.local_modes()[b]) {
            if (!ga.commutes_with(gb)) {
              errors.push_back("local modes at vertices " + std::to_string(a) + " and " +
                               std::to_string(b) + " anticommute");
            }
          }
        }
      }
    }
  }
  return errors;
}

}  // namespace sfenc
