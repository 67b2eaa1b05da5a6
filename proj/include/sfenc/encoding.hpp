#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfenc/graph.hpp"
#include "sfenc/mode_family.hpp"
#include "sfenc/pauli.hpp"

namespace sfenc {

enum class EncodingKind { kSuperfast, kErrorCorrecting, kFenwick };

std::string_view to_string(EncodingKind kind);
/// Accepts "superfast", "error-correcting" (or "ec"), "fenwick". Throws
/// ValidationError.
EncodingKind parse_encoding_kind(std::string_view name);

/// Qubit images of the edge and vertex operators over one interaction graph.
///
/// Superfast layout: qubit e belongs to edge e. GSE layout: vertex i owns the
/// contiguous block of d(i)/2 qubits following all lower-numbered vertices.
/// Only the u -> v direction of every edge operator is stored; the reverse
/// direction is its negation.
class EncodingMap {
 public:
  EncodingMap(EncodingKind kind, InteractionGraph graph, std::size_t num_qubits,
              std::vector<std::vector<std::size_t>> vertex_qubits, std::vector<Pauli> edge_ops,
              std::vector<Pauli> vertex_ops, std::vector<std::vector<Pauli>> local_modes);

  EncodingKind kind() const { return kind_; }
  const InteractionGraph& graph() const { return graph_; }
  std::size_t num_qubits() const { return num_qubits_; }
  bool is_gse() const { return kind_ != EncodingKind::kSuperfast; }

  /// Qubits owned by vertex v (GSE) or the edge qubits touching v (Superfast).
  const std::vector<std::size_t>& vertex_qubits(Vertex v) const { return vertex_qubits_[v]; }

  /// A~ for edge e traversed from `from` to its other endpoint.
  Pauli edge_operator(EdgeId e, Vertex from) const;
  /// Stored u -> v direction.
  const Pauli& edge_operator(EdgeId e) const { return edge_ops_[e]; }
  const Pauli& vertex_operator(Vertex v) const { return vertex_ops_[v]; }
  /// gamma_{v,p}; only for GSE encodings.
  const Pauli& local_mode(Vertex v, Port p) const;
  const std::vector<std::vector<Pauli>>& local_modes() const { return local_modes_; }

  /// A~ for the lowest-id edge a - b, traversed a -> b.
  std::optional<Pauli> edge_operator_between(Vertex a, Vertex b) const;

 private:
  EncodingKind kind_;
  InteractionGraph graph_;
  std::size_t num_qubits_;
  std::vector<std::vector<std::size_t>> vertex_qubits_;
  std::vector<Pauli> edge_ops_;
  std::vector<Pauli> vertex_ops_;
  std::vector<std::vector<Pauli>> local_modes_;
};

EncodingMap superfast_encode(const InteractionGraph& g);

/// Requires every degree even (and >= 6 for the error-correcting family).
EncodingMap gse_encode(const InteractionGraph& g, EncodingKind family);

EncodingMap encode(const InteractionGraph& g, EncodingKind kind);

/// First qubit of every vertex block under the GSE layout.
std::vector<std::size_t> gse_block_offsets(const InteractionGraph& g);

/// i^s times the ordered product of edge operators along the path.
/// Throws StructuralError when a step does not follow its recorded edge.
Pauli path_operator(const EncodingMap& enc, const Path& path);

/// One line per violated relation among the encoded operators: Hermiticity,
/// involution, B-B commutation, A-B and A-A (anti)commutation by shared
/// endpoints, and qubit count. Empty when the encoding is consistent.
std::vector<std::string> check_operator_algebra(const EncodingMap& enc);

}  // namespace sfenc
