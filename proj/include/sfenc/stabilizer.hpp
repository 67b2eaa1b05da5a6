#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sfenc/bitvector.hpp"
#include "sfenc/encoding.hpp"
#include "sfenc/pauli.hpp"

namespace sfenc {

/// Abelian group of Hermitian Paulis given by independent generators, with a
/// cached GF(2) echelon form of the symplectic rows for membership queries.
class StabilizerGroup {
 public:
  /// Throws ConsistencyError when generators anticommute, are not Hermitian,
  /// or are dependent over GF(2).
  StabilizerGroup(std::size_t num_qubits, std::vector<Pauli> generators);

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Pauli>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  std::size_t rank() const { return pivots_.size(); }
  std::size_t logical_qubits() const { return num_qubits_ - rank(); }

  /// Exact membership, sign included.
  bool contains(const Pauli& p) const;
  /// Membership of p or -p.
  bool contains_up_to_sign(const Pauli& p) const;
  /// Generator indices whose product has the symplectic part of p, if any.
  std::optional<BitVector> decompose(const Pauli& p) const;

  /// Bit k set iff p anticommutes with generator k.
  BitVector syndrome(const Pauli& p) const;

  /// Walks every GF(2) dependency of the trivial vector. With independent
  /// generators there are none, so this returns true without work.
  bool minus_identity_excluded() const;

 private:
  std::size_t num_qubits_;
  std::vector<Pauli> generators_;
  // Echelon rows over 2n bits (x block then z block), each tagged with the
  // generator combination that produced it.
  std::vector<BitVector> rows_;
  std::vector<BitVector> combos_;
  std::vector<std::size_t> pivots_;
};

/// Symplectic row (x block then z block) of a Pauli.
BitVector symplectic_row(const Pauli& p);

std::size_t gf2_rank(std::vector<BitVector> rows);

/// Loop operators of the fundamental cycle basis (non-tree edges in id order)
/// followed by B~_v for every requested auxiliary vertex.
StabilizerGroup build_stabilizer_group(const EncodingMap& enc,
                                       const std::vector<Vertex>& extra_vertex_stabilizers = {});

/// Same generators paired with the loops they came from.
std::vector<Path> stabilizer_loops(const EncodingMap& enc);

/// prod_i B~_i in S with its exact sign.
bool product_of_vertex_ops_in_group(const StabilizerGroup& s, const EncodingMap& enc);

/// For generator k returns a single local Pauli that anticommutes with it and
/// commutes with every other generator: Z on the defining non-tree edge for
/// Superfast, gamma_{u,p} at the tail of that edge for GSE.
Pauli independence_witness(const EncodingMap& enc, EdgeId non_tree_edge);

}  // namespace sfenc
