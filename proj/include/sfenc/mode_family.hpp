#pragma once

#include <cstddef>
#include <vector>

#include "sfenc/pauli.hpp"

namespace sfenc {

/// d local Majorana modes on d/2 qubits at one vertex.
struct ModeFamily {
  std::size_t degree = 0;
  std::vector<Pauli> modes;

  std::size_t num_qubits() const { return degree / 2; }
  /// (-i)^{d/2} gamma_1 ... gamma_d.
  Pauli parity() const;
  /// Hermitian, involutive, pairwise anticommuting, and generating the full
  /// local Pauli group (2 * num_qubits independent symplectic vectors).
  bool satisfies_majorana_relations() const;
  /// |B| >= 3, |gamma_p| >= 2, |B gamma_p| >= 2, |B gamma_p gamma_q| >= 2.
  bool satisfies_distance_conditions() const;
};

/// ZXI, ZYI, IZX, IZY, XIZ, YIZ.
ModeFamily mode_family_degree6();

/// Error-correcting family for even d >= 6. For d/2 = 2k+1 the seeds
/// Z^k X I^k and Z^k Y I^k are rotated through all d/2 positions; for d/2 = 2k
/// the seeds Z^k X I^{k-1}, Z^k Y I^{k-1}, X I^k Z^{k-1}, Y I^k Z^{k-1} are each
/// rotated k - 1 times. Rotation moves every letter one qubit to the right.
ModeFamily mode_family_general(std::size_t degree);

/// Majorana operators of the Fenwick-tree transform of d/2 modes. Every member
/// has weight at most ceil(log2 d) and the parity is Z on the tree root.
ModeFamily mode_family_fenwick(std::size_t degree);

/// Fenwick tree over n nodes: parent[j] > j, or -1 for the root (n - 1).
std::vector<long> fenwick_parents(std::size_t n);

}  // namespace sfenc
