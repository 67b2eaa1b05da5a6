#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sfenc/fermion.hpp"
#include "sfenc/graph.hpp"

namespace sfenc {

/// Square-lattice Hubbard model. Modes are numbered
/// mode(x, y, s) = s * Lx * Ly + y * Lx + x with s = 0 for spin up.
struct HubbardSpec {
  std::size_t lx = 2;
  std::size_t ly = 2;
  bool periodic = false;
  double t = 1.0;
  double eps = 0.0;
  double u = 0.0;

  std::size_t sites() const { return lx * ly; }
  std::size_t modes() const { return 2 * sites(); }
  std::size_t mode(std::size_t x, std::size_t y, std::size_t spin) const {
    return spin * sites() + y * lx + x;
  }
};

/// Throws ValidationError. A 1 x L chain is allowed; periodic wrapping needs
/// at least 3 sites in both directions so that no bond is doubled.
void validate(const HubbardSpec& spec);

/// Nearest-neighbour pairs (site indices y * Lx + x), right bonds first.
std::vector<std::pair<std::size_t, std::size_t>> hubbard_bonds(const HubbardSpec& spec);

/// -t hopping per bond and spin, eps number term per mode, U coulomb per site.
FermionHamiltonian hubbard_hamiltonian(const HubbardSpec& spec);

/// Both spin layers of the torus with two dummy edges joining every
/// up/down pair, so all degrees are 6. Periodic with Lx, Ly >= 3 only.
InteractionGraph hubbard_gse_graph(const HubbardSpec& spec);

/// Two-site, two-spin instance padded to degree 6: every pair of the four
/// modes is joined by two edges (doubled K4).
InteractionGraph hubbard_dimer_padded_graph();

/// One spin layer of an open lattice with an auxiliary vertex at the centre of
/// every plaquette. Auxiliary vertices come first, numbered py * (Lx - 1) + px;
/// site (x, y) is vertex P + y * Lx + x with P the plaquette count. Ports at a
/// vertex ascend by neighbour index.
struct AuxLattice {
  HubbardSpec spec;
  InteractionGraph graph;
  std::vector<Vertex> auxiliary;

  std::size_t plaquettes() const { return auxiliary.size(); }
  Vertex site_vertex(std::size_t x, std::size_t y) const {
    return plaquettes() + y * spec.lx + x;
  }
  Vertex aux_vertex(std::size_t px, std::size_t py) const { return py * (spec.lx - 1) + px; }
  /// Qubits of the plaquette with lower-left corner (px, py): its four lattice
  /// edges followed by its four auxiliary edges.
  std::vector<EdgeId> unit_cell_qubits(std::size_t px, std::size_t py) const;
  /// Qubits of both spin layers together.
  std::size_t doubled_layer_qubits() const { return 2 * graph.num_edges(); }
};

AuxLattice hubbard_superfast_aux_graph(const HubbardSpec& spec);

/// Spinless single-layer Hubbard terms re-indexed onto the site vertices of
/// the auxiliary lattice (hopping -t and number eps; coulomb needs both spins).
FermionHamiltonian aux_layer_hamiltonian(const AuxLattice& lattice);

/// Seeded Hamiltonian on the graph's vertices with coefficients in [-1, 1]
/// containing at least one term of every kind whose edges the graph has.
FermionHamiltonian random_term_hamiltonian(const InteractionGraph& g, std::uint64_t seed);

}  // namespace sfenc
