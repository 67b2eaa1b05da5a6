#include "sfenc/models.hpp"

#include <algorithm>
#include <random>

#include "sfenc/errors.hpp"

namespace sfenc {

void validate(const HubbardSpec& spec) {
  if (spec.lx == 0 || spec.ly == 0 || spec.sites() < 2) {
    throw ValidationError("Hubbard lattice needs at least two sites");
  }
  if (spec.periodic && (spec.lx < 3 || spec.ly < 3)) {
    throw ValidationError("periodic Hubbard lattice needs Lx, Ly >= 3; smaller tori double bonds");
  }
}

std::vector<std::pair<std::size_t, std::size_t>> hubbard_bonds(const HubbardSpec& spec) {
  validate(spec);
  std::vector<std::pair<std::size_t, std::size_t>> bonds;
  const auto site = [&](std::size_t x, std::size_t y) { return y * spec.lx + x; };
  for (std::size_t y = 0; y < spec.ly; ++y) {
    for (std::size_t x = 0; x < spec.lx; ++x) {
      if (x + 1 < spec.lx) bonds.emplace_back(site(x, y), site(x + 1, y));
      else if (spec.periodic) bonds.emplace_back(site(x, y), site(0, y));
    }
  }
  for (std::size_t y = 0; y < spec.ly; ++y) {
    for (std::size_t x = 0; x < spec.lx; ++x) {
      if (y + 1 < spec.ly) bonds.emplace_back(site(x, y), site(x, y + 1));
      else if (spec.periodic) bonds.emplace_back(site(x, y), site(x, 0));
    }
  }
  return bonds;
}

FermionHamiltonian hubbard_hamiltonian(const HubbardSpec& spec) {
  FermionHamiltonian h;
  h.num_modes = spec.modes();
  const std::size_t s = spec.sites();
  for (std::size_t spin = 0; spin < 2; ++spin) {
    for (auto [a, b] : hubbard_bonds(spec)) {
      h.terms.push_back({TermKind::kHopping, {spin * s + a, spin * s + b}, -spec.t});
    }
  }
  for (std::size_t mode = 0; mode < h.num_modes; ++mode) {
    h.terms.push_back({TermKind::kNumber, {mode}, spec.eps});
  }
  for (std::size_t site = 0; site < s; ++site) {
    h.terms.push_back({TermKind::kCoulomb, {site, s + site}, spec.u});
  }
  return h;
}

InteractionGraph hubbard_gse_graph(const HubbardSpec& spec) {
  if (!spec.periodic || spec.lx < 3 || spec.ly < 3) {
    throw PreconditionError(
        "the GSE Hubbard graph needs a periodic lattice with Lx, Ly >= 3: open boundary "
        "vertices have degree below 6 and the distance-3 construction does not apply");
  }
  const std::size_t s = spec.sites();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t spin = 0; spin < 2; ++spin) {
    for (auto [a, b] : hubbard_bonds(spec)) pairs.emplace_back(spin * s + a, spin * s + b);
  }
  for (std::size_t site = 0; site < s; ++site) {
    pairs.emplace_back(site, s + site);
    pairs.emplace_back(site, s + site);
  }
  return InteractionGraph::from_pairs(2 * s, pairs);
}

InteractionGraph hubbard_dimer_padded_graph() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = a + 1; b < 4; ++b) {
      pairs.emplace_back(a, b);
      pairs.emplace_back(a, b);
    }
  }
  return InteractionGraph::from_pairs(4, pairs);
}

std::vector<EdgeId> AuxLattice::unit_cell_qubits(std::size_t px, std::size_t py) const {
  if (px + 1 >= spec.lx || py + 1 >= spec.ly) throw ValidationError("plaquette out of range");
  const Vertex c[4] = {site_vertex(px, py), site_vertex(px + 1, py), site_vertex(px + 1, py + 1),
                       site_vertex(px, py + 1)};
  std::vector<EdgeId> out;
  for (int k = 0; k < 4; ++k) {
    const auto e = graph.find_edge(c[k], c[(k + 1) % 4]);
    if (!e) throw ConsistencyError("auxiliary lattice lacks a plaquette bond");
    out.push_back(*e);
  }
  const Vertex a = aux_vertex(px, py);
  for (Vertex corner : c) {
    const auto e = graph.find_edge(a, corner);
    if (!e) throw ConsistencyError("auxiliary lattice lacks a plaquette spoke");
    out.push_back(*e);
  }
  return out;
}

AuxLattice hubbard_superfast_aux_graph(const HubbardSpec& spec) {
  if (spec.periodic || spec.lx < 2 || spec.ly < 2) {
    throw PreconditionError("the auxiliary-mode lattice needs an open boundary with Lx, Ly >= 2");
  }
  AuxLattice lat;
  lat.spec = spec;
  const std::size_t p = (spec.lx - 1) * (spec.ly - 1);
  for (Vertex a = 0; a < p; ++a) lat.auxiliary.push_back(a);
  auto site = [&](std::size_t x, std::size_t y) { return p + y * spec.lx + x; };
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (auto [a, b] : hubbard_bonds(spec)) pairs.emplace_back(p + a, p + b);
  for (std::size_t py = 0; py + 1 < spec.ly; ++py) {
    for (std::size_t px = 0; px + 1 < spec.lx; ++px) {
      const Vertex a = py * (spec.lx - 1) + px;
      pairs.emplace_back(a, site(px, py));
      pairs.emplace_back(a, site(px + 1, py));
      pairs.emplace_back(a, site(px, py + 1));
      pairs.emplace_back(a, site(px + 1, py + 1));
    }
  }
  lat.graph = InteractionGraph::from_pairs(p + spec.sites(), pairs);
  return lat;
}

FermionHamiltonian aux_layer_hamiltonian(const AuxLattice& lattice) {
  FermionHamiltonian h;
  h.num_modes = lattice.graph.num_vertices();
  const std::size_t p = lattice.plaquettes();
  for (auto [a, b] : hubbard_bonds(lattice.spec)) {
    h.terms.push_back({TermKind::kHopping, {p + a, p + b}, -lattice.spec.t});
  }
  for (std::size_t site = 0; site < lattice.spec.sites(); ++site) {
    h.terms.push_back({TermKind::kNumber, {p + site}, lattice.spec.eps});
  }
  return h;
}

FermionHamiltonian random_term_hamiltonian(const InteractionGraph& g, std::uint64_t seed) {
  const std::size_t m = g.num_vertices();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::bernoulli_distribution keep(0.5);
  const auto adjacent = [&](std::size_t a, std::size_t b) { return g.find_edge(a, b).has_value(); };

  std::vector<std::vector<FermionTerm>> by_kind(6);
  for (std::size_t i = 0; i < m; ++i) by_kind[0].push_back({TermKind::kNumber, {i}, 0});
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      if (i < j) by_kind[1].push_back({TermKind::kCoulomb, {i, j}, 0});
      if (i < j && adjacent(i, j)) {
        by_kind[2].push_back({TermKind::kHopping, {i, j}, 0});
        by_kind[4].push_back({TermKind::kPairing, {i, j}, 0});
      }
      for (std::size_t k = 0; k < m; ++k) {
        if (k == i || k == j || !(i < k) || !adjacent(i, k)) continue;
        by_kind[3].push_back({TermKind::kNumberExcitation, {i, j, k}, 0});
        for (std::size_t l = 0; l < m; ++l) {
          if (l == i || l == j || l == k || !adjacent(i, j) || !adjacent(k, l)) continue;
          by_kind[5].push_back({TermKind::kDoubleExcitation, {i, j, k, l}, 0});
        }
      }
    }
  }
  FermionHamiltonian h;
  h.num_modes = m;
  for (auto& terms : by_kind) {
    if (terms.empty()) continue;
    const std::size_t forced = std::uniform_int_distribution<std::size_t>(0, terms.size() - 1)(rng);
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const bool take = keep(rng);
      const double c = coeff(rng);
      if (k != forced && !take) continue;
      terms[k].coeff = c;
      h.terms.push_back(terms[k]);
    }
  }
  return h;
}

}  // namespace sfenc
