#include "sfenc/stabilizer.hpp"

#include "sfenc/errors.hpp"

namespace sfenc {

BitVector symplectic_row(const Pauli& p) {
  const std::size_t n = p.num_qubits();
  BitVector row(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    if (p.x().get(q)) row.set(q);
    if (p.z().get(q)) row.set(n + q);
  }
  return row;
}

std::size_t gf2_rank(std::vector<BitVector> rows) {
  std::size_t rank = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t col = rows[r].first_set();
    if (col == rows[r].size()) continue;
    ++rank;
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k].get(col)) rows[k] ^= rows[r];
    }
  }
  return rank;
}

StabilizerGroup::StabilizerGroup(std::size_t num_qubits, std::vector<Pauli> generators)
    : num_qubits_(num_qubits), generators_(std::move(generators)) {
  const std::size_t count = generators_.size();
  for (std::size_t k = 0; k < count; ++k) {
    const Pauli& g = generators_[k];
    if (g.num_qubits() != num_qubits_) {
      throw DimensionError("generator " + std::to_string(k) + " has wrong qubit count");
    }
    if (!g.is_hermitian()) {
      throw ConsistencyError("generator " + std::to_string(k) + " is not Hermitian");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (!g.commutes_with(generators_[j])) {
        throw ConsistencyError("generator " + std::to_string(k) + " anticommutes with generator " +
                               std::to_string(j) + "; the encoding is inconsistent");
      }
    }
  }
  // Incremental elimination; each new row is reduced against the existing
  // pivots so that pivot columns are cleared in every other row.
  for (std::size_t k = 0; k < count; ++k) {
    BitVector row = symplectic_row(generators_[k]);
    BitVector combo(count);
    combo.set(k);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (row.get(pivots_[r])) {
        row ^= rows_[r];
        combo ^= combos_[r];
      }
    }
    const std::size_t col = row.first_set();
    if (col == row.size()) {
      throw ConsistencyError("generator " + std::to_string(k) +
                             " is a product of earlier generators");
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].get(col)) {
        rows_[r] ^= row;
        combos_[r] ^= combo;
      }
    }
    rows_.push_back(std::move(row));
    combos_.push_back(std::move(combo));
    pivots_.push_back(col);
  }
}

std::optional<BitVector> StabilizerGroup::decompose(const Pauli& p) const {
  if (p.num_qubits() != num_qubits_) throw DimensionError("Pauli size does not match the group");
  BitVector row = symplectic_row(p);
  BitVector combo(generators_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (row.get(pivots_[r])) {
      row ^= rows_[r];
      combo ^= combos_[r];
    }
  }
  if (row.any()) return std::nullopt;
  return combo;
}

bool StabilizerGroup::contains(const Pauli& p) const {
  const auto combo = decompose(p);
  if (!combo) return false;
  Pauli product = Pauli::identity(num_qubits_);
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (combo->get(k)) product *= generators_[k];
  }
  return product == p;
}

bool StabilizerGroup::contains_up_to_sign(const Pauli& p) const {
  return contains(p) || contains(p.negated());
}

BitVector StabilizerGroup::syndrome(const Pauli& p) const {
  if (p.num_qubits() != num_qubits_) throw DimensionError("Pauli size does not match the group");
  BitVector s(generators_.size());
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (!p.commutes_with(generators_[k])) s.set(k);
  }
  return s;
}

bool StabilizerGroup::minus_identity_excluded() const {
  // Dependencies among generators are the null space of the generator matrix;
  // construction rejected any, so the only product equal to +-I is the empty
  // one, which is +I.
  return rank() == generators_.size();
}

std::vector<Path> stabilizer_loops(const EncodingMap& enc) {
  return fundamental_cycles(enc.graph(), spanning_tree(enc.graph()));
}

StabilizerGroup build_stabilizer_group(const EncodingMap& enc,
                                       const std::vector<Vertex>& extra_vertex_stabilizers) {
  std::vector<Pauli> gens;
  for (const Path& loop : stabilizer_loops(enc)) gens.push_back(path_operator(enc, loop));
  for (Vertex v : extra_vertex_stabilizers) {
    if (v >= enc.graph().num_vertices()) {
      throw ValidationError("auxiliary vertex " + std::to_string(v) + " is not in the graph");
    }
    gens.push_back(enc.vertex_operator(v));
  }
  return StabilizerGroup(enc.num_qubits(), std::move(gens));
}

bool product_of_vertex_ops_in_group(const StabilizerGroup& s, const EncodingMap& enc) {
  Pauli product = Pauli::identity(enc.num_qubits());
  for (Vertex v = 0; v < enc.graph().num_vertices(); ++v) product *= enc.vertex_operator(v);
  return s.contains(product);
}

Pauli independence_witness(const EncodingMap& enc, EdgeId non_tree_edge) {
  const Edge& ed = enc.graph().edge(non_tree_edge);
  if (!enc.is_gse()) return Pauli::single(enc.num_qubits(), non_tree_edge, 'Z');
  return enc.local_mode(ed.u, ed.port_u);
}

}  // namespace sfenc
