#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sfenc/encoding.hpp"
#include "sfenc/pauli.hpp"
#include "sfenc/stabilizer.hpp"

namespace sfenc {

using Complex = std::complex<double>;

/// Even fermionic operators with a known edge-algebra form. Each kind stands
/// for the Hermitian operator below (indices i, j, k, l in order):
///   number              a_i^+ a_i
///   coulomb             a_i^+ a_j^+ a_j a_i
///   hopping             a_i^+ a_j + a_j^+ a_i
///   number_excitation   a_i^+ a_j^+ a_j a_k + a_k^+ a_j^+ a_j a_i
///   pairing             a_i a_j + a_j^+ a_i^+
///   double_excitation   a_i^+ a_j^+ a_k a_l + a_l^+ a_k^+ a_j a_i
enum class TermKind { kNumber, kCoulomb, kHopping, kNumberExcitation, kPairing, kDoubleExcitation };

std::string_view to_string(TermKind kind);
TermKind parse_term_kind(std::string_view name);
std::size_t arity(TermKind kind);

struct FermionTerm {
  TermKind kind = TermKind::kNumber;
  std::vector<std::size_t> modes;
  double coeff = 1.0;
};

/// Throws ValidationError on wrong arity or repeated indices.
void validate(const FermionTerm& term);

struct FermionHamiltonian {
  std::size_t num_modes = 0;
  std::vector<FermionTerm> terms;
};

void validate(const FermionHamiltonian& h);

/// One factor of an edge-algebra monomial: A_{from,to} or B_vertex.
struct AlgebraFactor {
  enum class Type { kA, kB } type = Type::kB;
  std::size_t first = 0;   // A: from, B: vertex
  std::size_t second = 0;  // A: to

  static AlgebraFactor a(std::size_t from, std::size_t to) { return {Type::kA, from, to}; }
  static AlgebraFactor b(std::size_t vertex) { return {Type::kB, vertex, 0}; }
  friend bool operator==(const AlgebraFactor&, const AlgebraFactor&) = default;
};

using Monomial = std::vector<AlgebraFactor>;

/// Polynomial in the A and B generators. Factor order is kept as written.
struct EdgeAlgebraExpr {
  std::vector<std::pair<Complex, Monomial>> terms;

  EdgeAlgebraExpr& add(Complex c, Monomial m) {
    terms.emplace_back(c, std::move(m));
    return *this;
  }
  /// Distributes the product, keeping factor order (this on the left).
  EdgeAlgebraExpr operator*(const EdgeAlgebraExpr& rhs) const;
  EdgeAlgebraExpr scaled(Complex c) const;
};

/// Edge-algebra form of a term, scaled by its coefficient.
EdgeAlgebraExpr term_to_edge_algebra(const FermionTerm& term);

struct QubitTerm {
  Pauli pauli;  // Hermitian, '+' prefix
  double coeff = 0.0;
};

struct QubitHamiltonian {
  std::size_t num_qubits = 0;
  std::vector<QubitTerm> terms;  // sorted by IXYZ string

  std::size_t max_weight() const;
};

inline constexpr double kCoefficientCutoff = 1e-12;

/// Substitutes A~ and B~ into every monomial, merges equal Paulis and drops
/// coefficients below kCoefficientCutoff. Throws CompilationError when a term
/// needs an edge the graph does not have, ConsistencyError if the merged
/// result is not Hermitian.
QubitHamiltonian compile(const FermionHamiltonian& h, const EncodingMap& enc);

/// Pauli image of one monomial.
Pauli evaluate_monomial(const Monomial& m, const EncodingMap& enc);

bool verify_compiled_commutes_with_stabilizers(const QubitHamiltonian& h, const StabilizerGroup& s);

/// Edges (i, j) the term's A factors need.
std::vector<std::pair<std::size_t, std::size_t>> required_edges(const FermionTerm& term);

}  // namespace sfenc
