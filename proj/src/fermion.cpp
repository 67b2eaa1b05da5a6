#include "sfenc/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "sfenc/errors.hpp"

namespace sfenc {

namespace {

constexpr Complex kI{0.0, 1.0};

std::string describe(const FermionTerm& t) {
  std::string s(to_string(t.kind));
  s += "(";
  for (std::size_t k = 0; k < t.modes.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(t.modes[k]);
  }
  return s + ")";
}

// (1 - B_v)
EdgeAlgebraExpr one_minus_b(std::size_t v) {
  EdgeAlgebraExpr e;
  e.add(1.0, {}).add(-1.0, {AlgebraFactor::b(v)});
  return e;
}

// -i (A_ij B_j + sign * B_i A_ij) / 2
EdgeAlgebraExpr hopping_like(std::size_t i, std::size_t j, double sign) {
  EdgeAlgebraExpr e;
  e.add(-kI / 2.0, {AlgebraFactor::a(i, j), AlgebraFactor::b(j)});
  e.add(-kI * sign / 2.0, {AlgebraFactor::b(i), AlgebraFactor::a(i, j)});
  return e;
}

}  // namespace

std::string_view to_string(TermKind kind) {
  switch (kind) {
    case TermKind::kNumber: return "number";
    case TermKind::kCoulomb: return "coulomb";
    case TermKind::kHopping: return "hopping";
    case TermKind::kNumberExcitation: return "number_excitation";
    case TermKind::kPairing: return "pairing";
    case TermKind::kDoubleExcitation: return "double_excitation";
  }
  return "unknown";
}

TermKind parse_term_kind(std::string_view name) {
  static const std::map<std::string_view, TermKind> kNames = {
      {"number", TermKind::kNumber},
      {"coulomb", TermKind::kCoulomb},
      {"hopping", TermKind::kHopping},
      {"number_excitation", TermKind::kNumberExcitation},
      {"pairing", TermKind::kPairing},
      {"double_excitation", TermKind::kDoubleExcitation},
  };
  const auto it = kNames.find(name);
  if (it == kNames.end()) throw ValidationError("unknown term kind '" + std::string(name) + "'");
  return it->second;
}

std::size_t arity(TermKind kind) {
  switch (kind) {
    case TermKind::kNumber: return 1;
    case TermKind::kCoulomb:
    case TermKind::kHopping:
    case TermKind::kPairing: return 2;
    case TermKind::kNumberExcitation: return 3;
    case TermKind::kDoubleExcitation: return 4;
  }
  return 0;
}

void validate(const FermionTerm& term) {
  if (term.modes.size() != arity(term.kind)) {
    throw ValidationError(describe(term) + " needs " + std::to_string(arity(term.kind)) +
                          " mode indices");
  }
  const std::set<std::size_t> distinct(term.modes.begin(), term.modes.end());
  if (distinct.size() != term.modes.size()) {
    throw ValidationError(describe(term) + " repeats a mode index");
  }
  if (!std::isfinite(term.coeff)) throw ValidationError(describe(term) + " has a non-finite coefficient");
}

void validate(const FermionHamiltonian& h) {
  for (const FermionTerm& t : h.terms) {
    validate(t);
    for (std::size_t mode : t.modes) {
      if (mode >= h.num_modes) {
        throw ValidationError(describe(t) + " references mode " + std::to_string(mode) +
                              " but the Hamiltonian has " + std::to_string(h.num_modes));
      }
    }
  }
}

EdgeAlgebraExpr EdgeAlgebraExpr::operator*(const EdgeAlgebraExpr& rhs) const {
  EdgeAlgebraExpr out;
  for (const auto& [c1, m1] : terms) {
    for (const auto& [c2, m2] : rhs.terms) {
      Monomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      out.add(c1 * c2, std::move(m));
    }
  }
  return out;
}

EdgeAlgebraExpr EdgeAlgebraExpr::scaled(Complex c) const {
  EdgeAlgebraExpr out = *this;
  for (auto& [coeff, m] : out.terms) coeff *= c;
  return out;
}

EdgeAlgebraExpr term_to_edge_algebra(const FermionTerm& term) {
  validate(term);
  const auto& md = term.modes;
  EdgeAlgebraExpr e;
  switch (term.kind) {
    case TermKind::kNumber:
      e = one_minus_b(md[0]).scaled(0.5);
      break;
    case TermKind::kCoulomb:
      e = (one_minus_b(md[0]) * one_minus_b(md[1])).scaled(0.25);
      break;
    case TermKind::kHopping:
      e = hopping_like(md[0], md[1], +1.0);
      break;
    case TermKind::kPairing:
      e = hopping_like(md[0], md[1], -1.0);
      break;
    case TermKind::kNumberExcitation:
      // -i (A_ik B_k + B_i A_ik)(1 - B_j) / 4
      e = (hopping_like(md[0], md[2], +1.0) * one_minus_b(md[1])).scaled(0.5);
      break;
    case TermKind::kDoubleExcitation: {
      // A_ij A_kl (-1 - BiBj + BiBk + BiBl + BjBk + BjBl - BkBl - BiBjBkBl) / 8
      const std::size_t i = md[0], j = md[1], k = md[2], l = md[3];
      using F = AlgebraFactor;
      EdgeAlgebraExpr poly;
      poly.add(-1.0, {})
          .add(-1.0, {F::b(i), F::b(j)})
          .add(1.0, {F::b(i), F::b(k)})
          .add(1.0, {F::b(i), F::b(l)})
          .add(1.0, {F::b(j), F::b(k)})
          .add(1.0, {F::b(j), F::b(l)})
          .add(-1.0, {F::b(k), F::b(l)})
          .add(-1.0, {F::b(i), F::b(j), F::b(k), F::b(l)});
      EdgeAlgebraExpr aa;
      aa.add(1.0 / 8.0, {F::a(i, j), F::a(k, l)});
      e = aa * poly;
      break;
    }
  }
  return e.scaled(term.coeff);
}

std::vector<std::pair<std::size_t, std::size_t>> required_edges(const FermionTerm& term) {
  const auto& md = term.modes;
  switch (term.kind) {
    case TermKind::kHopping:
    case TermKind::kPairing: return {{md[0], md[1]}};
    case TermKind::kNumberExcitation: return {{md[0], md[2]}};
    case TermKind::kDoubleExcitation: return {{md[0], md[1]}, {md[2], md[3]}};
    default: return {};
  }
}

Pauli evaluate_monomial(const Monomial& m, const EncodingMap& enc) {
  Pauli p = Pauli::identity(enc.num_qubits());
  for (const AlgebraFactor& f : m) {
    if (f.type == AlgebraFactor::Type::kB) {
      if (f.first >= enc.graph().num_vertices()) {
        throw CompilationError("B_" + std::to_string(f.first) + " is not a vertex of the graph");
      }
      p *= enc.vertex_operator(f.first);
    } else {
      const auto a = enc.edge_operator_between(f.first, f.second);
      if (!a) {
        throw CompilationError("no edge (" + std::to_string(f.first) + "," +
                               std::to_string(f.second) + ") in the interaction graph");
      }
      p *= *a;
    }
  }
  return p;
}

std::size_t QubitHamiltonian::max_weight() const {
  std::size_t w = 0;
  for (const QubitTerm& t : terms) w = std::max(w, t.pauli.weight());
  return w;
}

QubitHamiltonian compile(const FermionHamiltonian& h, const EncodingMap& enc) {
  validate(h);
  if (h.num_modes > enc.graph().num_vertices()) {
    throw CompilationError("Hamiltonian has " + std::to_string(h.num_modes) +
                           " modes but the graph has " +
                           std::to_string(enc.graph().num_vertices()) + " vertices");
  }
  std::map<std::string, Complex> merged;
  std::map<std::string, Pauli> keys;
  for (const FermionTerm& term : h.terms) {
    for (auto [a, b] : required_edges(term)) {
      if (!enc.graph().find_edge(a, b)) {
        throw CompilationError("term " + describe(term) + " needs edge (" + std::to_string(a) +
                               "," + std::to_string(b) + ") which the interaction graph lacks");
      }
    }
    for (const auto& [c, mono] : term_to_edge_algebra(term).terms) {
      const Pauli p = evaluate_monomial(mono, enc);
      // p = i^k * (IXYZ string)
      static constexpr Complex kPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      const Pauli key = p.unsigned_form();
      const std::string s = key.to_string();
      merged[s] += c * kPow[p.string_phase()];
      keys.emplace(s, key);
    }
  }
  QubitHamiltonian out;
  out.num_qubits = enc.num_qubits();
  for (const auto& [s, c] : merged) {
    if (std::abs(c) < kCoefficientCutoff) continue;
    if (std::abs(c.imag()) > kCoefficientCutoff) {
      throw ConsistencyError("compiled coefficient of " + s + " is not real (" +
                             std::to_string(c.real()) + " + " + std::to_string(c.imag()) + "i)");
    }
    out.terms.push_back(QubitTerm{keys.at(s), c.real()});
  }
  return out;
}

bool verify_compiled_commutes_with_stabilizers(const QubitHamiltonian& h,
                                               const StabilizerGroup& s) {
  if (h.num_qubits != s.num_qubits()) throw DimensionError("Hamiltonian and group sizes differ");
  for (const QubitTerm& t : h.terms) {
    for (const Pauli& g : s.generators()) {
      if (!t.pauli.commutes_with(g)) return false;
    }
  }
  return true;
}

}  // namespace sfenc
