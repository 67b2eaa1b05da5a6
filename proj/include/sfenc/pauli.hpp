#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "sfenc/bitvector.hpp"

namespace sfenc {

/// An n-qubit Pauli operator with exact phase.
///
/// Stored as i^phase * prod_q X_q^{x_q} Z_q^{z_q} with the X factor to the left
/// of the Z factor on every qubit. A Y on qubit q is x_q = z_q = 1 and carries
/// one extra factor of i in the phase, since Y = iXZ. The representation is
/// canonical: two Paulis are equal exactly when n, both masks and the phase
/// agree.
///
/// Text form: a prefix from {+, -, +i, -i} followed by one letter in IXYZ per
/// qubit, qubit 0 first. The prefix is the scalar in front of the IXYZ tensor
/// product (so "+Y" is Hermitian and "+i Y" is not).
class Pauli {
 public:
  Pauli() = default;
  explicit Pauli(std::size_t num_qubits)
      : x_(num_qubits), z_(num_qubits) {}
  Pauli(BitVector x, BitVector z, unsigned phase);

  static Pauli identity(std::size_t num_qubits) { return Pauli(num_qubits); }
  /// Single-qubit Pauli 'X', 'Y' or 'Z' on qubit q, identity elsewhere.
  static Pauli single(std::size_t num_qubits, std::size_t q, char letter);
  /// Parses the text form. Throws ParseError.
  static Pauli parse(std::string_view text);

  std::size_t num_qubits() const { return x_.size(); }
  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }
  /// Exponent of i in the canonical X-before-Z form, in [0, 4).
  unsigned phase() const { return phase_; }

  std::size_t weight() const;
  std::size_t num_y() const { return x_.and_count(z_); }
  bool is_hermitian() const;
  bool is_identity_up_to_phase() const { return x_.none() && z_.none(); }

  /// Letter 'I', 'X', 'Y' or 'Z' acting on qubit q.
  char letter(std::size_t q) const;
  /// Exponent k such that *this = i^k * (IXYZ tensor product).
  unsigned string_phase() const;
  /// Same operator with the scalar prefix dropped (the Hermitian IXYZ string).
  Pauli unsigned_form() const;

  Pauli negated() const { return times_i(2); }
  Pauli times_i(unsigned k) const;

  /// Operator product this * other with exact phase. Throws DimensionError.
  Pauli operator*(const Pauli& other) const;
  Pauli& operator*=(const Pauli& other);

  /// Symplectic inner product test. Throws DimensionError.
  bool commutes_with(const Pauli& other) const;

  /// Restriction to qubits [first, first + count) as a count-qubit Pauli; the
  /// phase is kept only when the rest of the support is trivial.
  Pauli slice(std::size_t first, std::size_t count) const;
  /// Embeds *this on qubits [first, first + size()) of a total-qubit register.
  Pauli embed(std::size_t total, std::size_t first) const;

  std::string to_string() const;

  friend bool operator==(const Pauli&, const Pauli&) = default;

  /// Orders by unsigned IXYZ string, then phase. Used for deterministic output.
  friend bool operator<(const Pauli& a, const Pauli& b);

 private:
  BitVector x_;
  BitVector z_;
  unsigned phase_ = 0;
};

/// Free-function forms used throughout the library.
inline Pauli multiply(const Pauli& p, const Pauli& q) { return p * q; }
inline bool commutes(const Pauli& p, const Pauli& q) { return p.commutes_with(q); }

/// Hash over the symplectic part only (masks, not phase).
struct SymplecticHash {
  std::size_t operator()(const Pauli& p) const {
    return p.x().hash() * 31 + p.z().hash();
  }
};
struct SymplecticEqual {
  bool operator()(const Pauli& a, const Pauli& b) const {
    return a.x() == b.x() && a.z() == b.z();
  }
};

}  // namespace sfenc
