#include "sfenc/pauli.hpp"

#include <cctype>

#include "sfenc/errors.hpp"

namespace sfenc {

namespace {

void require_same_size(const Pauli& a, const Pauli& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("Pauli size mismatch: " + std::to_string(a.num_qubits()) +
                         " vs " + std::to_string(b.num_qubits()) + " qubits");
  }
}

}  // namespace

Pauli::Pauli(BitVector x, BitVector z, unsigned phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3U) {
  if (x_.size() != z_.size()) throw DimensionError("X and Z masks differ in length");
}

Pauli Pauli::single(std::size_t num_qubits, std::size_t q, char letter) {
  Pauli p(num_qubits);
  switch (letter) {
    case 'I': break;
    case 'X': p.x_.set(q); break;
    case 'Z': p.z_.set(q); break;
    case 'Y':
      p.x_.set(q);
      p.z_.set(q);
      p.phase_ = 1;
      break;
    default: throw ParseError(std::string("unknown Pauli letter '") + letter + "'");
  }
  return p;
}

Pauli Pauli::parse(std::string_view text) {
  unsigned prefix = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') prefix = 2;
    ++pos;
    if (pos < text.size() && text[pos] == '1') {
      ++pos;
    } else if (pos < text.size() && text[pos] == 'i') {
      prefix += 1;
      ++pos;
    }
  } else if (pos < text.size() && text[pos] == 'i') {
    prefix = 1;
    ++pos;
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  const std::string_view body = text.substr(pos);
  Pauli p(body.size());
  unsigned y_count = 0;
  for (std::size_t q = 0; q < body.size(); ++q) {
    switch (body[q]) {
      case 'I': break;
      case 'X': p.x_.set(q); break;
      case 'Z': p.z_.set(q); break;
      case 'Y':
        p.x_.set(q);
        p.z_.set(q);
        ++y_count;
        break;
      default:
        throw ParseError("invalid character '" + std::string(1, body[q]) +
                         "' at offset " + std::to_string(pos + q) + " in Pauli '" +
                         std::string(text) + "'");
    }
  }
  p.phase_ = (prefix + y_count) & 3U;
  return p;
}

std::size_t Pauli::weight() const { return (x_ | z_).count(); }

bool Pauli::is_hermitian() const {
  // P^dag = i^{2 #Y - phase} * (same masks), so P is Hermitian iff
  // phase == #Y (mod 2).
  return ((phase_ + num_y()) & 1U) == 0;
}

char Pauli::letter(std::size_t q) const {
  const bool xb = x_.get(q);
  const bool zb = z_.get(q);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

unsigned Pauli::string_phase() const {
  return (phase_ + 4U - static_cast<unsigned>(num_y() & 3U)) & 3U;
}

Pauli Pauli::unsigned_form() const {
  Pauli p = *this;
  p.phase_ = static_cast<unsigned>(num_y() & 3U);
  return p;
}

Pauli Pauli::times_i(unsigned k) const {
  Pauli p = *this;
  p.phase_ = (phase_ + k) & 3U;
  return p;
}

Pauli Pauli::operator*(const Pauli& other) const {
  Pauli result = *this;
  result *= other;
  return result;
}

Pauli& Pauli::operator*=(const Pauli& other) {
  require_same_size(*this, other);
  // (X^a Z^b)(X^c Z^d) = (-1)^{b.c} X^{a+c} Z^{b+d} per qubit.
  const unsigned swaps = static_cast<unsigned>(z_.and_count(other.x_) & 1U);
  phase_ = (phase_ + other.phase_ + 2U * swaps) & 3U;
  x_ ^= other.x_;
  z_ ^= other.z_;
  return *this;
}

bool Pauli::commutes_with(const Pauli& other) const {
  require_same_size(*this, other);
  return x_.dot(other.z_) == z_.dot(other.x_);
}

Pauli Pauli::slice(std::size_t first, std::size_t count) const {
  Pauli out(count);
  for (std::size_t q = 0; q < count; ++q) {
    if (x_.get(first + q)) out.x_.set(q);
    if (z_.get(first + q)) out.z_.set(q);
  }
  out.phase_ = (out.weight() == weight()) ? phase_ : static_cast<unsigned>(out.num_y() & 3U);
  return out;
}

Pauli Pauli::embed(std::size_t total, std::size_t first) const {
  if (first + num_qubits() > total) throw DimensionError("embedding out of range");
  Pauli out(total);
  for (std::size_t q = 0; q < num_qubits(); ++q) {
    if (x_.get(q)) out.x_.set(first + q);
    if (z_.get(q)) out.z_.set(first + q);
  }
  out.phase_ = phase_;
  return out;
}

std::string Pauli::to_string() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[string_phase()];
  out.reserve(out.size() + num_qubits());
  for (std::size_t q = 0; q < num_qubits(); ++q) out.push_back(letter(q));
  return out;
}

bool operator<(const Pauli& a, const Pauli& b) {
  if (a.num_qubits() != b.num_qubits()) return a.num_qubits() < b.num_qubits();
  for (std::size_t q = 0; q < a.num_qubits(); ++q) {
    const char la = a.letter(q);
    const char lb = b.letter(q);
    if (la != lb) return la < lb;
  }
  return a.string_phase() < b.string_phase();
}

}  // namespace sfenc
