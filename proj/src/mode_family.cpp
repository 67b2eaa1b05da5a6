#include "sfenc/mode_family.hpp"

#include <string>

#include "sfenc/errors.hpp"

namespace sfenc {

namespace {

std::string rotate_right(const std::string& s, std::size_t t) {
  t %= s.size();
  if (t == 0) return s;
  return s.substr(s.size() - t) + s.substr(0, s.size() - t);
}

std::size_t symplectic_rank(std::vector<BitVector> rows) {
  std::size_t rank = 0;
  for (std::size_t col = 0; !rows.empty() && col < rows[0].size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Pauli ModeFamily::parity() const {
  Pauli product = Pauli::identity(num_qubits());
  for (const Pauli& g : modes) product *= g;
  // (-i)^{d/2} = i^{3 d/2}
  return product.times_i(static_cast<unsigned>((3 * num_qubits()) % 4));
}

bool ModeFamily::satisfies_majorana_relations() const {
  if (modes.size() != degree || degree % 2 != 0) return false;
  const Pauli id = Pauli::identity(num_qubits());
  std::vector<BitVector> rows;
  for (std::size_t p = 0; p < modes.size(); ++p) {
    if (modes[p].num_qubits() != num_qubits()) return false;
    if (!modes[p].is_hermitian() || modes[p] * modes[p] != id) return false;
    for (std::size_t q = p + 1; q < modes.size(); ++q) {
      if (modes[p].commutes_with(modes[q])) return false;
    }
    BitVector row(2 * num_qubits());
    for (std::size_t k = 0; k < num_qubits(); ++k) {
      row.set(k, modes[p].x().get(k));
      row.set(num_qubits() + k, modes[p].z().get(k));
    }
    rows.push_back(std::move(row));
  }
  return symplectic_rank(std::move(rows)) == 2 * num_qubits();
}

bool ModeFamily::satisfies_distance_conditions() const {
  const Pauli b = parity();
  if (b.weight() < 3) return false;
  for (std::size_t p = 0; p < modes.size(); ++p) {
    if (modes[p].weight() < 2 || (b * modes[p]).weight() < 2) return false;
    for (std::size_t q = p + 1; q < modes.size(); ++q) {
      if ((b * modes[p] * modes[q]).weight() < 2) return false;
    }
  }
  return true;
}

ModeFamily mode_family_degree6() {
  ModeFamily f;
  f.degree = 6;
  for (const char* s : {"ZXI", "ZYI", "IZX", "IZY", "XIZ", "YIZ"}) f.modes.push_back(Pauli::parse(s));
  return f;
}

ModeFamily mode_family_general(std::size_t degree) {
  if (degree % 2 != 0 || degree < 6) {
    throw PreconditionError("error-correcting mode family needs even degree >= 6, got " +
                            std::to_string(degree));
  }
  const std::size_t half = degree / 2;
  const std::size_t k = half / 2;
  std::vector<std::string> strings;
  if (half % 2 == 1) {
    const std::string g1 = std::string(k, 'Z') + "X" + std::string(k, 'I');
    const std::string g2 = std::string(k, 'Z') + "Y" + std::string(k, 'I');
    for (std::size_t t = 0; t < half; ++t) {
      strings.push_back(rotate_right(g1, t));
      strings.push_back(rotate_right(g2, t));
    }
  } else {
    const std::string seeds[4] = {
        std::string(k, 'Z') + "X" + std::string(k - 1, 'I'),
        std::string(k, 'Z') + "Y" + std::string(k - 1, 'I'),
        "X" + std::string(k, 'I') + std::string(k - 1, 'Z'),
        "Y" + std::string(k, 'I') + std::string(k - 1, 'Z'),
    };
    for (std::size_t pair = 0; pair < 2; ++pair) {
      for (std::size_t t = 0; t < k; ++t) {
        strings.push_back(rotate_right(seeds[2 * pair], t));
        strings.push_back(rotate_right(seeds[2 * pair + 1], t));
      }
    }
  }
  ModeFamily f;
  f.degree = degree;
  for (const auto& s : strings) f.modes.push_back(Pauli::parse(s));
  return f;
}

std::vector<long> fenwick_parents(std::size_t n) {
  std::vector<long> parent(n, -1);
  // Havlicek et al. recursion: connect R to floor((L+R)/2), recurse on halves.
  auto split = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
    if (lo == hi) return;
    const std::size_t mid = (lo + hi) / 2;
    parent[mid] = static_cast<long>(hi);
    self(self, lo, mid);
    self(self, mid + 1, hi);
  };
  if (n > 0) split(split, 0, n - 1);
  return parent;
}

ModeFamily mode_family_fenwick(std::size_t degree) {
  if (degree % 2 != 0 || degree == 0) {
    throw PreconditionError("Fenwick mode family needs a positive even degree, got " +
                            std::to_string(degree));
  }
  const std::size_t n = degree / 2;
  const std::vector<long> parent = fenwick_parents(n);
  // Subtree of node j is the interval [low[j], j].
  std::vector<std::size_t> low(n);
  for (std::size_t j = 0; j < n; ++j) low[j] = j;
  for (std::size_t j = 0; j < n; ++j) {
    for (long a = parent[j]; a >= 0; a = parent[static_cast<std::size_t>(a)]) {
      low[static_cast<std::size_t>(a)] = std::min(low[static_cast<std::size_t>(a)], j);
    }
  }
  ModeFamily f;
  f.degree = degree;
  for (std::size_t j = 0; j < n; ++j) {
    std::string even(n, 'I');
    std::string odd(n, 'I');
    // Update set: ancestors.
    for (long a = parent[j]; a >= 0; a = parent[static_cast<std::size_t>(a)]) {
      even[static_cast<std::size_t>(a)] = 'X';
      odd[static_cast<std::size_t>(a)] = 'X';
    }
    // Parity set: subtrees covering [0, j). Remainder set drops j's children.
    for (long k = static_cast<long>(j) - 1; k >= 0;
         k = static_cast<long>(low[static_cast<std::size_t>(k)]) - 1) {
      const auto kk = static_cast<std::size_t>(k);
      even[kk] = 'Z';
      if (parent[kk] != static_cast<long>(j)) odd[kk] = 'Z';
    }
    even[j] = 'X';
    odd[j] = 'Y';
    f.modes.push_back(Pauli::parse(even));
    f.modes.push_back(Pauli::parse(odd));
  }
  return f;
}

}  // namespace sfenc
