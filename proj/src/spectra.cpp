#include "sfenc/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "sfenc/errors.hpp"

namespace sfenc {

namespace {

constexpr Complex kI{0.0, 1.0};

SparseOperator identity_op(std::size_t dim) {
  SparseOperator id(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  id.setIdentity();
  return id;
}

std::uint64_t mask_of(const BitVector& b) {
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < b.size(); ++q) {
    if (b.get(q)) m |= std::uint64_t{1} << q;
  }
  return m;
}

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConsistencyError("eigensolver did not converge");
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool DenseOperator::is_hermitian(double tol) const {
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

SparseOperator annihilation(std::size_t j, std::size_t m) {
  if (j >= m) throw DimensionError("mode index out of range");
  const std::size_t dim = std::size_t{1} << m;
  std::vector<Eigen::Triplet<Complex>> entries;
  for (std::size_t n = 0; n < dim; ++n) {
    if (!((n >> j) & 1U)) continue;
    const int below = std::popcount(n & ((std::size_t{1} << j) - 1));
    entries.emplace_back(static_cast<Eigen::Index>(n ^ (std::size_t{1} << j)),
                         static_cast<Eigen::Index>(n), below % 2 ? -1.0 : 1.0);
  }
  SparseOperator a(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  a.setFromTriplets(entries.begin(), entries.end());
  return a;
}

std::vector<SparseOperator> majorana_operators(std::size_t m) {
  std::vector<SparseOperator> c;
  for (std::size_t j = 0; j < m; ++j) {
    const SparseOperator a = annihilation(j, m);
    const SparseOperator ad = a.adjoint();
    c.push_back(a + ad);
    c.push_back(-kI * (a - ad));
  }
  return c;
}

SparseOperator fock_term(const FermionTerm& term, std::size_t m) {
  validate(term);
  for (std::size_t mode : term.modes) {
    if (mode >= m) throw DimensionError("term mode out of range");
  }
  std::vector<SparseOperator> a, ad;
  for (std::size_t j = 0; j < m; ++j) {
    a.push_back(annihilation(j, m));
    ad.push_back(a.back().adjoint());
  }
  const auto& md = term.modes;
  SparseOperator op;
  switch (term.kind) {
    case TermKind::kNumber:
      op = ad[md[0]] * a[md[0]];
      break;
    case TermKind::kCoulomb:
      op = ad[md[0]] * ad[md[1]] * a[md[1]] * a[md[0]];
      break;
    case TermKind::kHopping:
      op = ad[md[0]] * a[md[1]] + ad[md[1]] * a[md[0]];
      break;
    case TermKind::kNumberExcitation:
      op = ad[md[0]] * ad[md[1]] * a[md[1]] * a[md[2]] + ad[md[2]] * ad[md[1]] * a[md[1]] * a[md[0]];
      break;
    case TermKind::kPairing:
      op = a[md[0]] * a[md[1]] + ad[md[1]] * ad[md[0]];
      break;
    case TermKind::kDoubleExcitation:
      op = ad[md[0]] * ad[md[1]] * a[md[2]] * a[md[3]] + ad[md[3]] * ad[md[2]] * a[md[1]] * a[md[0]];
      break;
  }
  return op * Complex(term.coeff);
}

SparseOperator edge_algebra_fock(const EdgeAlgebraExpr& expr, std::size_t m) {
  const auto c = majorana_operators(m);
  const std::size_t dim = std::size_t{1} << m;
  SparseOperator total(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& [coeff, mono] : expr.terms) {
    SparseOperator prod = identity_op(dim);
    for (const AlgebraFactor& f : mono) {
      if (f.first >= m || (f.type == AlgebraFactor::Type::kA && f.second >= m)) {
        throw DimensionError("edge-algebra factor out of range");
      }
      if (f.type == AlgebraFactor::Type::kA) {
        prod = prod * (-kI * (c[2 * f.first] * c[2 * f.second]));
      } else {
        prod = prod * (-kI * (c[2 * f.first] * c[2 * f.first + 1]));
      }
    }
    total += coeff * prod;
  }
  return total;
}

DenseOperator fock_matrix(const FermionHamiltonian& h) {
  validate(h);
  if (h.num_modes > kMaxDenseModes) {
    throw ResourceError("Fock matrix needs m <= " + std::to_string(kMaxDenseModes) + " modes, got " +
                        std::to_string(h.num_modes));
  }
  const std::size_t dim = std::size_t{1} << h.num_modes;
  SparseOperator total(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const FermionTerm& t : h.terms) total += fock_term(t, h.num_modes);
  return DenseOperator{h.num_modes, Eigen::MatrixXcd(total)};
}

std::vector<double> even_sector_spectrum(const DenseOperator& h, std::size_t m) {
  if (h.k != m || h.matrix.rows() != static_cast<Eigen::Index>(std::size_t{1} << m)) {
    throw DimensionError("operator size does not match the mode count");
  }
  std::vector<Eigen::Index> even;
  for (std::size_t n = 0; n < (std::size_t{1} << m); ++n) {
    if (std::popcount(n) % 2 == 0) even.push_back(static_cast<Eigen::Index>(n));
  }
  const auto k = static_cast<Eigen::Index>(even.size());
  Eigen::MatrixXcd sub(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = h.matrix(even[r], even[c]);
  }
  return sorted_eigenvalues(sub);
}

Eigen::MatrixXcd apply_pauli(const Pauli& p, const Eigen::MatrixXcd& v) {
  const std::uint64_t xm = mask_of(p.x());
  const std::uint64_t zm = mask_of(p.z());
  static constexpr Complex kPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex scale = kPow[p.phase() % 4];
  Eigen::MatrixXcd out(v.rows(), v.cols());
  for (Eigen::Index b = 0; b < v.rows(); ++b) {
    const auto bits = static_cast<std::uint64_t>(b);
    const Complex s = std::popcount(zm & bits) % 2 ? -scale : scale;
    out.row(static_cast<Eigen::Index>(bits ^ xm)) = s * v.row(b);
  }
  return out;
}

Eigen::MatrixXcd apply_hamiltonian(const QubitHamiltonian& h, const Eigen::MatrixXcd& v) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(v.rows(), v.cols());
  for (const QubitTerm& t : h.terms) out += t.coeff * apply_pauli(t.pauli, v);
  return out;
}

Codespace codespace(const StabilizerGroup& s) {
  const std::size_t n = s.num_qubits();
  if (n > kMaxSpectrumQubits) {
    throw ResourceError("codespace diagonalization needs n <= " +
                        std::to_string(kMaxSpectrumQubits) + " qubits, got " + std::to_string(n));
  }
  const std::size_t full = std::size_t{1} << n;
  const std::size_t dim = std::size_t{1} << (n - s.rank());
  Codespace c{n, dim, {}};
  if (s.size() == 0) {
    c.basis = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(full),
                                         static_cast<Eigen::Index>(full));
    return c;
  }
  const std::size_t samples = std::min(full, dim + 8);
  std::mt19937_64 rng(0);
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd v(static_cast<Eigen::Index>(full), static_cast<Eigen::Index>(samples));
  for (Eigen::Index col = 0; col < v.cols(); ++col) {
    for (Eigen::Index row = 0; row < v.rows(); ++row) v(row, col) = Complex(normal(rng), normal(rng));
  }
  for (const Pauli& g : s.generators()) v = 0.5 * (v + apply_pauli(g, v));

  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(v);
  qr.setThreshold(1e-8);
  if (static_cast<std::size_t>(qr.rank()) != dim) {
    throw ConsistencyError("projected codespace has rank " + std::to_string(qr.rank()) +
                           ", expected 2^(n - rank) = " + std::to_string(dim));
  }
  const Eigen::MatrixXcd q = qr.householderQ();
  c.basis = q.leftCols(static_cast<Eigen::Index>(dim));
  return c;
}

double identity_deviation_on_codespace(const Pauli& p, const Codespace& c) {
  if (c.basis.cols() == 0) return 0.0;
  return (apply_pauli(p, c.basis) - c.basis).cwiseAbs().maxCoeff();
}

CodespaceSpectrum codespace_analysis(const QubitHamiltonian& h, const StabilizerGroup& s) {
  if (h.num_qubits != s.num_qubits()) throw DimensionError("Hamiltonian and group sizes differ");
  const Codespace c = codespace(s);
  for (const Pauli& g : s.generators()) {
    if (identity_deviation_on_codespace(g, c) > 1e-9) {
      throw ConsistencyError("codespace basis is not stabilized by " + g.to_string());
    }
  }
  const Eigen::MatrixXcd hv = apply_hamiltonian(h, c.basis);
  Eigen::MatrixXcd reduced = c.basis.adjoint() * hv;
  if ((reduced - reduced.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
    throw ConsistencyError("projected Hamiltonian is not Hermitian");
  }
  reduced = 0.5 * (reduced + reduced.adjoint()).eval();
  CodespaceSpectrum out;
  out.dimension = c.dimension;
  out.leakage = hv.size() ? (hv - c.basis * reduced).cwiseAbs().maxCoeff() : 0.0;
  out.eigenvalues = sorted_eigenvalues(reduced);
  return out;
}

std::vector<double> codespace_spectrum(const QubitHamiltonian& h, const StabilizerGroup& s) {
  return codespace_analysis(h, s).eigenvalues;
}

SpectrumComparison compare_spectra(std::vector<double> a, std::vector<double> b, double tol) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  SpectrumComparison r;
  r.size_a = a.size();
  r.size_b = b.size();
  if (a.size() != b.size()) {
    r.message = "length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    return r;
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    r.max_deviation = std::max(r.max_deviation, std::abs(a[k] - b[k]));
  }
  r.pass = r.max_deviation <= tol;
  r.message = r.pass ? "spectra agree" : "max deviation exceeds tolerance";
  return r;
}

}  // namespace sfenc
