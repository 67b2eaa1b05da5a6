#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "sfenc/fermion.hpp"
#include "sfenc/stabilizer.hpp"

namespace sfenc {

inline constexpr std::size_t kMaxDenseModes = 14;
inline constexpr std::size_t kMaxSpectrumQubits = 14;
inline constexpr double kHermitianTolerance = 1e-10;

using SparseOperator = Eigen::SparseMatrix<Complex>;

/// 2^k x 2^k matrix on k modes or qubits. Basis index bit j is mode/qubit j.
struct DenseOperator {
  std::size_t k = 0;
  Eigen::MatrixXcd matrix;

  bool is_hermitian(double tol = kHermitianTolerance) const;
};

/// Jordan-Wigner annihilation operator a_j on m modes:
/// a_j |n> = (-1)^{n_0 + ... + n_{j-1}} |n - e_j> when n_j = 1.
SparseOperator annihilation(std::size_t j, std::size_t m);
/// c_{2j} = a_j + a_j^+, c_{2j+1} = -i (a_j - a_j^+), in that order.
std::vector<SparseOperator> majorana_operators(std::size_t m);

/// Second-quantized operator of a single term (coefficient included).
SparseOperator fock_term(const FermionTerm& term, std::size_t m);
/// Edge-algebra expression with A_jk = -i c_2j c_2k and B_j = -i c_2j c_2j+1.
SparseOperator edge_algebra_fock(const EdgeAlgebraExpr& expr, std::size_t m);

/// Throws ResourceError for m > kMaxDenseModes.
DenseOperator fock_matrix(const FermionHamiltonian& h);

/// Eigenvalues on basis states of even occupation, ascending.
std::vector<double> even_sector_spectrum(const DenseOperator& h, std::size_t m);

/// Orthonormal basis (columns) of the common +1 eigenspace of the generators.
struct Codespace {
  std::size_t num_qubits = 0;
  std::size_t dimension = 0;
  Eigen::MatrixXcd basis;
};

/// Projects seeded random vectors with prod (I + g)/2 and orthonormalises.
/// Throws ResourceError past kMaxSpectrumQubits, ConsistencyError when the
/// projected rank differs from 2^{n - rank(S)}.
Codespace codespace(const StabilizerGroup& s);

/// P * v for a Pauli acting on the columns of v.
Eigen::MatrixXcd apply_pauli(const Pauli& p, const Eigen::MatrixXcd& v);
Eigen::MatrixXcd apply_hamiltonian(const QubitHamiltonian& h, const Eigen::MatrixXcd& v);

/// max |P v - v| over the codespace basis.
double identity_deviation_on_codespace(const Pauli& p, const Codespace& c);

struct CodespaceSpectrum {
  std::vector<double> eigenvalues;
  std::size_t dimension = 0;
  /// max |H V - V (V^+ H V)|; nonzero when H does not preserve the codespace.
  double leakage = 0.0;
};

CodespaceSpectrum codespace_analysis(const QubitHamiltonian& h, const StabilizerGroup& s);
std::vector<double> codespace_spectrum(const QubitHamiltonian& h, const StabilizerGroup& s);

struct SpectrumComparison {
  bool pass = false;
  double max_deviation = 0.0;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::string message;
};

SpectrumComparison compare_spectra(std::vector<double> a, std::vector<double> b, double tol);

}  // namespace sfenc
