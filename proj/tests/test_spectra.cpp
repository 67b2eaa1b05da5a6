#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sfenc/encoding.hpp"
#include "sfenc/errors.hpp"
#include "sfenc/models.hpp"
#include "sfenc/spectra.hpp"

using namespace sfenc;

TEST(Fock, Examples) {
  const DenseOperator n = fock_matrix({1, {{TermKind::kNumber, {0}, 1.0}}});
  EXPECT_LT((n.matrix - Eigen::Vector2cd(0, 1).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff(), 1e-15);
  const DenseOperator hop = fock_matrix({2, {{TermKind::kHopping, {0, 1}, 1.0}}});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hop.matrix);
  const Eigen::VectorXd ev = es.eigenvalues();
  EXPECT_NEAR(ev(0), -1, 1e-12);
  EXPECT_NEAR(ev(1), 0, 1e-12);
  EXPECT_NEAR(ev(2), 0, 1e-12);
  EXPECT_NEAR(ev(3), 1, 1e-12);
  EXPECT_EQ(even_sector_spectrum(hop, 2), (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(even_sector_spectrum(n, 1), (std::vector<double>{0.0}));
  EXPECT_THROW(fock_matrix({15, {}}), ResourceError);
}

TEST(Fock, MajoranaRelations) {
  const auto c = majorana_operators(3);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(8, 8);
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Eigen::MatrixXcd ac = Eigen::MatrixXcd(c[j] * c[k] + c[k] * c[j]);
      EXPECT_EQ((ac - (j == k ? 2.0 : 0.0) * id).cwiseAbs().maxCoeff(), 0.0);
    }
  }
}

TEST(Fock, MatchesOracle) {
  const auto h = random_term_hamiltonian(complete_graph(4), 9);
  const oracle::Fock f(4);
  EXPECT_LT(oracle::max_abs(fock_matrix(h).matrix - f.hamiltonian(h)), 1e-12);
  for (const auto& t : h.terms) {
    EXPECT_LT(oracle::max_abs(Eigen::MatrixXcd(edge_algebra_fock(term_to_edge_algebra(t), 4)) - f.term(t)), 1e-12);
  }
}

TEST(ApplyPauli, MatchesKronecker) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd v(16, 3);
  for (Eigen::Index i = 0; i < v.size(); ++i) v.data()[i] = Complex(nd(rng), nd(rng));
  for (const char* s : {"+XIZY", "-iZZXI", "+iYYYY", "-IIIX"}) {
    const Pauli p = Pauli::parse(s);
    EXPECT_LT(oracle::max_abs(apply_pauli(p, v) - oracle::from_symplectic(p) * v), 1e-12) << s;
  }
}

TEST(Codespace, EmptyGroupGivesFullSpectrum) {
  const QubitHamiltonian h{2, {{Pauli::parse("ZI"), 1.0}, {Pauli::parse("XX"), 0.5}}};
  const auto ev = codespace_spectrum(h, StabilizerGroup(2, {}));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(oracle::from_text("ZI") + 0.5 * oracle::from_text("XX"));
  ASSERT_EQ(ev.size(), 4U);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(ev[k], es.eigenvalues()(k), 1e-12);
}

TEST(Codespace, K4ZeroHamiltonian) {
  const EncodingMap enc = superfast_encode(complete_graph(4));
  const auto ev = codespace_spectrum(QubitHamiltonian{6, {}}, build_stabilizer_group(enc));
  EXPECT_EQ(ev, std::vector<double>(8, 0.0));
}

TEST(Codespace, LoopOperatorsActAsIdentity) {
  const EncodingMap enc = superfast_encode(complete_graph(4));
  const Codespace c = codespace(build_stabilizer_group(enc));
  std::mt19937_64 rng(4);
  const InteractionGraph& g = enc.graph();
  for (int k = 0; k < 20; ++k) {
    // Random closed walk from vertex 0.
    Path p{{0}, {}};
    const std::size_t len = 2 + rng() % 6;
    for (std::size_t s = 0; s < len; ++s) {
      const Vertex at = p.vertices.back();
      const EdgeId e = g.incident(at)[rng() % g.degree(at)];
      p.edges.push_back(e);
      p.vertices.push_back(g.edge(e).other(at));
    }
    const Vertex end = p.vertices.back();
    if (end != 0) {
      const EdgeId e = *g.find_edge(end, 0);
      p.edges.push_back(e);
      p.vertices.push_back(0);
    }
    EXPECT_LT(identity_deviation_on_codespace(path_operator(enc, p), c), 1e-10);
  }
}

TEST(Codespace, FourCycleGseMatchesFock) {
  const InteractionGraph g = cycle_graph(4);
  FermionHamiltonian h{4, {}};
  for (const Edge& e : g.edges()) h.terms.push_back({TermKind::kHopping, {e.u, e.v}, -1.0});
  for (std::size_t i = 0; i < 4; ++i) h.terms.push_back({TermKind::kNumber, {i}, 0.1 * (i + 1)});
  const EncodingMap enc = gse_encode(g, EncodingKind::kFenwick);
  const auto cs = codespace_spectrum(compile(h, enc), build_stabilizer_group(enc));
  const oracle::Fock f(4);
  EXPECT_TRUE(compare_spectra(cs, f.even_spectrum(f.hamiltonian(h)), 1e-9).pass);
}

TEST(Compare, Reports) {
  EXPECT_TRUE(compare_spectra({1, 2}, {1, 2}, 0).pass);
  EXPECT_EQ(compare_spectra({1, 2}, {1, 2}, 0).max_deviation, 0.0);
  const auto r = compare_spectra({1, 2}, {1}, 1);
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.message.find("2 vs 1"), std::string::npos);
  EXPECT_FALSE(compare_spectra({1}, {1.1}, 1e-9).pass);
}

TEST(Codespace, Guard) {
  EXPECT_THROW(codespace(StabilizerGroup(15, {})), ResourceError);
}
