#include <set>

#include <gtest/gtest.h>

#include "sfenc/distance.hpp"
#include "sfenc/encoding.hpp"
#include "sfenc/errors.hpp"
#include "sfenc/models.hpp"

using namespace sfenc;

TEST(Distance, K4SuperfastHasLowWeightLogical) {
  const StabilizerGroup s = build_stabilizer_group(superfast_encode(complete_graph(4)));
  const auto w = find_low_weight_logicals(s, 2);
  ASSERT_FALSE(w.empty());
  for (const auto& x : w) {
    EXPECT_LE(x.weight, 2U);
    EXPECT_EQ(classify(s, x.pauli), Classification::kLogical);
    EXPECT_TRUE(s.syndrome(x.pauli).none());
    EXPECT_FALSE(s.contains_up_to_sign(x.pauli));
  }
}

TEST(Distance, K7ErrorCorrectingCertified) {
  const StabilizerGroup s =
      build_stabilizer_group(gse_encode(complete_graph(7), EncodingKind::kErrorCorrecting));
  EXPECT_EQ(candidate_count(21, 2), 1953U);
  EXPECT_TRUE(find_low_weight_logicals(s, 2).empty());
  EXPECT_TRUE(single_qubit_errors_correctable(s).ok);
}

TEST(Distance, StabilizersAreNotLogicals) {
  // Two-qubit repetition code: ZZ is a stabilizer, XX a logical.
  const StabilizerGroup s(2, {Pauli::parse("ZZ")});
  EXPECT_EQ(classify(s, Pauli::parse("ZZ")), Classification::kStabilizer);
  EXPECT_EQ(classify(s, Pauli::parse("XX")), Classification::kLogical);
  EXPECT_EQ(classify(s, Pauli::parse("XI")), Classification::kDetectable);
  const auto w = find_low_weight_logicals(s, 2);
  for (const auto& x : w) EXPECT_NE(x.pauli.unsigned_form(), Pauli::parse("ZZ"));
}

TEST(Distance, Guards) {
  const StabilizerGroup s = build_stabilizer_group(superfast_encode(complete_graph(4)));
  EXPECT_THROW(find_low_weight_logicals(s, 5), ResourceError);
  EXPECT_THROW(find_low_weight_logicals(StabilizerGroup(600, {}), 1), ResourceError);
}

TEST(Distance, EmptyGroupNotCorrectable) {
  const auto r = single_qubit_errors_correctable(StabilizerGroup(3, {}));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.counterexample.has_value());
}

TEST(Distance, AuxiliaryUnitCell) {
  HubbardSpec spec;
  spec.lx = spec.ly = 4;
  const AuxLattice lat = hubbard_superfast_aux_graph(spec);
  const StabilizerGroup s = build_stabilizer_group(superfast_encode(lat.graph), lat.auxiliary);
  EXPECT_TRUE(single_qubit_syndromes_distinct(s, lat.unit_cell_qubits(1, 1)).ok);
}

TEST(Distance, OrderingSweeps) {
  for (const InteractionGraph& g : {complete_graph(4), octahedron_graph(), complete_graph(7)}) {
    const auto orderings = sample_orderings(g, 10, 0);
    EXPECT_EQ(orderings.size(), 11U);
    const OrderingSweepReport r = ordering_witness_sweep(g, orderings);
    EXPECT_TRUE(r.every_ordering_has_witness);
    EXPECT_EQ(r.sampled_orderings, 11U);
  }
  EXPECT_THROW(ordering_witness_sweep(complete_graph(9),
                                    {complete_graph(9)}),
               PreconditionError);
}

TEST(Distance, SampledOrderingsAreDeterministic) {
  const auto a = sample_orderings(complete_graph(5), 3, 42);
  const auto b = sample_orderings(complete_graph(5), 3, 42);
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (EdgeId e = 0; e < a[k].num_edges(); ++e) {
      EXPECT_EQ(a[k].edge(e).port_u, b[k].edge(e).port_u);
      EXPECT_EQ(a[k].edge(e).port_v, b[k].edge(e).port_v);
    }
  }
}

TEST(Distance, Hypotheses) {
  EXPECT_TRUE(check_distance_hypotheses(complete_graph(7)).all());
  EXPECT_FALSE(check_distance_hypotheses(complete_graph(5)).all());
}
