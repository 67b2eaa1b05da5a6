#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfenc/graph.hpp"
#include "sfenc/pauli.hpp"
#include "sfenc/stabilizer.hpp"

namespace sfenc {

enum class Classification { kLogical, kStabilizer, kDetectable };

std::string_view to_string(Classification c);

struct LogicalWitness {
  Pauli pauli;
  std::size_t weight = 0;
  Classification classification = Classification::kDetectable;
};

inline constexpr std::size_t kMaxSearchWeight = 3;
inline constexpr std::size_t kMaxSearchQubits = 512;

/// Detectable if the syndrome is nonzero, stabilizer if +-p is in S, logical
/// otherwise.
Classification classify(const StabilizerGroup& s, const Pauli& p);

/// Every Hermitian, positive-sign Pauli of weight 1..w_max that is a logical
/// operator, sorted by weight then IXYZ string. An empty result for w_max = 2
/// certifies distance >= 3. Throws ResourceError above the guards.
std::vector<LogicalWitness> find_low_weight_logicals(const StabilizerGroup& s, std::size_t w_max);

/// Number of positive-sign candidates of weight 1..w_max on n qubits.
std::uint64_t candidate_count(std::size_t n, std::size_t w_max);

struct SyndromeCheck {
  bool ok = false;
  /// Colliding pair, or a zero-syndrome error paired with itself.
  std::optional<std::pair<Pauli, Pauli>> counterexample;
};

/// All 3n single-qubit Paulis have nonzero and pairwise distinct syndromes.
SyndromeCheck single_qubit_errors_correctable(const StabilizerGroup& s);
/// Same test restricted to single-qubit errors on the listed qubits.
SyndromeCheck single_qubit_syndromes_distinct(const StabilizerGroup& s,
                                              const std::vector<std::size_t>& qubits);

struct OrderingResult {
  std::string label;
  std::vector<LogicalWitness> witnesses;
};

struct OrderingSweepReport {
  std::vector<OrderingResult> runs;
  bool every_ordering_has_witness = false;
  std::size_t sampled_orderings = 0;
};

/// Superfast-encodes each port assignment, runs the weight-2 logical search
/// and records the witnesses. Requires a regular graph of degree <= 6.
OrderingSweepReport ordering_witness_sweep(const InteractionGraph& g,
                                  const std::vector<InteractionGraph>& orderings);

/// The given graph (default ports) plus `samples` orderings drawn with the
/// seed, as used by the CLI and the acceptance suite.
std::vector<InteractionGraph> sample_orderings(const InteractionGraph& g, std::size_t samples,
                                               std::uint64_t seed);

/// Graph conditions under which the degree-6 GSE family has distance >= 3.
struct DistanceHypotheses {
  bool even_degree_at_least_6 = false;
  bool three_connected = false;
  bool at_most_two_parallel = false;

  bool all() const { return even_degree_at_least_6 && three_connected && at_most_two_parallel; }
};

DistanceHypotheses check_distance_hypotheses(const InteractionGraph& g);

/// Worker count for data-parallel searches: hardware concurrency, capped by
/// SFENC_THREADS when set.
unsigned worker_threads();

}  // namespace sfenc
