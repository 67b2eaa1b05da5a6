#include "sfenc/distance.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_map>

#include "sfenc/encoding.hpp"
#include "sfenc/errors.hpp"

namespace sfenc {

namespace {

constexpr char kLetters[3] = {'X', 'Y', 'Z'};

/// Syndromes are linear, so candidates are scored by XOR of precomputed
/// single-qubit syndromes before any membership test.
struct SingleSyndromes {
  std::size_t n = 0;
  std::vector<BitVector> table;  // index 3q + letter

  explicit SingleSyndromes(const StabilizerGroup& s) : n(s.num_qubits()) {
    table.reserve(3 * n);
    for (std::size_t q = 0; q < n; ++q) {
      for (char c : kLetters) table.push_back(s.syndrome(Pauli::single(n, q, c)));
    }
  }
  const BitVector& at(std::size_t q, std::size_t letter) const { return table[3 * q + letter]; }
};

Pauli make_candidate(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& sites) {
  Pauli p = Pauli::identity(n);
  for (auto [q, letter] : sites) p *= Pauli::single(n, q, kLetters[letter]);
  return p;  // product of single-qubit Paulis on distinct qubits: Hermitian, sign +
}

bool witness_less(const LogicalWitness& a, const LogicalWitness& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  return a.pauli.to_string() < b.pauli.to_string();
}

}  // namespace

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::kLogical: return "logical";
    case Classification::kStabilizer: return "stabilizer";
    case Classification::kDetectable: return "detectable";
  }
  return "unknown";
}

unsigned worker_threads() {
  unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SFENC_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) hw = std::min(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

Classification classify(const StabilizerGroup& s, const Pauli& p) {
  if (s.syndrome(p).any()) return Classification::kDetectable;
  if (s.contains_up_to_sign(p)) return Classification::kStabilizer;
  return Classification::kLogical;
}

std::uint64_t candidate_count(std::size_t n, std::size_t w_max) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  std::uint64_t pow3 = 1;
  for (std::size_t w = 1; w <= w_max && w <= n; ++w) {
    binom = binom * (n - w + 1) / w;
    pow3 *= 3;
    total += binom * pow3;
  }
  return total;
}

std::vector<LogicalWitness> find_low_weight_logicals(const StabilizerGroup& s, std::size_t w_max) {
  const std::size_t n = s.num_qubits();
  if (w_max > kMaxSearchWeight) {
    throw ResourceError("low-weight search is limited to weight " +
                        std::to_string(kMaxSearchWeight) + ", got " + std::to_string(w_max));
  }
  if (n > kMaxSearchQubits) {
    throw ResourceError("low-weight search is limited to " + std::to_string(kMaxSearchQubits) +
                        " qubits, got " + std::to_string(n));
  }
  const SingleSyndromes singles(s);
  std::vector<LogicalWitness> found;
  std::mutex found_mutex;

  auto consider = [&](const BitVector& syndrome,
                      const std::vector<std::pair<std::size_t, std::size_t>>& sites,
                      std::vector<LogicalWitness>& local) {
    if (syndrome.any()) return;
    Pauli p = make_candidate(n, sites);
    if (s.contains_up_to_sign(p)) return;
    local.push_back(LogicalWitness{std::move(p), sites.size(), Classification::kLogical});
  };

  // Weight 1 serially; weights 2 and 3 are partitioned over the first qubit.
  for (std::size_t q = 0; q < n && w_max >= 1; ++q) {
    for (std::size_t a = 0; a < 3; ++a) consider(singles.at(q, a), {{q, a}}, found);
  }
  if (w_max >= 2 && n >= 2) {
    const unsigned workers = std::min<unsigned>(worker_threads(), static_cast<unsigned>(n));
    auto run = [&](unsigned worker) {
      std::vector<LogicalWitness> local;
      for (std::size_t q1 = worker; q1 < n; q1 += workers) {
        for (std::size_t q2 = q1 + 1; q2 < n; ++q2) {
          for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
              const BitVector s12 = singles.at(q1, a) ^ singles.at(q2, b);
              consider(s12, {{q1, a}, {q2, b}}, local);
              if (w_max < 3) continue;
              for (std::size_t q3 = q2 + 1; q3 < n; ++q3) {
                for (std::size_t c = 0; c < 3; ++c) {
                  consider(s12 ^ singles.at(q3, c), {{q1, a}, {q2, b}, {q3, c}}, local);
                }
              }
            }
          }
        }
      }
      std::lock_guard<std::mutex> lock(found_mutex);
      found.insert(found.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
    };
    if (workers <= 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
      for (auto& t : pool) t.join();
    }
  }
  std::sort(found.begin(), found.end(), witness_less);
  return found;
}

SyndromeCheck single_qubit_syndromes_distinct(const StabilizerGroup& s,
                                              const std::vector<std::size_t>& qubits) {
  const std::size_t n = s.num_qubits();
  std::unordered_map<BitVector, Pauli> seen;
  for (std::size_t q : qubits) {
    if (q >= n) throw DimensionError("qubit " + std::to_string(q) + " out of range");
    for (char c : kLetters) {
      Pauli e = Pauli::single(n, q, c);
      BitVector syn = s.syndrome(e);
      if (syn.none()) return SyndromeCheck{false, std::make_pair(e, e)};
      auto [it, inserted] = seen.emplace(std::move(syn), e);
      if (!inserted) return SyndromeCheck{false, std::make_pair(it->second, e)};
    }
  }
  return SyndromeCheck{true, std::nullopt};
}

SyndromeCheck single_qubit_errors_correctable(const StabilizerGroup& s) {
  std::vector<std::size_t> all(s.num_qubits());
  for (std::size_t q = 0; q < all.size(); ++q) all[q] = q;
  return single_qubit_syndromes_distinct(s, all);
}

std::vector<InteractionGraph> sample_orderings(const InteractionGraph& g, std::size_t samples,
                                               std::uint64_t seed) {
  std::vector<InteractionGraph> out{g};
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) out.push_back(g.with_random_ports(rng));
  return out;
}

OrderingSweepReport ordering_witness_sweep(const InteractionGraph& g,
                                  const std::vector<InteractionGraph>& orderings) {
  const std::size_t d = g.degree(0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != d) throw PreconditionError("ordering sweep needs a regular graph");
  }
  if (d > 6) throw PreconditionError("ordering sweep needs degree <= 6");
  OrderingSweepReport report;
  report.every_ordering_has_witness = true;
  for (std::size_t k = 0; k < orderings.size(); ++k) {
    const InteractionGraph& h = orderings[k];
    if (h.num_vertices() != g.num_vertices() || h.num_edges() != g.num_edges()) {
      throw ValidationError("ordering " + std::to_string(k) + " is not over the same graph");
    }
    const EncodingMap enc = superfast_encode(h);
    const StabilizerGroup s = build_stabilizer_group(enc);
    OrderingResult run;
    run.label = "ordering " + std::to_string(k);
    run.witnesses = find_low_weight_logicals(s, 2);
    if (run.witnesses.empty()) report.every_ordering_has_witness = false;
    report.runs.push_back(std::move(run));
  }
  report.sampled_orderings = orderings.size();
  return report;
}

DistanceHypotheses check_distance_hypotheses(const InteractionGraph& g) {
  DistanceHypotheses h;
  h.even_degree_at_least_6 = g.num_vertices() > 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) < 6 || g.degree(v) % 2) h.even_degree_at_least_6 = false;
  }
  h.three_connected = g.num_vertices() >= 4 && is_three_connected(g);
  h.at_most_two_parallel = max_parallel_edges(g) <= 2;
  return h;
}

}  // namespace sfenc
