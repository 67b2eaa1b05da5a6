#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sfenc/distance.hpp"
#include "sfenc/encoding.hpp"
#include "sfenc/errors.hpp"
#include "sfenc/fermion.hpp"
#include "sfenc/graph.hpp"
#include "sfenc/json_io.hpp"
#include "sfenc/models.hpp"
#include "sfenc/spectra.hpp"
#include "sfenc/stabilizer.hpp"

namespace {

using namespace sfenc;

constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerification = 4;

struct Options {
  std::string graph_file;
  std::string preset;
  std::string encoding_file;
  std::string hamiltonian_file;
  std::string output;
  std::string format = "json";
  std::string kind;
  std::size_t m = 4;
  std::size_t lx = 3;
  std::size_t ly = 3;
  bool periodic = false;
  double t = 1.0;
  double eps = 0.0;
  double u = 0.0;
  std::size_t w_max = 2;
  std::size_t orderings = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  bool emit_qubit = false;
};

struct Source {
  std::string label;
  EncodingMap enc;
  std::vector<Vertex> extra_stabilizers;
  std::optional<FermionHamiltonian> model;
};

HubbardSpec hubbard_spec(const Options& o, bool periodic) {
  HubbardSpec s;
  s.lx = o.lx;
  s.ly = o.ly;
  s.periodic = periodic;
  s.t = o.t;
  s.eps = o.eps;
  s.u = o.u;
  return s;
}

EncodingKind kind_or(const Options& o, EncodingKind fallback) {
  return o.kind.empty() ? fallback : parse_encoding_kind(o.kind);
}

FermionHamiltonian hopping_chain(const InteractionGraph& g, const Options& o) {
  FermionHamiltonian h;
  h.num_modes = g.num_vertices();
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : g.edges()) {
    if (seen.insert(std::minmax(e.u, e.v)).second) {
      h.terms.push_back({TermKind::kHopping, {e.u, e.v}, -o.t});
    }
  }
  for (std::size_t i = 0; i < h.num_modes; ++i) {
    h.terms.push_back({TermKind::kNumber, {i}, o.eps + 0.1 * static_cast<double>(i + 1)});
  }
  return h;
}

Source from_preset(const Options& o) {
  const std::string& p = o.preset;
  if (p == "complete" || p == "cycle" || p == "octahedron") {
    InteractionGraph g = p == "complete" ? complete_graph(o.m)
                         : p == "cycle"  ? cycle_graph(o.m)
                                         : octahedron_graph();
    return {p, encode(g, kind_or(o, EncodingKind::kSuperfast)), {}, std::nullopt};
  }
  if (p == "hubbard-gse") {
    const HubbardSpec s = hubbard_spec(o, true);
    return {p, encode(hubbard_gse_graph(s), kind_or(o, EncodingKind::kErrorCorrecting)), {},
            hubbard_hamiltonian(s)};
  }
  if (p == "hubbard-superfast-aux") {
    AuxLattice lat = hubbard_superfast_aux_graph(hubbard_spec(o, false));
    FermionHamiltonian h = aux_layer_hamiltonian(lat);
    return {p, superfast_encode(lat.graph), lat.auxiliary, std::move(h)};
  }
  if (p == "hubbard-dimer") {
    HubbardSpec s = hubbard_spec(o, false);
    s.lx = 2;
    s.ly = 1;
    return {p, encode(hubbard_dimer_padded_graph(), kind_or(o, EncodingKind::kErrorCorrecting)), {},
            hubbard_hamiltonian(s)};
  }
  if (p == "cycle4-gse") {
    InteractionGraph g = cycle_graph(4);
    FermionHamiltonian h = hopping_chain(g, o);
    return {p, encode(g, kind_or(o, EncodingKind::kFenwick)), {}, std::move(h)};
  }
  if (p == "k4-superfast-random") {
    InteractionGraph g = complete_graph(4);
    FermionHamiltonian h = random_term_hamiltonian(g, o.seed);
    return {p, encode(g, kind_or(o, EncodingKind::kSuperfast)), {}, std::move(h)};
  }
  throw ValidationError("unknown preset '" + p + "'");
}

Source load_source(const Options& o) {
  const int given = !o.graph_file.empty() + !o.preset.empty() + !o.encoding_file.empty();
  if (given != 1) throw ValidationError("give exactly one of --graph, --preset, --encoding");
  if (!o.preset.empty()) return from_preset(o);
  if (!o.encoding_file.empty()) {
    return {o.encoding_file, encoding_from_json(read_json_file(o.encoding_file)), {}, std::nullopt};
  }
  const Json j = read_json_file(o.graph_file);
  InteractionGraph g = graph_from_json(j);
  std::vector<Vertex> extra;
  if (j.contains("auxiliary_vertices")) {
    for (const Json& v : j.at("auxiliary_vertices")) extra.push_back(v.get<Vertex>());
  }
  return {o.graph_file, encode(g, kind_or(o, EncodingKind::kSuperfast)), extra, std::nullopt};
}

void print_text(std::ostream& out, const Json& j, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << indent << it.key() << ":\n";
      print_text(out, v, indent + "  ");
    } else if (v.is_array()) {
      const bool scalars = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
      if (scalars && v.size() <= 16) {
        out << indent << it.key() << ": " << v.dump() << "\n";
      } else {
        out << indent << it.key() << ": [" << v.size() << " entries]\n";
      }
    } else {
      out << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

void emit(const Options& o, const Json& report) {
  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) throw ValidationError("cannot write '" + o.output + "'");
  }
  std::ostream& out = o.output.empty() ? std::cout : file;
  if (o.format == "text") {
    print_text(out, report, "");
  } else {
    out << report.dump(2) << "\n";
  }
}

Json violations_json(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

int cmd_encode(const Options& o) {
  const Source src = load_source(o);
  const auto violations = check_operator_algebra(src.enc);
  const StabilizerGroup s = build_stabilizer_group(src.enc, src.extra_stabilizers);
  Json report{{"source", src.label},
              {"encoding", encoding_to_json(src.enc)},
              {"stabilizers", stabilizer_to_json(s)},
              {"algebra_violations", violations_json(violations)}};
  emit(o, report);
  return violations.empty() ? 0 : kExitVerification;
}

int cmd_check_distance(const Options& o) {
  if (o.w_max > kMaxSearchWeight) {
    throw ResourceError("--w-max " + std::to_string(o.w_max) + " exceeds the search guard of " +
                        std::to_string(kMaxSearchWeight));
  }
  const Source src = load_source(o);
  const auto violations = check_operator_algebra(src.enc);
  if (!violations.empty()) {
    emit(o, {{"source", src.label}, {"algebra_violations", violations_json(violations)}});
    return kExitVerification;
  }
  const StabilizerGroup s = build_stabilizer_group(src.enc, src.extra_stabilizers);
  const auto witnesses = find_low_weight_logicals(s, o.w_max);
  const SyndromeCheck single = single_qubit_errors_correctable(s);
  std::string bound = witnesses.empty() ? "distance >= " + std::to_string(o.w_max + 1)
                                        : "distance <= " + std::to_string(witnesses.front().weight);
  Json report{{"source", src.label},
              {"kind", std::string(to_string(src.enc.kind()))},
              {"n", s.num_qubits()},
              {"rank", s.rank()},
              {"logical_qubits", s.logical_qubits()},
              {"w_max", o.w_max},
              {"candidates", candidate_count(s.num_qubits(), o.w_max)},
              {"distance_bound", bound},
              {"single_qubit_errors_correctable", single.ok},
              {"witnesses", witnesses_to_json(witnesses)}};
  if (o.orderings > 0) {
    const auto graphs = sample_orderings(src.enc.graph(), o.orderings, o.seed);
    const OrderingSweepReport sweep = ordering_witness_sweep(src.enc.graph(), graphs);
    Json runs = Json::array();
    for (const auto& r : sweep.runs) {
      runs.push_back({{"ordering", r.label},
                      {"witness_count", r.witnesses.size()},
                      {"first_witness", r.witnesses.empty() ? "" : r.witnesses.front().pauli.to_string()}});
    }
    report["ordering_sweep"] = {{"sampled_orderings", sweep.sampled_orderings},
                                {"seed", o.seed},
                                {"every_ordering_has_witness", sweep.every_ordering_has_witness},
                                {"runs", runs}};
  }
  emit(o, report);
  return 0;
}

int cmd_verify_spectrum(const Options& o) {
  Source src = load_source(o);
  if (!o.hamiltonian_file.empty()) src.model = fermion_from_json(read_json_file(o.hamiltonian_file));
  if (!src.model) throw ValidationError("verify-spectrum needs a preset with a model or --hamiltonian");
  Json report{{"source", src.label}, {"tolerance", o.tolerance}};
  const auto violations = check_operator_algebra(src.enc);
  report["algebra_violations"] = violations_json(violations);
  const QubitHamiltonian hq = compile(*src.model, src.enc);
  const StabilizerGroup s = build_stabilizer_group(src.enc, src.extra_stabilizers);
  const bool commutes = verify_compiled_commutes_with_stabilizers(hq, s);
  report["commutes_with_stabilizers"] = commutes;
  const CodespaceSpectrum cs = codespace_analysis(hq, s);
  const std::vector<double> fock = even_sector_spectrum(fock_matrix(*src.model), src.model->num_modes);
  const SpectrumComparison cmp = compare_spectra(cs.eigenvalues, fock, o.tolerance);
  report["codespace_dimension"] = cs.dimension;
  report["leakage"] = cs.leakage;
  report["spectrum"] = spectrum_report_to_json(cs.eigenvalues, fock, cmp);
  const bool pass = violations.empty() && commutes && cmp.pass && cs.leakage <= o.tolerance;
  report["pass"] = pass;
  emit(o, report);
  return pass ? 0 : kExitVerification;
}

Json weight_histogram(const QubitHamiltonian& h) {
  std::map<std::size_t, std::size_t> counts;
  for (const QubitTerm& t : h.terms) ++counts[t.pauli.weight()];
  Json out = Json::object();
  for (auto [w, c] : counts) out[std::to_string(w)] = c;
  return out;
}

int cmd_hubbard(const Options& o) {
  const bool aux = o.preset == "hubbard-superfast-aux" || (o.preset.empty() && !o.periodic);
  const HubbardSpec spec = hubbard_spec(o, !aux);
  Json report{{"lx", spec.lx}, {"ly", spec.ly}, {"periodic", spec.periodic},
              {"t", spec.t},   {"eps", spec.eps}, {"U", spec.u}};
  if (!aux) {
    const FermionHamiltonian h = hubbard_hamiltonian(spec);
    const InteractionGraph g = hubbard_gse_graph(spec);
    const EncodingMap enc = encode(g, kind_or(o, EncodingKind::kErrorCorrecting));
    const StabilizerGroup s = build_stabilizer_group(enc);
    const QubitHamiltonian hq = compile(h, enc);
    const DistanceHypotheses hyp = check_distance_hypotheses(g);
    report["preset"] = "hubbard-gse";
    report["kind"] = std::string(to_string(enc.kind()));
    report["vertices"] = g.num_vertices();
    report["edges"] = g.num_edges();
    report["n"] = enc.num_qubits();
    report["rank"] = s.rank();
    report["logical_qubits"] = s.logical_qubits();
    report["hypotheses"] = {{"even_degree_at_least_6", hyp.even_degree_at_least_6},
                            {"three_connected", hyp.three_connected},
                            {"at_most_two_parallel", hyp.at_most_two_parallel}};
    report["compiled_terms"] = hq.terms.size();
    report["max_weight"] = hq.max_weight();
    report["weight_histogram"] = weight_histogram(hq);
    report["commutes_with_stabilizers"] = verify_compiled_commutes_with_stabilizers(hq, s);
    report["hamiltonian"] = fermion_to_json(h);
    report["graph"] = graph_to_json(g);
    if (o.emit_qubit) report["qubit_hamiltonian"] = qubit_hamiltonian_to_json(hq);
  } else {
    const AuxLattice lat = hubbard_superfast_aux_graph(spec);
    const EncodingMap enc = superfast_encode(lat.graph);
    const StabilizerGroup s = build_stabilizer_group(enc, lat.auxiliary);
    const FermionHamiltonian h = aux_layer_hamiltonian(lat);
    const QubitHamiltonian hq = compile(h, enc);
    report["preset"] = "hubbard-superfast-aux";
    report["layer_vertices"] = lat.graph.num_vertices();
    report["layer_edges"] = lat.graph.num_edges();
    report["auxiliary_vertices"] = lat.auxiliary;
    report["n_per_layer"] = enc.num_qubits();
    report["n_both_layers"] = lat.doubled_layer_qubits();
    report["rank_per_layer"] = s.rank();
    report["logical_qubits_per_layer"] = s.logical_qubits();
    report["single_qubit_errors_correctable"] = single_qubit_errors_correctable(s).ok;
    if (spec.lx >= 3 && spec.ly >= 3) {
      report["unit_cell_syndromes_distinct"] =
          single_qubit_syndromes_distinct(s, lat.unit_cell_qubits(1, 1)).ok;
    }
    report["compiled_terms"] = hq.terms.size();
    report["max_weight"] = hq.max_weight();
    report["commutes_with_stabilizers"] = verify_compiled_commutes_with_stabilizers(hq, s);
    Json g = graph_to_json(lat.graph);
    g["auxiliary_vertices"] = lat.auxiliary;
    report["hamiltonian"] = fermion_to_json(h);
    report["graph"] = g;
    if (o.emit_qubit) report["qubit_hamiltonian"] = qubit_hamiltonian_to_json(hq);
  }
  emit(o, report);
  return 0;
}

int cmd_selftest(const Options& o) {
  Json checks = Json::object();
  bool ok = true;
  const auto record = [&](const std::string& name, bool pass) {
    checks[name] = pass;
    ok = ok && pass;
  };
  for (EncodingKind kind : {EncodingKind::kSuperfast, EncodingKind::kFenwick}) {
    const EncodingMap enc = encode(complete_graph(5), kind);
    record("algebra_k5_" + std::string(to_string(kind)), check_operator_algebra(enc).empty());
  }
  {
    const EncodingMap enc = encode(complete_graph(7), EncodingKind::kErrorCorrecting);
    const StabilizerGroup s = build_stabilizer_group(enc);
    record("algebra_k7_error-correcting", check_operator_algebra(enc).empty());
    record("k7_logical_qubits", s.logical_qubits() == 6);
    record("k7_single_qubit_correctable", single_qubit_errors_correctable(s).ok);
  }
  {
    const EncodingMap enc = superfast_encode(complete_graph(4));
    const StabilizerGroup s = build_stabilizer_group(enc);
    record("k4_superfast_has_weight2_logical", !find_low_weight_logicals(s, 2).empty());
  }
  for (const char* p : {"cycle4-gse", "k4-superfast-random"}) {
    Options po = o;
    po.preset = p;
    po.kind.clear();
    Source src = from_preset(po);
    const QubitHamiltonian hq = compile(*src.model, src.enc);
    const StabilizerGroup s = build_stabilizer_group(src.enc);
    const auto cmp = compare_spectra(codespace_spectrum(hq, s),
                                     even_sector_spectrum(fock_matrix(*src.model), src.model->num_modes),
                                     o.tolerance);
    record(std::string("spectrum_") + p, cmp.pass);
  }
  emit(o, {{"checks", checks}, {"pass", ok}});
  return ok ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superfast-encoding compiler and verifier"};
  app.require_subcommand(1);
  Options o;

  const auto add_source = [&](CLI::App* c) {
    c->add_option("--graph", o.graph_file, "Interaction graph JSON file");
    c->add_option("--preset", o.preset,
                  "complete, cycle, octahedron, hubbard-gse, hubbard-superfast-aux, hubbard-dimer, "
                  "cycle4-gse, k4-superfast-random");
    c->add_option("--encoding", o.encoding_file, "Encoding JSON file");
    c->add_option("--kind", o.kind, "superfast, error-correcting or fenwick");
    c->add_option("--m", o.m, "Vertex count for complete and cycle presets");
  };
  const auto add_model = [&](CLI::App* c) {
    c->add_option("--lx", o.lx, "Lattice width");
    c->add_option("--ly", o.ly, "Lattice height");
    c->add_option("--t", o.t, "Hopping amplitude");
    c->add_option("--eps", o.eps, "On-site energy");
    c->add_option("--U", o.u, "Coulomb repulsion");
  };
  const auto add_common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--output", o.output, "Write the report here instead of stdout");
    c->add_option("--seed", o.seed, "Seed for every random choice");
  };

  CLI::App* enc = app.add_subcommand("encode", "Emit the encoding and stabilizer report");
  add_source(enc);
  add_model(enc);
  add_common(enc);

  CLI::App* dist = app.add_subcommand("check-distance", "Search for low-weight logical operators");
  add_source(dist);
  add_model(dist);
  add_common(dist);
  dist->add_option("--w-max", o.w_max, "Largest weight searched");
  dist->add_option("--orderings", o.orderings, "Random port orderings for the witness sweep");

  CLI::App* spec = app.add_subcommand("verify-spectrum", "Compare codespace and Fock spectra");
  add_source(spec);
  add_model(spec);
  add_common(spec);
  spec->add_option("--hamiltonian", o.hamiltonian_file, "Fermionic Hamiltonian JSON file");
  spec->add_option("--tolerance", o.tolerance, "Largest allowed eigenvalue deviation");

  CLI::App* hub = app.add_subcommand("hubbard", "Build and compile a Hubbard model");
  add_model(hub);
  add_common(hub);
  hub->add_option("--preset", o.preset, "hubbard-gse or hubbard-superfast-aux");
  hub->add_option("--kind", o.kind, "GSE family for hubbard-gse");
  hub->add_flag("--periodic", o.periodic, "Torus boundary (selects hubbard-gse)");
  hub->add_flag("--emit-qubit", o.emit_qubit, "Include the compiled qubit Hamiltonian");

  CLI::App* self = app.add_subcommand("selftest", "Run quick internal checks");
  add_common(self);
  self->add_option("--tolerance", o.tolerance, "Spectral tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*enc) return cmd_encode(o);
    if (*dist) return cmd_check_distance(o);
    if (*spec) return cmd_verify_spectrum(o);
    if (*hub) return cmd_hubbard(o);
    return cmd_selftest(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ConsistencyError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed document: " << e.what() << "\n";
    return kExitValidation;
  }
}
