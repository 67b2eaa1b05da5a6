#include "sfenc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sfenc/errors.hpp"

namespace sfenc {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ValidationError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

double as_real(const Json& j, const char* what) {
  if (!j.is_number()) throw ValidationError(std::string(what) + " must be a number");
  return j.get<double>();
}

Pauli as_pauli(const Json& j) {
  if (!j.is_string()) throw ValidationError("Pauli operators must be strings");
  return Pauli::parse(j.get<std::string>());
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json graph_to_json(const InteractionGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"u", e.u},
                     {"v", e.v},
                     {"port_u", e.port_u + 1},
                     {"port_v", e.port_v + 1},
                     {"orientation", e.orientation}});
  }
  return {{"vertices", g.num_vertices()}, {"edges", edges}};
}

InteractionGraph graph_from_json(const Json& j) {
  const std::size_t m = as_index(field(j, "vertices"), "vertices");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw ValidationError("'edges' must be an array");
  std::vector<EdgeInput> in;
  for (const Json& e : edges) {
    EdgeInput x;
    x.u = as_index(field(e, "u"), "u");
    x.v = as_index(field(e, "v"), "v");
    if (e.contains("port_u") || e.contains("port_v")) {
      const std::size_t pu = as_index(field(e, "port_u"), "port_u");
      const std::size_t pv = as_index(field(e, "port_v"), "port_v");
      if (pu == 0 || pv == 0) throw ValidationError("ports are one-based");
      x.port_u = pu - 1;
      x.port_v = pv - 1;
    }
    if (e.contains("orientation")) {
      const Json& o = e.at("orientation");
      if (!o.is_number_integer()) throw ValidationError("orientation must be +1 or -1");
      x.orientation = o.get<int>();
    }
    in.push_back(x);
  }
  return InteractionGraph::build(m, in);
}

Json encoding_to_json(const EncodingMap& enc) {
  const InteractionGraph& g = enc.graph();
  Json layout = Json::array();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    layout.push_back({{"vertex", v}, {"qubits", enc.vertex_qubits(v)}});
  }
  Json edge_ops = Json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    edge_ops.push_back({{"edge", e},
                        {"u", g.edge(e).u},
                        {"v", g.edge(e).v},
                        {"pauli", enc.edge_operator(e).to_string()}});
  }
  Json vertex_ops = Json::array();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    vertex_ops.push_back({{"vertex", v}, {"pauli", enc.vertex_operator(v).to_string()}});
  }
  Json out{{"kind", std::string(to_string(enc.kind()))},
           {"n", enc.num_qubits()},
           {"graph", graph_to_json(g)},
           {"layout", layout},
           {"edge_ops", edge_ops},
           {"vertex_ops", vertex_ops}};
  if (enc.is_gse()) {
    Json modes = Json::array();
    for (const auto& block : enc.local_modes()) {
      Json row = Json::array();
      for (const Pauli& p : block) row.push_back(p.to_string());
      modes.push_back(row);
    }
    out["local_modes"] = modes;
  }
  return out;
}

EncodingMap encoding_from_json(const Json& j) {
  const EncodingKind kind = parse_encoding_kind(field(j, "kind").get<std::string>());
  const std::size_t n = as_index(field(j, "n"), "n");
  InteractionGraph g = graph_from_json(field(j, "graph"));
  std::vector<std::vector<std::size_t>> layout(g.num_vertices());
  for (const Json& row : field(j, "layout")) {
    const std::size_t v = as_index(field(row, "vertex"), "vertex");
    if (v >= layout.size()) throw ValidationError("layout vertex out of range");
    for (const Json& q : field(row, "qubits")) layout[v].push_back(as_index(q, "qubit"));
  }
  std::vector<Pauli> edge_ops(g.num_edges());
  std::vector<bool> seen(g.num_edges(), false);
  for (const Json& row : field(j, "edge_ops")) {
    const std::size_t e = as_index(field(row, "edge"), "edge");
    if (e >= edge_ops.size()) throw ValidationError("edge_ops entry out of range");
    edge_ops[e] = as_pauli(field(row, "pauli"));
    seen[e] = true;
  }
  for (bool s : seen) {
    if (!s) throw ValidationError("edge_ops must list every edge");
  }
  std::vector<Pauli> vertex_ops(g.num_vertices());
  std::vector<bool> vseen(g.num_vertices(), false);
  for (const Json& row : field(j, "vertex_ops")) {
    const std::size_t v = as_index(field(row, "vertex"), "vertex");
    if (v >= vertex_ops.size()) throw ValidationError("vertex_ops entry out of range");
    vertex_ops[v] = as_pauli(field(row, "pauli"));
    vseen[v] = true;
  }
  for (bool s : vseen) {
    if (!s) throw ValidationError("vertex_ops must list every vertex");
  }
  std::vector<std::vector<Pauli>> local;
  if (kind != EncodingKind::kSuperfast) {
    for (const Json& block : field(j, "local_modes")) {
      std::vector<Pauli> row;
      for (const Json& p : block) row.push_back(as_pauli(p));
      local.push_back(std::move(row));
    }
  }
  return EncodingMap(kind, std::move(g), n, std::move(layout), std::move(edge_ops),
                     std::move(vertex_ops), std::move(local));
}

Json stabilizer_to_json(const StabilizerGroup& s) {
  Json gens = Json::array();
  for (const Pauli& g : s.generators()) gens.push_back(g.to_string());
  return {{"n", s.num_qubits()},
          {"generators", gens},
          {"rank", s.rank()},
          {"logical_qubits", s.logical_qubits()}};
}

StabilizerGroup stabilizer_from_json(const Json& j) {
  const std::size_t n = as_index(field(j, "n"), "n");
  std::vector<Pauli> gens;
  for (const Json& g : field(j, "generators")) gens.push_back(as_pauli(g));
  return StabilizerGroup(n, std::move(gens));
}

Json fermion_to_json(const FermionHamiltonian& h) {
  Json terms = Json::array();
  for (const FermionTerm& t : h.terms) {
    terms.push_back({{"kind", std::string(to_string(t.kind))}, {"modes", t.modes}, {"coeff", t.coeff}});
  }
  return {{"modes", h.num_modes}, {"terms", terms}};
}

FermionHamiltonian fermion_from_json(const Json& j) {
  FermionHamiltonian h;
  h.num_modes = as_index(field(j, "modes"), "modes");
  for (const Json& t : field(j, "terms")) {
    FermionTerm term;
    const Json& kind = field(t, "kind");
    if (!kind.is_string()) throw ValidationError("term kind must be a string");
    term.kind = parse_term_kind(kind.get<std::string>());
    for (const Json& m : field(t, "modes")) term.modes.push_back(as_index(m, "mode"));
    term.coeff = t.contains("coeff") ? as_real(t.at("coeff"), "coeff") : 1.0;
    h.terms.push_back(std::move(term));
  }
  validate(h);
  return h;
}

Json qubit_hamiltonian_to_json(const QubitHamiltonian& h) {
  Json out = Json::array();
  for (const QubitTerm& t : h.terms) out.push_back({{"pauli", t.pauli.to_string()}, {"coeff", t.coeff}});
  return out;
}

QubitHamiltonian qubit_hamiltonian_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("qubit Hamiltonian must be a list of terms");
  QubitHamiltonian h;
  for (const Json& t : j) {
    QubitTerm term{as_pauli(field(t, "pauli")), as_real(field(t, "coeff"), "coeff")};
    if (!term.pauli.is_hermitian()) {
      throw ValidationError("qubit Hamiltonian term " + term.pauli.to_string() + " is not Hermitian");
    }
    if (h.terms.empty()) {
      h.num_qubits = term.pauli.num_qubits();
    } else if (term.pauli.num_qubits() != h.num_qubits) {
      throw DimensionError("qubit Hamiltonian terms differ in length");
    }
    h.terms.push_back(std::move(term));
  }
  return h;
}

Json witnesses_to_json(const std::vector<LogicalWitness>& w) {
  Json out = Json::array();
  for (const LogicalWitness& x : w) {
    out.push_back({{"pauli", x.pauli.to_string()},
                   {"weight", x.weight},
                   {"classification", std::string(to_string(x.classification))}});
  }
  return out;
}

Json spectrum_report_to_json(const std::vector<double>& codespace, const std::vector<double>& fock,
                             const SpectrumComparison& cmp) {
  return {{"codespace_eigenvalues", codespace},
          {"fock_even_eigenvalues", fock},
          {"max_deviation", cmp.max_deviation},
          {"pass", cmp.pass},
          {"message", cmp.message}};
}

}  // namespace sfenc
