#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "sfenc/distance.hpp"
#include "sfenc/encoding.hpp"
#include "sfenc/fermion.hpp"
#include "sfenc/graph.hpp"
#include "sfenc/spectra.hpp"
#include "sfenc/stabilizer.hpp"

namespace sfenc {

using Json = nlohmann::ordered_json;

/// Parses text; throws ParseError carrying the byte offset.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// Graph format: {"vertices": m, "edges": [{"u", "v", "port_u", "port_v",
/// "orientation"}]}. Ports are one-based; ports and orientation are optional.
Json graph_to_json(const InteractionGraph& g);
InteractionGraph graph_from_json(const Json& j);

/// Layout table plus every stored operator. The reader keeps the Pauli strings
/// as written, so check_operator_algebra sees any corruption.
Json encoding_to_json(const EncodingMap& enc);
EncodingMap encoding_from_json(const Json& j);

Json stabilizer_to_json(const StabilizerGroup& s);
StabilizerGroup stabilizer_from_json(const Json& j);

Json fermion_to_json(const FermionHamiltonian& h);
FermionHamiltonian fermion_from_json(const Json& j);

/// List of {"pauli": "+XIZ", "coeff": c}.
Json qubit_hamiltonian_to_json(const QubitHamiltonian& h);
QubitHamiltonian qubit_hamiltonian_from_json(const Json& j);

Json witnesses_to_json(const std::vector<LogicalWitness>& w);
Json spectrum_report_to_json(const std::vector<double>& codespace, const std::vector<double>& fock,
                             const SpectrumComparison& cmp);

}  // namespace sfenc
