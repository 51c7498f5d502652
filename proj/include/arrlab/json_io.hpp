#pragma once

// JSON forms of every artifact. Readers throw ParseError on malformed input;
// writers emit canonical data so output is byte-stable.

#include <optional>
#include <string>

#include <json.hpp>

#include "arrlab/census.hpp"
#include "arrlab/classify.hpp"
#include "arrlab/geometry.hpp"
#include "arrlab/lattice.hpp"
#include "arrlab/moduli.hpp"

namespace arrlab {

using Json = nlohmann::ordered_json;

Json to_json(const Arrangement& a);
Json to_json(const IncidenceStructure& s);
Json to_json(const MultiplicityProfile& p);
Json to_json(const Poly& p);
Json to_json(const ModuliReport& r);
Json to_json(const NineLineClass& c);
Json to_json(const CensusResult& r);
/// 1-based one-line form.
Json permutation_json(const Permutation& p);

Arrangement arrangement_from_json(const Json& j);
IncidenceStructure lattice_from_json(const Json& j);

/// A lattice file or an arrangement file, told apart by their keys.
struct LoadedInput {
  IncidenceStructure lattice;
  std::optional<Arrangement> arrangement;
};
LoadedInput input_from_json(const Json& j);

Json parse_json(const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace arrlab
