#pragma once

#include <string>

#include <json.hpp>

#include "torcomb/arrangements.hpp"
#include "torcomb/quasitoric.hpp"
#include "torcomb/simplicial.hpp"
#include "torcomb/tor.hpp"

namespace torcomb {

using Json = nlohmann::ordered_json;

// Document formats:
//   complex      {"m": int, "facets": [[int,...],...], "name"?: string}
//   pair         {"complex": <complex>, "lambda": [[int,...],...],
//                 "orientation"?: [[int,...],...]}
//   arrangement  {"m": int, "generators": [[int,...],...], "name"?: string}
// All loaders throw input_error with a short context message.

Json load_json_file(const std::string& path);

SimplicialComplex complex_from_json(const Json& doc);
Json complex_to_json(const SimplicialComplex& k, const std::string& name = "");

CharacteristicPair pair_from_json(const Json& doc);
Json pair_to_json(const CharacteristicPair& pair, const std::string& name = "");

CoordinateArrangement arrangement_from_json(const Json& doc);
Json arrangement_to_json(const CoordinateArrangement& a,
                         const std::string& name = "");

Json betti_table_to_json(const BettiTable& t);
// Second-quadrant grid: rows 2p = 2m..0, columns -q = 0..-m.
std::string betti_table_grid(const BettiTable& t);

std::string doc_kind(const Json& doc);  // "complex" | "pair" | "arrangement"

}  // namespace torcomb
