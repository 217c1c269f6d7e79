#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "semsketch/contrastive.hpp"
#include "semsketch/sketch.hpp"

namespace semsketch {

// Key order in every object is fixed; dumps are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Lexeme& lexeme);
Json to_json(const Config& config);
Json to_json(const Sketch& sketch);
Json to_json(const Diagnostics& diagnostics);
Json to_json(const DiffReport& report);
Json to_json(const FieldReport& report);

// {"semclass","left":{lexeme},"right":{lexeme},"affinity"}
Json pair_to_json(const Lexeme& left, const Lexeme& right, const std::string& semclass,
                  double affinity);

// All parsers throw Error(E_FORMAT) on schema violations.
Lexeme lexeme_from_json(const Json& j);
Config config_from_json(const Json& j);
Sketch sketch_from_json(const Json& j);
DiffReport diff_from_json(const Json& j);

}  // namespace semsketch
