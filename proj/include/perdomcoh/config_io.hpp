// The JSON configuration dialect: parsing, canonical serialization, and
// realization of a ScenarioConfig into a PeriodDatum.
//
// Schema "perdomcoh-config/1" (rationals are JSON integers or "a/b" strings):
// {
//   "schema": "perdomcoh-config/1",
//   "name": "drinfeld(2)",
//   "group": {
//     "type": "gl(2)" | "gl(2)x gl(2)" | "A3" | "B3" | "C2" | "D4" | "G2" | "F4" | "explicit",
//     "galois": {"permutation": [2,3,0,1], "order": 2},      // optional
//     "e_level": [{"permutation": [...], "order": k}, ...],  // optional, averaging only
//     "dimension": 3,                // explicit type only
//     "simple_roots": [[...], ...],  // explicit type only
//     "simple_coroots": [[...], ...],
//     "inner_product": [[...], ...]
//   },
//   "mu": [1, 0],
//   "slope": {"nu": ["1/2","1/2"], "s": 2} | {"builtin": "gl_basic", "k": 1},
//   "inner_form": "split" | "gl_basic"
//                 | {"delta": ["b1"], "relative_roots": [[...]],
//                    "omegas": [[...]], "center_rank": 1},
//   "options": {"checks": false, "pages": false, "euler": false,
//               "format": "text", "cap": 1000000}
// }
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "perdomcoh/period_datum.hpp"

namespace pdc {

struct GroupConfig {
  std::string type;  // "gl(2)", "C2", ..., or "explicit"
  GaloisAction galois;
  std::vector<GaloisAction> e_level;
  // explicit-type payload
  int dimension = 0;
  std::vector<Vec> simple_roots;
  std::vector<Vec> simple_coroots;
  Mat inner_product;
};

struct SlopeConfig {
  bool builtin_gl_basic = false;
  long long k = 0;  // used when builtin
  Vec nu;           // used when explicit
  long long s = 1;
};

struct InnerFormConfig {
  enum class Kind { Split, GlBasic, Explicit } kind = Kind::Split;
  InnerFormDatum data;  // used when Explicit
};

struct RunOptions {
  bool checks = false;
  bool pages = false;
  bool euler = false;
  std::string format = "text";  // text | json | csv
  std::size_t cap = kDefaultWeylCap;
};

struct ScenarioConfig {
  std::string name;
  GroupConfig group;
  Vec mu;
  SlopeConfig slope;
  InnerFormConfig inner_form;
  RunOptions options;
};

// Throws ConfigError with a descriptive message on malformed input.
ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig parse_config_text(const std::string& text);
ScenarioConfig parse_config_file(const std::string& path);

// Canonical serialization: fixed key order, rationals as int or "a/b".
// parse_config(config_to_json(c)) round-trips.
nlohmann::ordered_json config_to_json(const ScenarioConfig& c);

// Builds the PeriodDatum (root datum, slope, inner form) from the config.
PeriodDatum realize(const ScenarioConfig& c);

// JSON <-> rational helpers shared with the report writer.
Rat rat_from_json(const nlohmann::json& j);
nlohmann::json rat_to_json(const Rat& r);

}  // namespace pdc
