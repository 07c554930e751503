#pragma once

#include "hivelab/character_tables.hpp"
#include "hivelab/hive.hpp"
#include "hivelab/polynomial.hpp"
#include "hivelab/stretch.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hivelab {

using Json = nlohmann::json;

/// "1,2,-3" -> {1, 2, -3}; throws ParseError.
std::vector<Int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

void to_json(Json& j, const Weight& w);
void from_json(const Json& j, Weight& w);
void to_json(Json& j, const Hive& h);
void from_json(const Json& j, Hive& h);
void to_json(Json& j, const DecompositionEntry& e);
void from_json(const Json& j, DecompositionEntry& e);
void to_json(Json& j, const TensorReport& r);
void to_json(Json& j, const CharacterCombo& c);
void from_json(const Json& j, CharacterCombo& c);
void to_json(Json& j, const GeometryReport& g);

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json poly_json(const RationalPoly& p);
RationalPoly poly_from_json(const Json& j);

} // namespace hivelab
