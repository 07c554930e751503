#include "hivelab/json_io.hpp"

#include "hivelab/errors.hpp"

#include <charconv>
#include <sstream>

namespace hivelab {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (out.empty() || (!text.empty() && text.back() == ','))
    throw ParseError("malformed list: '" + text + "'");
  return out;
}

} // namespace

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  for (const std::string& item : split_commas(text)) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw ParseError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split_commas(text)) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ParseError("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return to_rational(j.get<Int>());
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json poly_json(const RationalPoly& p) {
  Json arr = Json::array();
  for (const Rational& c : p.coeffs()) arr.push_back(rational_json(c));
  return arr;
}

RationalPoly poly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const Json& x : j) c.push_back(rational_from_json(x));
  return RationalPoly(std::move(c));
}

void to_json(Json& j, const Weight& w) { j = w.labels; }

void from_json(const Json& j, Weight& w) {
  auto labels = j.get<std::vector<Int>>();
  const int rank = static_cast<int>(labels.size()) + 1;
  w = Weight(rank, std::move(labels));
}

void to_json(Json& j, const Hive& h) { j = Json{{"n", h.n}, {"entries", h.entries}}; }

void from_json(const Json& j, Hive& h) {
  h.n = j.at("n").get<int>();
  h.entries = j.at("entries").get<std::vector<std::vector<Int>>>();
}

void to_json(Json& j, const DecompositionEntry& e) {
  j = Json{{"nu", e.nu}, {"multiplicity", e.multiplicity}};
}

void from_json(const Json& j, DecompositionEntry& e) {
  e.nu = j.at("nu").get<Weight>();
  e.multiplicity = j.at("multiplicity").get<Count>();
}

void to_json(Json& j, const TensorReport& r) {
  j = Json{{"distinct", r.distinct}, {"total", r.total}, {"max", r.max}, {"entries", r.entries}};
}

void to_json(Json& j, const CharacterCombo& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms) terms.push_back({{"kappa", t.kappa}, {"r", rational_json(t.r)}});
  j = Json{{"n", c.n}, {"variant", c.variant == Variant::Shifted ? "R" : "Rhat"}, {"terms", terms}};
}

void from_json(const Json& j, CharacterCombo& c) {
  c.n = j.at("n").get<int>();
  c.variant = j.at("variant").get<std::string>() == "R" ? Variant::Shifted : Variant::Unshifted;
  c.terms.clear();
  for (const Json& t : j.at("terms"))
    c.terms.push_back({t.at("kappa").get<Weight>(), rational_from_json(t.at("r"))});
}

void to_json(Json& j, const GeometryReport& g) {
  j = Json{{"polynomial", poly_json(g.polynomial)},
           {"degree", g.polytope_dimension},
           {"ambient_dimension", g.ambient_dimension},
           {"normalized_volume", rational_json(g.normalized_volume)},
           {"normalized_boundary", rational_json(g.normalized_boundary)},
           {"interior_points", rational_json(g.interior_points)},
           {"lattice_points", g.lattice_points},
           {"blichfeldt_ok", g.blichfeldt_ok},
           {"coefficients_nonnegative", g.coefficients_nonnegative}};
}

} // namespace hivelab
