#include "leray/serialize.hpp"

#include <fstream>
#include <set>
#include <string>

namespace leray {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

long nonneg_int(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw FormatError(std::string("field '") + key + "' must be a nonnegative integer");
  return static_cast<long>(v.get<long long>());
}

Rational rational_field(const json& v, const char* what) {
  if (!v.is_string()) throw FormatError(std::string(what) + " must be a rational string like \"p/q\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

BigInt integer_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  const Rational r = rational_field(v, key);
  if (!r.is_integer()) throw FormatError(std::string("field '") + key + "' must be an integer");
  return r.to_integer();
}

bool bool_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_boolean()) throw FormatError(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

}  // namespace

json to_json(const BigradedPolynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"t", m.t}, {"u", m.u}, {"c", c.to_string()}});
  return {{"terms", terms}};
}

BigradedPolynomial polynomial_from_json(const json& j) {
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw FormatError("'terms' must be an array");
  BigradedPolynomial p;
  std::set<Monomial> seen;
  for (const json& term : terms) {
    const Monomial m{nonneg_int(term, "t"), nonneg_int(term, "u")};
    if (!seen.insert(m).second)
      throw FormatError("duplicate term t^" + std::to_string(m.t) + " u^" + std::to_string(m.u));
    p.add_term(m, rational_field(field(term, "c"), "'c'"));
  }
  return p;
}

json to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c.to_string());
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const json& j) {
  const long order = nonneg_int(j, "order");
  if (order == 0) throw FormatError("series order must be positive");
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array() || static_cast<long>(coeffs.size()) != order)
    throw FormatError("'coeffs' must be an array of exactly 'order' entries");
  std::vector<Rational> values;
  for (const json& c : coeffs) values.push_back(rational_field(c, "series coefficient"));
  return {static_cast<std::size_t>(order), std::move(values)};
}

json to_json(const SpectralGrid& g) {
  json cells = json::array();
  for (const auto& [c, dim] : g.cells()) cells.push_back({{"p", c.p}, {"q", c.q}, {"dim", dim}});
  return {{"page", g.page()}, {"cells", cells}};
}

SpectralGrid grid_from_json(const json& j) {
  const long page = nonneg_int(j, "page");
  const json& cells = field(j, "cells");
  if (!cells.is_array()) throw FormatError("'cells' must be an array");
  try {
    SpectralGrid g(static_cast<int>(page));
    std::set<Cell> seen;
    for (const json& cell : cells) {
      const Cell c{static_cast<int>(nonneg_int(cell, "p")), static_cast<int>(nonneg_int(cell, "q"))};
      if (!seen.insert(c).second) throw FormatError("duplicate grid cell");
      g.set(c, nonneg_int(cell, "dim"));
    }
    return g;
  } catch (const SpectralError& e) {
    throw FormatError(e.what());
  }
}

json betti_to_json(const std::vector<std::int64_t>& betti) { return {{"betti", betti}}; }

std::vector<std::int64_t> betti_from_json(const json& j) {
  const json& list = j.is_object() ? field(j, "betti") : j;
  if (!list.is_array()) throw FormatError("Betti numbers must be an array");
  std::vector<std::int64_t> out;
  for (const json& b : list) {
    if (!b.is_number_integer() || b.get<long long>() < 0)
      throw FormatError("Betti numbers must be nonnegative integers");
    out.push_back(b.get<std::int64_t>());
  }
  return out;
}

json to_json(const VerifierReport& r) {
  return {
      {"n", r.instance.n},
      {"d", r.instance.d},
      {"satisfies_hypothesis", r.instance.satisfies_hypothesis()},
      {"transitive_action", r.instance.transitive_action()},
      {"discriminant_degree", r.discriminant_degree.get_str()},
      {"iota_multiplier", r.iota_multiplier.get_str()},
      {"t1_multiplicity", r.t1_multiplicity.get_str()},
      {"t2_coefficient", r.t2_coefficient.get_str()},
      {"pullback_coefficient", r.pullback_coefficient.get_str()},
      {"chern_top_coefficient", r.chern_top_coefficient.to_string()},
      {"chern_degree", r.chern_degree.get_str()},
      {"nonvanishing", r.nonvanishing},
  };
}

VerifierReport report_from_json(const json& j) {
  VerifierReport r;
  try {
    r.instance = ModuliInstance::make(static_cast<int>(nonneg_int(j, "n")), static_cast<int>(nonneg_int(j, "d")));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  r.discriminant_degree = integer_field(j, "discriminant_degree");
  r.iota_multiplier = integer_field(j, "iota_multiplier");
  r.t1_multiplicity = integer_field(j, "t1_multiplicity");
  r.t2_coefficient = integer_field(j, "t2_coefficient");
  r.pullback_coefficient = integer_field(j, "pullback_coefficient");
  r.chern_top_coefficient = rational_field(field(j, "chern_top_coefficient"), "'chern_top_coefficient'");
  r.chern_degree = integer_field(j, "chern_degree");
  r.nonvanishing = bool_field(j, "nonvanishing");
  if (bool_field(j, "satisfies_hypothesis") != r.instance.satisfies_hypothesis() ||
      bool_field(j, "transitive_action") != r.instance.transitive_action())
    throw FormatError("instance flags inconsistent with (n, d)");
  return r;
}

json to_json(const DivisionObstruction& o) {
  return {{"t", o.at.t}, {"u", o.at.u}, {"c", o.coefficient.to_string()}, {"reason", o.reason}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace leray
