#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "leray/bigraded.hpp"
#include "leray/hypersurface.hpp"
#include "leray/series.hpp"
#include "leray/spectral.hpp"

namespace leray {

using json = nlohmann::ordered_json;

/// Malformed or schema-violating input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bigraded polynomial: {"terms":[{"t":int,"u":int,"c":"p/q"},...]}, terms in
// ascending (t,u)-lex order, coefficients as canonical rational strings.
json to_json(const BigradedPolynomial& p);
BigradedPolynomial polynomial_from_json(const json& j);

// Truncated series: {"order":m,"coeffs":["p/q",...]} with exactly m entries.
json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

// Grid: {"page":r,"cells":[{"p":int,"q":int,"dim":int},...]}.
json to_json(const SpectralGrid& g);
SpectralGrid grid_from_json(const json& j);

// Betti list: either a bare array [b0,b1,...] or {"betti":[...]}.
json betti_to_json(const std::vector<std::int64_t>& betti);
std::vector<std::int64_t> betti_from_json(const json& j);

// Verifier report. Computed integers are decimal strings since they
// outgrow 64 bits quickly (e.g. (d-1)^{n+1} at n = d = 50).
json to_json(const VerifierReport& r);
VerifierReport report_from_json(const json& j);

json to_json(const DivisionObstruction& o);

json read_json_file(const std::filesystem::path& path);

}  // namespace leray
