// io.hpp
// File formats and JSON serialization. The Voigt exchange format is a 6x6
// symmetric matrix of raw components, as JSON {"voigt": [[...]x6]} or as a
// CSV of 6 rows; both are read and written losslessly.

#pragma once

#include "elastinv/fingerprint.hpp"
#include "elastinv/harmonic.hpp"
#include "elastinv/orbit.hpp"
#include "elastinv/reconstruct.hpp"
#include "elastinv/relations.hpp"

#include <nlohmann/json_fwd.hpp>

#include <array>
#include <stdexcept>
#include <string>

namespace elastinv {

/// Malformed input file or matrix. what() names the offending location.
struct format_error : std::runtime_error {
  explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

using VoigtMatrix = std::array<std::array<double, 6>, 6>;

/// Symmetry is required within 1e-12 relative; a violation reports the
/// offending (I, J) in 1-based Voigt indices.
ElasticityTensor from_voigt_matrix(const VoigtMatrix& m);
VoigtMatrix to_voigt_matrix(const ElasticityTensor& e);

ElasticityTensor read_voigt_json(const std::string& text);
ElasticityTensor read_voigt_csv(const std::string& text);
/// Dispatches on the .json / .csv extension.
ElasticityTensor read_elasticity_file(const std::string& path);

std::string write_voigt_json(const ElasticityTensor& e);
std::string write_voigt_csv(const ElasticityTensor& e);

nlohmann::json to_json(const HarmonicParts& p);
HarmonicParts parts_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Fingerprint& f);
nlohmann::json to_json(const OrbitVerdict& v);
nlohmann::json to_json(const CanonicalRepresentative& r);
nlohmann::json to_json(const RelationReport& r);
nlohmann::json catalog_to_json(bool counts_only);

}  // namespace elastinv
