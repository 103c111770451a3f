#pragma once

// JSON interchange formats. Every top-level document carries "format_version": 1.
// Rationals are strings "num/den" in lowest terms; complex rationals are
// {"re": ..., "im": ...}; multi-indices are arrays of non-negative integers.

#include "hermpos/maps.hpp"

#include <json.hpp>

#include <filesystem>

namespace hermpos::io {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

json to_json(const MultiIndex& a);
json to_json(const Rational& q);
json to_json(const GaussianRational& x);

MultiIndex multi_index_from_json(const json& j, const std::string& where);
Rational rational_from_json(const json& j, const std::string& where);
GaussianRational gaussian_from_json(const json& j, const std::string& where);

/// {"n", "m", "entries": [{"alpha", "beta", "re", "im"}]}; only the upper
/// triangle (including the diagonal) is emitted.
json form_to_json(const BihomogeneousForm& form);
BihomogeneousForm form_from_json(const json& j);

/// Same schema as the form file; entries may have any degrees.
json polynomial_to_json(const HermitianPolynomial& f);
HermitianPolynomial polynomial_from_json(const json& j);

/// {"n", "components": [{"scale", "terms": [{"alpha", "re", "im"}]}]}
json map_to_json(const HoloPolyMap& map);
HoloPolyMap map_from_json(const json& j);

json terms_to_json(const Polynomial& p);
Polynomial terms_from_json(std::size_t n, const json& terms, const std::string& where);

/// {"n", "m", "terms": [{"alpha", "coeff"}]} for real homogeneous polynomials.
json real_polynomial_to_json(const RealPolynomial& p);
RealPolynomial real_polynomial_from_json(const json& j);

json certificate_to_json(const StabilizationCertificate& cert);
json witness_to_json(const NegativeWitness& w);
json witness_to_json(const SphereMinimum& w);
json simplex_witness_to_json(const SimplexWitness& w);
json polya_certificate_to_json(const PolyaCertificate& cert);

/// {"numerator": <map>, "denominator": {"terms": [...]}, "lowest_terms": bool}
json rational_map_to_json(const RationalMap& map);
RationalMap rational_map_from_json(const json& j);

json report_to_json(const ProperReport& r);

json complex_point_to_json(const ComplexPoint& z);
ComplexPoint complex_point_from_json(const json& j, const std::string& where);
json matrix_to_json(const Eigen::MatrixXcd& m);

/// Parses a file; parse errors carry the line and column.
json read_json(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it over the target.
void write_json_atomic(const std::filesystem::path& path, const json& j);

}  // namespace hermpos::io
