#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "json.hpp"

#include "certiroot/polynomial.hpp"
#include "certiroot/root_enum.hpp"

namespace certiroot::cli {

inline constexpr int kFormatVersion = 1;

/// Polynomial input file:
///   { "format": 1, "coeffs": ["-2", "0", "1"],
///     "roots": [{"value": "1/2", "multiplicity": 2}, ...],   // optional
///     "separation": "1/4",                                    // optional
///     "rootless_floor": "1" }                                 // optional
/// Coefficient index 0 is the constant term.
struct PolynomialFile {
  Polynomial poly;
  std::vector<Rational> roots;
  std::optional<Rational> separation;
  std::optional<Rational> rootless_floor;

  bool has_separation_info() const { return separation.has_value() || !roots.empty(); }
  /// Explicit separation, else the smallest gap in the roots block, else 2.
  Rational min_separation() const;
};

/// Throws ParseError on malformed input, DegreeOverflow past max_degree.
PolynomialFile parse_polynomial_file(const nlohmann::json& doc, std::size_t max_degree);
PolynomialFile load_polynomial_file(const std::filesystem::path& path, std::size_t max_degree);

Rational rational_from_json(const nlohmann::json& value);
nlohmann::json coeffs_to_json(const Polynomial& p);

/// "m/2^k" when q is dyadic.
std::optional<std::string> dyadic_string(const Rational& q);

nlohmann::json root_list_to_json(const RootCandidateList& list);
/// Reads the fields written by root_list_to_json; extra report fields are ignored.
RootCandidateList root_list_from_json(const nlohmann::json& doc);

}  // namespace certiroot::cli
