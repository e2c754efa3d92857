#include "report_io.hpp"

#include <algorithm>
#include <fstream>

#include "certiroot/error.hpp"

namespace certiroot::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

}  // namespace

Rational rational_from_json(const nlohmann::json& value) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  parse_fail("expected a rational string such as \"-3/4\", got " + value.dump());
}

nlohmann::json coeffs_to_json(const Polynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
  return arr;
}

Rational PolynomialFile::min_separation() const {
  if (separation) return *separation;
  std::vector<Rational> sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::optional<Rational> gap;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const Rational g = sorted[i] - sorted[i - 1];
    if (!gap || g < *gap) gap = g;
  }
  return gap.value_or(Rational(2));
}

PolynomialFile parse_polynomial_file(const nlohmann::json& doc, std::size_t max_degree) {
  if (!doc.is_object()) parse_fail("polynomial file must hold a JSON object");
  if (doc.contains("format") && doc.at("format") != kFormatVersion) {
    parse_fail("unsupported format version " + doc.at("format").dump());
  }
  if (!doc.contains("coeffs") || !doc.at("coeffs").is_array() || doc.at("coeffs").empty()) {
    parse_fail("missing non-empty \"coeffs\" array");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : doc.at("coeffs")) coeffs.push_back(rational_from_json(c));
  PolynomialFile out;
  out.poly = Polynomial(std::move(coeffs));
  if (out.poly.degree() > static_cast<int>(max_degree)) {
    throw Error(ErrorCode::DegreeOverflow, "degree " + std::to_string(out.poly.degree()) + " exceeds the limit " +
                                               std::to_string(max_degree));
  }
  if (doc.contains("roots")) {
    if (!doc.at("roots").is_array()) parse_fail("\"roots\" must be an array");
    for (const auto& r : doc.at("roots")) {
      out.roots.push_back(rational_from_json(r.is_object() ? r.at("value") : r));
    }
  }
  if (doc.contains("separation")) out.separation = rational_from_json(doc.at("separation"));
  if (doc.contains("rootless_floor")) out.rootless_floor = rational_from_json(doc.at("rootless_floor"));
  return out;
}

PolynomialFile load_polynomial_file(const std::filesystem::path& path, std::size_t max_degree) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
  return parse_polynomial_file(doc, max_degree);
}

std::optional<std::string> dyadic_string(const Rational& q) {
  const auto k = q.dyadic_exponent();
  if (!k) return std::nullopt;
  return q.numerator_string() + "/2^" + std::to_string(*k);
}

nlohmann::json root_list_to_json(const RootCandidateList& list) {
  nlohmann::json doc;
  doc["degree"] = list.degree;
  doc["cauchy_bound"] = list.cauchy_bound.to_string();
  doc["grid_precision"] = list.grid_precision;
  doc["interval_width"] = list.interval_width.to_string();
  doc["length_bound"] = list.length_bound;
  doc["cells_fired"] = list.cells_fired();
  auto cands = nlohmann::json::array();
  for (const auto& q : list.candidates) {
    nlohmann::json c;
    c["value"] = q.to_string();
    if (auto dy = dyadic_string(q)) c["dyadic"] = *dy;
    cands.push_back(std::move(c));
  }
  doc["candidates"] = std::move(cands);
  return doc;
}

RootCandidateList root_list_from_json(const nlohmann::json& doc) {
  try {
    RootCandidateList list;
    list.degree = doc.at("degree").get<int>();
    list.cauchy_bound = rational_from_json(doc.at("cauchy_bound"));
    list.grid_precision = doc.at("grid_precision").get<std::int64_t>();
    list.interval_width = rational_from_json(doc.at("interval_width"));
    list.length_bound = doc.at("length_bound").get<std::size_t>();
    for (const auto& c : doc.at("candidates")) list.candidates.push_back(rational_from_json(c.at("value")));
    return list;
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("malformed candidate report: ") + e.what());
  }
}

}  // namespace certiroot::cli
