#include "cli.hpp"

#include <cstdlib>
#include <sstream>

#include "certiroot/error.hpp"
#include "certiroot/error_bounds.hpp"
#include "certiroot/root_enum.hpp"
#include "certiroot/spectrum.hpp"
#include "certiroot/sturm.hpp"
#include "report_io.hpp"

namespace certiroot::cli {

namespace {

using nlohmann::json;

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Roots: return "roots";
    case Command::Intersect: return "intersect";
    case Command::Sturm: return "sturm";
    case Command::Bounds: return "bounds";
    case Command::Spectrum: return "spectrum";
  }
  return "unknown";
}

void require_inputs(const JobRequest& job, std::size_t n) {
  if (job.inputs.size() != n) {
    throw Error(ErrorCode::ParseError, std::string(command_name(job.command)) + " expects " + std::to_string(n) +
                                           " input file(s), got " + std::to_string(job.inputs.size()));
  }
}

std::uint32_t require_precision(const JobRequest& job) {
  if (!job.precision || *job.precision < 1) {
    throw Error(ErrorCode::ParseError, std::string(command_name(job.command)) + " needs --precision >= 1");
  }
  return *job.precision;
}

struct ChosenThreshold {
  Threshold gamma;
  std::string source;
};

ChosenThreshold choose_threshold(const JobRequest& job, const Polynomial& p, const PolynomialFile* file,
                                 std::uint32_t r, json& warnings) {
  if (job.gamma) return {Threshold(*job.gamma), "explicit"};
  const int d = p.degree();
  if (d >= 1 && file != nullptr && file->has_separation_info()) {
    const Rational floor = file->rootless_floor.value_or(Rational(1));
    return {small_value_threshold(p, file->min_separation(), ApproxContext(r, static_cast<std::uint32_t>(d)), floor),
            "separation"};
  }
  warnings.push_back("no root separation supplied; gamma = 2^-(d r) and the 6 d^2 length bound is heuristic");
  const std::int64_t exponent = static_cast<std::int64_t>(std::max(d, 1)) * r;
  return {Threshold(Rational::pow2(-exponent)), "default"};
}

json roots_report(const JobRequest& job, std::size_t max_degree) {
  require_inputs(job, 1);
  const std::uint32_t r = require_precision(job);
  const PolynomialFile file = load_polynomial_file(job.inputs[0], max_degree);
  json warnings = json::array();
  const auto chosen = choose_threshold(job, file.poly, &file, r, warnings);
  const auto list = root_enum(file.poly, PrecisionParams(r, chosen.gamma));
  json doc = root_list_to_json(list);
  doc["polynomial"] = coeffs_to_json(file.poly);
  doc["precision"] = r;
  doc["gamma"] = chosen.gamma.value().to_string();
  doc["gamma_source"] = chosen.source;
  doc["warnings"] = std::move(warnings);
  return doc;
}

json intersect_report(const JobRequest& job, std::size_t max_degree) {
  require_inputs(job, 2);
  const std::uint32_t r = require_precision(job);
  const PolynomialFile a = load_polynomial_file(job.inputs[0], max_degree);
  const PolynomialFile b = load_polynomial_file(job.inputs[1], max_degree);
  const Polynomial diff = a.poly - b.poly;
  json warnings = json::array();
  json doc;
  if (diff.degree() >= 1) {
    const auto chosen = choose_threshold(job, diff, nullptr, r, warnings);
    doc = root_list_to_json(intersect(a.poly, b.poly, PrecisionParams(r, chosen.gamma)));
    doc["gamma"] = chosen.gamma.value().to_string();
    doc["gamma_source"] = chosen.source;
  } else {
    // Identical inputs throw here; a nonzero constant gap gives no candidates.
    doc = root_list_to_json(intersect(a.poly, b.poly, PrecisionParams(r, Threshold(Rational(1)))));
  }
  doc["difference"] = coeffs_to_json(diff);
  doc["precision"] = r;
  doc["warnings"] = std::move(warnings);
  return doc;
}

json sturm_report(const JobRequest& job, std::size_t max_degree) {
  require_inputs(job, 1);
  const PolynomialFile file = load_polynomial_file(job.inputs[0], max_degree);
  const SturmChain chain = sturm_chain(file.poly);
  json doc;
  doc["polynomial"] = coeffs_to_json(file.poly);
  json polys = json::array();
  for (const auto& p : chain.polys()) polys.push_back(coeffs_to_json(p));
  doc["chain"] = std::move(polys);
  const Rational beta = cauchy_bound(file.poly);
  doc["cauchy_bound"] = beta.to_string();
  auto intervals = job.intervals;
  if (intervals.empty()) intervals.emplace_back(-beta, beta);
  json counts = json::array();
  for (const auto& [a, b] : intervals) {
    json entry;
    entry["a"] = a.to_string();
    entry["b"] = b.to_string();
    entry["count"] = count_roots(chain, a, b);
    counts.push_back(std::move(entry));
  }
  doc["intervals"] = std::move(counts);
  return doc;
}

json bounds_report(const JobRequest& job, std::size_t max_degree) {
  require_inputs(job, 1);
  const std::uint32_t r = require_precision(job);
  if (!job.x) throw Error(ErrorCode::ParseError, "bounds needs --x");
  const PolynomialFile file = load_polynomial_file(job.inputs[0], max_degree);
  const int d = file.poly.degree();
  if (d < 1) throw Error(ErrorCode::DegreeTooLow, "bounds needs a polynomial of degree >= 1");
  json doc;
  doc["polynomial"] = coeffs_to_json(file.poly);
  doc["x"] = job.x->to_string();
  doc["precision"] = r;
  doc["lipschitz_constant"] = lipschitz_constant(file.poly).to_string();
  doc["cauchy_bound"] = cauchy_bound(file.poly).to_string();
  doc["eval_tolerance"] = eval_tolerance(file.poly, *job.x, r).to_string();
  doc["perturbation_bound"] =
      perturbation_bound(*job.x, ApproxContext(r, static_cast<std::uint32_t>(d))).to_string();
  return doc;
}

json spectrum_report(const JobRequest& job) {
  if (job.inputs.size() < 2) {
    throw Error(ErrorCode::ParseError, "spectrum expects a y bit file and at least one coefficient bit file");
  }
  if (!job.s) throw Error(ErrorCode::ParseError, "spectrum needs --s");
  StageSchedule sched;
  if (!job.stages.empty()) {
    sched = StageSchedule{job.stages, *job.s};
    validate_schedule(sched);
  } else {
    sched = default_schedule(job.stage_count.value_or(3), *job.s);
  }
  const BitSource y = BitSource::load(job.inputs[0]);
  std::vector<BitSource> coeffs;
  for (std::size_t i = 1; i < job.inputs.size(); ++i) coeffs.push_back(BitSource::load(job.inputs[i]));
  const std::size_t n = job.length.value_or(static_cast<std::size_t>(sched.stages.back()));
  json doc;
  doc["s"] = sched.s.to_string();
  doc["stages"] = sched.stages;
  doc["length"] = n;
  doc["coefficient_streams"] = coeffs.size();
  doc["bits"] = interleave(y, coeffs, sched, n);
  return doc;
}

void write_text(std::ostream& os, const json& doc) {
  for (const auto& [key, value] : doc.items()) {
    if (key == "candidates") {
      os << "candidates:\n";
      for (const auto& c : value) {
        os << "  " << c.at("value").get<std::string>();
        if (c.contains("dyadic")) os << "  (" << c.at("dyadic").get<std::string>() << ")";
        os << '\n';
      }
    } else if (key == "intervals") {
      os << "intervals:\n";
      for (const auto& c : value) {
        os << "  (" << c.at("a").get<std::string>() << ", " << c.at("b").get<std::string>()
           << "]: " << c.at("count") << " distinct root(s)\n";
      }
    } else if (key == "warnings") {
      for (const auto& w : value) os << "warning: " << w.get<std::string>() << '\n';
    } else if (value.is_string()) {
      os << key << ": " << value.get<std::string>() << '\n';
    } else {
      os << key << ": " << value.dump() << '\n';
    }
  }
}

std::string render(const JobRequest& job, json doc) {
  if (job.format == OutputFormat::Json) return doc.dump(2) + "\n";
  std::ostringstream os;
  write_text(os, doc);
  return os.str();
}

}  // namespace

std::size_t max_degree_from_env() {
  const char* raw = std::getenv("CERTIROOT_MAX_DEGREE");
  if (raw == nullptr || *raw == '\0') return 64;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw Error(ErrorCode::ParseError, "CERTIROOT_MAX_DEGREE must be a positive integer");
  return static_cast<std::size_t>(v);
}

JobResult run(const JobRequest& job) {
  json doc;
  try {
    const std::size_t max_degree = max_degree_from_env();
    switch (job.command) {
      case Command::Roots: doc = roots_report(job, max_degree); break;
      case Command::Intersect: doc = intersect_report(job, max_degree); break;
      case Command::Sturm: doc = sturm_report(job, max_degree); break;
      case Command::Bounds: doc = bounds_report(job, max_degree); break;
      case Command::Spectrum: doc = spectrum_report(job); break;
    }
    doc["format"] = kFormatVersion;
    doc["command"] = command_name(job.command);
    return {0, render(job, std::move(doc))};
  } catch (const Error& e) {
    json err;
    err["format"] = kFormatVersion;
    err["command"] = command_name(job.command);
    err["error"] = {{"code", error_name(e.code())}, {"message", e.what()}};
    if (job.format == OutputFormat::Json) return {1, err.dump(2) + "\n"};
    return {1, "error: " + std::string(error_name(e.code())) + ": " + e.what() + "\n"};
  }
}

}  // namespace certiroot::cli
