#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "certiroot/error.hpp"
#include "cli.hpp"

namespace {

using certiroot::Rational;
using certiroot::cli::Command;
using certiroot::cli::JobRequest;
using certiroot::cli::OutputFormat;

std::optional<Rational> parse_optional(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return Rational::parse(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certiroot: certified real-root enumeration for polynomials with rational coefficients"};
  app.require_subcommand(1);

  JobRequest job;
  std::string gamma_text;
  std::string format_text = "json";
  std::string x_text;
  std::string s_text;
  std::vector<std::string> interval_text;
  std::string poly_path;
  std::string a_path;
  std::string b_path;
  std::string y_path;
  std::vector<std::string> coeff_paths;
  std::uint32_t precision = 0;

  auto add_common = [&](CLI::App* sub, bool needs_precision) {
    sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "json"}));
    if (needs_precision) sub->add_option("--precision,-r", precision, "Output precision r (roots within 2^-r)")->required();
  };

  auto* roots = app.add_subcommand("roots", "Enumerate candidates for every real root");
  roots->add_option("--poly", poly_path, "Polynomial JSON file")->required();
  roots->add_option("--gamma", gamma_text, "Sign threshold as a rational, e.g. 1/1024");
  add_common(roots, true);

  auto* inter = app.add_subcommand("intersect", "Enumerate candidates for the points where A(x) = B(x)");
  inter->add_option("--a", a_path, "Polynomial JSON file for A")->required();
  inter->add_option("--b", b_path, "Polynomial JSON file for B")->required();
  inter->add_option("--gamma", gamma_text, "Sign threshold as a rational");
  add_common(inter, true);

  auto* sturm = app.add_subcommand("sturm", "Print the Sturm chain and distinct-root counts");
  sturm->add_option("--poly", poly_path, "Polynomial JSON file")->required();
  sturm->add_option("--interval", interval_text, "Half-open interval (a, b]; repeatable")
      ->expected(2)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  add_common(sturm, false);

  auto* bounds = app.add_subcommand("bounds", "Lipschitz, Cauchy, evaluation and perturbation bounds");
  bounds->add_option("--poly", poly_path, "Polynomial JSON file")->required();
  bounds->add_option("--x", x_text, "Evaluation point as a rational")->required();
  add_common(bounds, true);

  std::vector<std::uint64_t> stages;
  std::uint32_t stage_count = 0;
  std::size_t length = 0;
  auto* spectrum = app.add_subcommand("spectrum", "Interleave a source bit stream with coefficient bit streams");
  spectrum->add_option("--y", y_path, "ASCII bit file for the source sequence")->required();
  spectrum->add_option("--coeff", coeff_paths, "ASCII bit file per coefficient stream, a_1 first")->required();
  spectrum->add_option("--s", s_text, "Split fraction s in [0, 1]")->required();
  spectrum->add_option("--stages", stages, "Explicit stage boundaries, e.g. 2,4,16")->delimiter(',');
  spectrum->add_option("--stage-count", stage_count, "Use the minimal-growth schedule with this many stages");
  spectrum->add_option("--length", length, "Number of output bits (default: last stage boundary)");
  add_common(spectrum, false);

  CLI11_PARSE(app, argc, argv);

  try {
    job.format = format_text == "text" ? OutputFormat::Text : OutputFormat::Json;
    if (precision > 0) job.precision = precision;
    job.gamma = parse_optional(gamma_text);
    if (roots->parsed()) {
      job.command = Command::Roots;
      job.inputs = {poly_path};
    } else if (inter->parsed()) {
      job.command = Command::Intersect;
      job.inputs = {a_path, b_path};
    } else if (sturm->parsed()) {
      job.command = Command::Sturm;
      job.inputs = {poly_path};
      for (std::size_t i = 0; i + 1 < interval_text.size(); i += 2) {
        job.intervals.emplace_back(Rational::parse(interval_text[i]), Rational::parse(interval_text[i + 1]));
      }
    } else if (bounds->parsed()) {
      job.command = Command::Bounds;
      job.inputs = {poly_path};
      job.x = parse_optional(x_text);
    } else {
      job.command = Command::Spectrum;
      job.inputs.emplace_back(y_path);
      for (const auto& p : coeff_paths) job.inputs.emplace_back(p);
      job.s = parse_optional(s_text);
      job.stages = stages;
      if (stage_count > 0) job.stage_count = stage_count;
      if (length > 0) job.length = length;
    }
  } catch (const certiroot::Error& e) {
    std::cerr << "error: " << certiroot::error_name(e.code()) << ": " << e.what() << '\n';
    return 1;
  }

  const auto result = certiroot::cli::run(job);
  (result.exit_status == 0 ? std::cout : std::cerr) << result.report;
  return result.exit_status;
}
