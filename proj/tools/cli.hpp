#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "certiroot/rational.hpp"

namespace certiroot::cli {

enum class Command { Roots, Intersect, Sturm, Bounds, Spectrum };
enum class OutputFormat { Text, Json };

struct JobRequest {
  Command command = Command::Roots;
  /// roots/sturm/bounds: one polynomial file; intersect: two;
  /// spectrum: y bit file followed by one file per coefficient stream.
  std::vector<std::filesystem::path> inputs;
  std::optional<std::uint32_t> precision;
  std::optional<Rational> gamma;
  OutputFormat format = OutputFormat::Json;

  std::vector<std::pair<Rational, Rational>> intervals;  // sturm
  std::optional<Rational> x;                             // bounds

  std::optional<Rational> s;                  // spectrum
  std::vector<std::uint64_t> stages;          // explicit schedule
  std::optional<std::uint32_t> stage_count;   // else default schedule with this many stages
  std::optional<std::size_t> length;          // bits to emit; defaults to the last stage
};

struct JobResult {
  int exit_status = 0;
  std::string report;
};

/// Degree guard from CERTIROOT_MAX_DEGREE, default 64.
std::size_t max_degree_from_env();

/// Runs one job. Failures become exit status 1 with a structured error
/// record in the requested format; nothing is thrown.
JobResult run(const JobRequest& job);

}  // namespace certiroot::cli
