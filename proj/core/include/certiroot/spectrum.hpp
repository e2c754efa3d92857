#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "certiroot/rational.hpp"

namespace certiroot {

/// Finite binary sequence with 1-based access.
class BitSource {
 public:
  BitSource() = default;
  explicit BitSource(std::vector<std::uint8_t> bits);

  /// ASCII '0'/'1'; whitespace is skipped, anything else is a ParseError.
  static BitSource from_string(std::string_view ascii);
  static BitSource load(const std::filesystem::path& path);

  std::size_t size() const noexcept { return bits_.size(); }
  /// Throws SourceExhausted when index is 0 or past the end.
  int bit(std::size_t index) const;
  std::string to_string() const;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Stage boundaries h_1 < h_2 < ... and the split fraction s.
struct StageSchedule {
  std::vector<std::uint64_t> stages;
  Rational s;
};

inline constexpr std::uint64_t kDefaultBitBudget = std::uint64_t{1} << 24;

/// Throws InvalidSchedule unless h_1 = 2, h_j >= 2^h_(j-1) and 0 <= s <= 1.
void validate_schedule(const StageSchedule& sched);

/// h_1 = 2 and h_j = 2^h_(j-1), the slowest admissible growth.
/// Throws ScheduleOverflow once a stage would exceed bit_budget.
StageSchedule default_schedule(std::uint32_t j_max, Rational s, std::uint64_t bit_budget = kDefaultBitBudget);

/// Where an output bit comes from: source 0 is y, source i >= 1 is the
/// i-th coefficient stream. index is 1-based within that source.
struct BitOrigin {
  std::size_t source = 0;
  std::size_t index = 0;

  friend bool operator==(const BitOrigin&, const BitOrigin&) = default;
};

/// Stage j covers positions h_(j-1)+1 .. h_j (h_0 = 0). Positions up to
/// floor(s h_j) copy y at the same position; the rest of the stage takes
/// the next bits of the round robin a_1, a_2, ..., a_d, a_1, ..., which
/// resumes across stages. Throws LengthMismatch if n exceeds the last stage.
std::vector<BitOrigin> interleave_layout(const StageSchedule& sched, std::size_t d, std::size_t n);

/// First n bits of the constructed point as ASCII '0'/'1'.
/// Throws SourceExhausted if a source is too short.
std::string interleave(const BitSource& y, std::span<const BitSource> coeff_bits, const StageSchedule& sched,
                       std::size_t n);

struct YFragment {
  std::size_t start = 0;  // 1-based position of the first bit
  std::string bits;

  friend bool operator==(const YFragment&, const YFragment&) = default;
};

struct ExtractedBlocks {
  std::vector<YFragment> y;
  /// Consumed prefix of each coefficient stream, a_1 first.
  std::vector<std::string> coefficients;
};

/// Inverse of interleave for the same schedule and d.
ExtractedBlocks extract_blocks(std::string_view x, const StageSchedule& sched, std::size_t d);

}  // namespace certiroot
