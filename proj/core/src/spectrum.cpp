#include "certiroot/spectrum.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "certiroot/error.hpp"

namespace certiroot {

BitSource::BitSource(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw Error(ErrorCode::ParseError, "bit source holds a value other than 0 or 1");
  }
}

BitSource BitSource::from_string(std::string_view ascii) {
  std::vector<std::uint8_t> bits;
  bits.reserve(ascii.size());
  for (char c : ascii) {
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != ' ' && c != '\n' && c != '\r' && c != '\t') {
      throw Error(ErrorCode::ParseError, std::string("unexpected character '") + c + "' in bit string");
    }
  }
  return BitSource(std::move(bits));
}

BitSource BitSource::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open bit file " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_string(text);
}

int BitSource::bit(std::size_t index) const {
  if (index == 0 || index > bits_.size()) {
    throw Error(ErrorCode::SourceExhausted,
                "bit " + std::to_string(index) + " requested from a source of length " + std::to_string(bits_.size()));
  }
  return bits_[index - 1];
}

std::string BitSource::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

void validate_schedule(const StageSchedule& sched) {
  if (sched.s.sign() < 0 || sched.s > Rational(1)) {
    throw Error(ErrorCode::InvalidSchedule, "s must lie in [0, 1], got " + sched.s.to_string());
  }
  if (sched.stages.empty() || sched.stages.front() != 2) {
    throw Error(ErrorCode::InvalidSchedule, "the first stage boundary must be 2");
  }
  for (std::size_t j = 1; j < sched.stages.size(); ++j) {
    const std::uint64_t prev = sched.stages[j - 1];
    if (prev >= 64 || sched.stages[j] < (std::uint64_t{1} << prev)) {
      throw Error(ErrorCode::InvalidSchedule, "stage " + std::to_string(j + 1) + " = " +
                                                  std::to_string(sched.stages[j]) + " is below 2^" +
                                                  std::to_string(prev));
    }
  }
}

StageSchedule default_schedule(std::uint32_t j_max, Rational s, std::uint64_t bit_budget) {
  if (j_max < 1) throw Error(ErrorCode::PreconditionViolated, "default_schedule needs j_max >= 1");
  StageSchedule sched{{2}, std::move(s)};
  for (std::uint32_t j = 2; j <= j_max; ++j) {
    const std::uint64_t prev = sched.stages.back();
    if (prev >= 64 || (std::uint64_t{1} << prev) > bit_budget) {
      throw Error(ErrorCode::ScheduleOverflow,
                  "stage " + std::to_string(j) + " = 2^" + std::to_string(prev) + " exceeds the bit budget");
    }
    sched.stages.push_back(std::uint64_t{1} << prev);
  }
  validate_schedule(sched);
  return sched;
}

std::vector<BitOrigin> interleave_layout(const StageSchedule& sched, std::size_t d, std::size_t n) {
  validate_schedule(sched);
  if (d < 1) throw Error(ErrorCode::PreconditionViolated, "interleave needs at least one coefficient stream");
  if (n > sched.stages.back()) {
    throw Error(ErrorCode::LengthMismatch, "requested " + std::to_string(n) + " bits but the schedule ends at " +
                                               std::to_string(sched.stages.back()));
  }
  std::vector<BitOrigin> layout;
  layout.reserve(n);
  std::size_t round_robin = 0;
  std::uint64_t prev = 0;
  for (const std::uint64_t h : sched.stages) {
    const std::uint64_t scaled = (sched.s * Rational(static_cast<std::int64_t>(h))).floor().to_int64();
    const std::uint64_t split = std::clamp(scaled, prev, h);
    for (std::uint64_t pos = prev + 1; pos <= h && layout.size() < n; ++pos) {
      if (pos <= split) {
        layout.push_back({0, static_cast<std::size_t>(pos)});
      } else {
        layout.push_back({round_robin % d + 1, round_robin / d + 1});
        ++round_robin;
      }
    }
    if (layout.size() >= n) break;
    prev = h;
  }
  return layout;
}

std::string interleave(const BitSource& y, std::span<const BitSource> coeff_bits, const StageSchedule& sched,
                       std::size_t n) {
  const auto layout = interleave_layout(sched, coeff_bits.size(), n);
  std::string x;
  x.reserve(n);
  for (const auto& origin : layout) {
    const BitSource& src = origin.source == 0 ? y : coeff_bits[origin.source - 1];
    x.push_back(static_cast<char>('0' + src.bit(origin.index)));
  }
  return x;
}

ExtractedBlocks extract_blocks(std::string_view x, const StageSchedule& sched, std::size_t d) {
  for (char c : x) {
    if (c != '0' && c != '1') throw Error(ErrorCode::ParseError, "extract_blocks expects an ASCII bit string");
  }
  const auto layout = interleave_layout(sched, d, x.size());
  ExtractedBlocks out;
  out.coefficients.resize(d);
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const auto& origin = layout[i];
    if (origin.source == 0) {
      if (out.y.empty() || out.y.back().start + out.y.back().bits.size() != origin.index) {
        out.y.push_back({origin.index, {}});
      }
      out.y.back().bits.push_back(x[i]);
    } else {
      out.coefficients[origin.source - 1].push_back(x[i]);
    }
  }
  return out;
}

}  // namespace certiroot
