#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "glossflow/core/vocabulary.hpp"

namespace glossflow {

using Clock = std::chrono::steady_clock;
using FrameIndex = std::int64_t;

struct FrameSpan {
  FrameIndex start = 0;
  FrameIndex end = 0;
  friend bool operator==(const FrameSpan&, const FrameSpan&) = default;
};

/// Class distribution produced for one window.
struct ProbVector {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }

  /// Entries in [0, 1] and summing to 1 within `tolerance`.
  bool is_normalized(double tolerance = 1e-5) const noexcept;
};

struct GlossEvent {
  ClassId gloss_id = 0;
  std::string label;
  double confidence = 0.0;
  FrameIndex frame_start = 0;
  FrameIndex frame_end = 0;
  Clock::time_point emitted_at{};
};

}  // namespace glossflow
