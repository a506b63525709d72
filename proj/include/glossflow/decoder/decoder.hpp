#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glossflow/backend/backend.hpp"
#include "glossflow/core/types.hpp"
#include "glossflow/core/vocabulary.hpp"

namespace glossflow {

/// Max-subtracted softmax, accumulated in double. Throws Error{InvalidScores}
/// on NaN or infinite input.
ProbVector softmax(std::span<const double> scores);

/// Softmax for logits; validation only for backends that already emit
/// probabilities.
ProbVector to_probabilities(const ScoreVector& scores, BackendOutput kind);

struct PredictionRecord {
  std::int64_t window_ordinal = 0;
  FrameSpan span;
  ProbVector probs;
};

struct GateHit {
  ClassId gloss_id = 0;
  double confidence = 0.0;
  friend bool operator==(const GateHit&, const GateHit&) = default;
};

/// Largest entry if it reaches the threshold; ties go to the lowest id.
std::optional<GateHit> gate(const ProbVector& smoothed, double threshold);

struct Transcript {
  std::vector<GlossEvent> events;
  std::vector<std::string> labels() const;
};

/// smooth -> gate -> collapse over one session's prediction stream.
///
/// smooth keeps the last k records and returns their element-wise mean
/// (fewer than k during warm-up). collapse suppresses an emission that
/// repeats the previously emitted gloss; a sub-threshold window in between
/// clears that memory, so a sign repeated after a pause is reported twice.
class StreamDecoder {
 public:
  StreamDecoder(std::shared_ptr<const Vocabulary> vocab, int avg_size, double threshold);

  ProbVector smooth(PredictionRecord record);
  std::optional<GlossEvent> collapse(const std::optional<GateHit>& hit, FrameSpan span);

  /// One window through the whole chain.
  std::optional<GlossEvent> step(PredictionRecord record);

  /// Shrinking k drops the oldest records; growing it keeps the history.
  void set_avg_size(int avg_size);
  void set_threshold(double threshold);

  int avg_size() const noexcept { return avg_size_; }
  double threshold() const noexcept { return threshold_; }
  std::size_t history_size() const noexcept { return history_.size(); }
  std::optional<ClassId> last_emitted() const noexcept { return last_emitted_; }

 private:
  std::shared_ptr<const Vocabulary> vocab_;
  int avg_size_;
  double threshold_;
  std::deque<PredictionRecord> history_;
  std::optional<ClassId> last_emitted_;
};

}  // namespace glossflow
