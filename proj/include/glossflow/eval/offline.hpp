#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glossflow/backend/backend.hpp"
#include "glossflow/core/config.hpp"
#include "glossflow/core/vocabulary.hpp"
#include "glossflow/decoder/decoder.hpp"
#include "glossflow/eval/edit_distance.hpp"
#include "glossflow/preprocess/image.hpp"

namespace glossflow {

/// A continuous recording and the gloss sequence signed in it. `source` is a
/// directory of PNG/JPEG frames or a prediction log (.jsonl) to replay.
struct AnnotatedClip {
  std::filesystem::path source;
  std::vector<std::string> reference;
};

/// JSON Lines, one {"source": "<path>", "glosses": [...]} per line. Relative
/// sources resolve against the annotation file's directory.
std::vector<AnnotatedClip> load_annotations(const std::filesystem::path& path);

/// Throws Error{UnknownLabel} for reference labels outside the vocabulary.
void check_reference(const AnnotatedClip& clip, const Vocabulary& vocab);

bool is_prediction_log(const std::filesystem::path& source);

/// Produces frames in capture order; nullopt ends the stream. Both sources
/// below number frames by position.
using FrameSource = std::function<std::optional<RawFrame>()>;

FrameSource directory_frames(const std::filesystem::path& directory);
FrameSource memory_frames(std::span<const RawFrame> frames);

/// Runs preprocess -> scheduler -> backend for every window of the stream.
/// frame_skip keeps capture indices divisible by cfg.frame_skip. Frames
/// that fail to decode are skipped and reported through `warnings`.
std::vector<PredictionRecord> infer_windows(const FrameSource& frames, const EngineConfig& cfg,
                                            Backend& backend, std::vector<std::string>* warnings = nullptr);

/// Replays recorded predictions through a fresh decoder.
Transcript decode_predictions(std::span<const PredictionRecord> records, int avg_size, double threshold,
                              std::shared_ptr<const Vocabulary> vocab);

/// Keeps the windows a coarser hop would have produced. The log must come
/// from a hop that divides `hop`; returns nullopt otherwise.
std::optional<std::vector<PredictionRecord>> resample_predictions(std::span<const PredictionRecord> records,
                                                                  int hop);

/// Hop a log was recorded with, or nullopt for fewer than two windows.
std::optional<int> recorded_hop(std::span<const PredictionRecord> records);

struct OfflineResult {
  Transcript transcript;
  EditCounts counts;
  double wer = 0.0;
  std::vector<PredictionRecord> log;
  std::vector<std::string> warnings;
};

/// Decodes one clip and scores it against its reference. Prediction-log
/// sources are replayed (hop-resampled) instead of running the backend, so
/// `backend` may be null for them.
OfflineResult run_offline(const AnnotatedClip& clip, const EngineConfig& cfg, Backend* backend,
                          std::shared_ptr<const Vocabulary> vocab);

/// Scores an already decoded transcript.
OfflineResult score_transcript(Transcript transcript, const AnnotatedClip& clip);

}  // namespace glossflow
