#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glossflow/backend/backend.hpp"
#include "glossflow/eval/offline.hpp"

namespace glossflow {

struct SweepGrid {
  std::vector<double> thresholds;
  std::vector<double> strides;
  std::vector<int> avg_sizes;

  std::size_t cell_count() const noexcept { return thresholds.size() * strides.size() * avg_sizes.size(); }
};

struct SweepCell {
  double threshold = 0.0;
  double stride = 0.0;
  int avg_size = 1;
  double wer = 0.0;
  std::size_t errors = 0;      // pooled S + D + I
  std::size_t ref_len = 0;     // pooled N
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t events = 0;
  std::size_t windows = 0;
  std::optional<std::string> failure;
};

/// Cells are ordered threshold-major, then stride, then avg size.
struct SweepResult {
  SweepGrid grid;
  std::vector<SweepCell> cells;

  const SweepCell& at(std::size_t t, std::size_t s, std::size_t k) const;
};

/// Where window predictions come from during a sweep: a backend built fresh
/// for every (stride, clip) inference pass, or recorded logs replayed at
/// any hop their recording hop divides.
struct PredictionSource {
  BackendFactory backend_factory;
  std::optional<std::filesystem::path> log_dir;  // <log_dir>/<clip source stem>.jsonl
  std::optional<std::filesystem::path> dump_dir;  // write inferred logs per stride
};

/// Pooled WER (sum of errors over sum of reference lengths) for every grid
/// cell. Inference runs once per distinct hop; thresholds and averaging
/// sizes are replays of the cached predictions. A failing pass marks its
/// cells failed without aborting the sweep.
SweepResult sweep(const std::vector<AnnotatedClip>& clips, const SweepGrid& grid, const EngineConfig& base,
                  const PredictionSource& source, std::shared_ptr<const Vocabulary> vocab);

/// Parses "0.5,0.9" or a "start:stop:step" range (inclusive).
std::vector<double> parse_real_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

}  // namespace glossflow
