#pragma once

#include <array>
#include <string>

#include <json.hpp>

namespace glossflow {

enum class BackendOutput { logits, probabilities };

/// Memory order of the model input. channels_first is (1, 3, T, H, W),
/// time_first is (1, T, 3, H, W).
enum class InputLayout { channels_first, time_first };

struct Resolution {
  int height = 224;
  int width = 224;
  friend bool operator==(const Resolution&, const Resolution&) = default;
};

struct Normalization {
  std::array<double, 3> mean{0.0, 0.0, 0.0};
  std::array<double, 3> stddev{1.0, 1.0, 1.0};
  friend bool operator==(const Normalization&, const Normalization&) = default;
};

struct EngineConfig {
  int window_len = 32;
  double stride_fraction = 0.5;
  int avg_size = 1;
  double threshold = 0.5;
  int frame_skip = 1;
  Resolution input_resolution{};
  // Short side the frame is resized to before the center crop.
  int resize_short_side = 256;
  Normalization normalization{};
  BackendOutput backend_output = BackendOutput::logits;
  InputLayout input_layout = InputLayout::channels_first;

  friend bool operator==(const EngineConfig&, const EngineConfig&) = default;
};

/// Builds an EngineConfig from a JSON object. window_len, stride_fraction,
/// avg_size and threshold are required; the remaining keys fall back to the
/// defaults above. Throws Error{ConfigMissing|ConfigRange, field}.
EngineConfig validate_config(const nlohmann::json& raw);

/// Re-checks the bounds of an already-typed config.
void check_config(const EngineConfig& cfg);

nlohmann::json to_json(const EngineConfig& cfg);

/// The subset of keys a live session may change.
inline constexpr std::array<const char*, 3> kLiveTunableKeys{"threshold", "avg_size",
                                                              "stride_fraction"};

/// Overlays `patch` onto `base` and validates the result. With live_only,
/// keys outside kLiveTunableKeys are rejected as ConfigRange.
EngineConfig merge_config(const EngineConfig& base, const nlohmann::json& patch,
                          bool live_only = false);

EngineConfig load_config_file(const std::string& path);

}  // namespace glossflow
