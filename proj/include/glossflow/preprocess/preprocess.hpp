#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "glossflow/core/config.hpp"
#include "glossflow/preprocess/image.hpp"

namespace glossflow {

inline constexpr int kMinFrameSide = 16;

/// Normalized 3 x H x W frame, channel-first.
struct FrameTensor {
  int height = 0;
  int width = 0;
  std::vector<float> values;
};

using FramePtr = std::shared_ptr<const FrameTensor>;

/// Resize the short side to cfg.resize_short_side (bilinear, half-pixel
/// centres, no antialiasing), center-crop to cfg.input_resolution, scale to
/// [0, 1] and normalize per channel. Throws Error{FrameTooSmall} below 16x16.
FrameTensor preprocess_frame(const RawFrame& frame, const EngineConfig& cfg);

/// Model input for one window, batch dimension of 1 implied.
struct WindowTensor {
  InputLayout layout = InputLayout::channels_first;
  int frames = 0;
  int height = 0;
  int width = 0;
  std::vector<float> values;

  /// Shape with the batch axis, in `layout` order.
  std::array<std::int64_t, 5> shape() const noexcept;
};

/// Stacks exactly `window_len` frames in capture order.
/// Throws Error{WindowSizeMismatch} for any other count.
WindowTensor assemble_window(std::span<const FramePtr> frames, int window_len, InputLayout layout);
WindowTensor assemble_window(std::span<const FrameTensor> frames, int window_len, InputLayout layout);

/// Same as assemble_window, reusing `out`'s storage across windows.
void assemble_window_into(std::span<const FramePtr> frames, int window_len, InputLayout layout, WindowTensor& out);

}  // namespace glossflow
