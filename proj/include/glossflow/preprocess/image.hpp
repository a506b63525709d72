#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "glossflow/core/types.hpp"

namespace glossflow {

/// Decoded RGB frame, row-major and interleaved.
struct RawFrame {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> pixels;
  FrameIndex capture_index = 0;
  Clock::time_point capture_time{};
};

/// Decodes a JPEG buffer. EXIF orientation is ignored; pixels come back as
/// stored. Corrupt or truncated data throws Error{DecodeError}.
RawFrame decode_frame(std::span<const std::uint8_t> encoded, FrameIndex capture_index,
                      Clock::time_point capture_time = Clock::now());

std::vector<std::uint8_t> encode_jpeg(const RawFrame& frame, int quality = 90);

/// Reads a PNG or JPEG file, detected by its signature bytes.
RawFrame read_image_file(const std::filesystem::path& path, FrameIndex capture_index);

void write_png(const RawFrame& frame, const std::filesystem::path& path);

/// PNG/JPEG files of a directory ordered by filename.
std::vector<std::filesystem::path> list_frame_files(const std::filesystem::path& directory);

}  // namespace glossflow
