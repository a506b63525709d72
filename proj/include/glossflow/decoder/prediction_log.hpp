#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "glossflow/decoder/decoder.hpp"

namespace glossflow {

/// One JSON object per line:
/// {"window_ordinal":0,"frame_start":0,"frame_end":31,"probs":[...]}.
/// Doubles are written in shortest round-trip form, so a log replays
/// bit-identically.
std::string to_json_line(const PredictionRecord& record);
PredictionRecord parse_json_line(const std::string& line);

void write_prediction_log(std::ostream& out, std::span<const PredictionRecord> records);
std::string prediction_log_text(std::span<const PredictionRecord> records);
std::vector<PredictionRecord> read_prediction_log(std::istream& in);
std::vector<PredictionRecord> read_prediction_log_file(const std::filesystem::path& path);
void write_prediction_log_file(const std::filesystem::path& path, std::span<const PredictionRecord> records);

}  // namespace glossflow
