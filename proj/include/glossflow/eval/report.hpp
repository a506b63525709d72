#pragma once

#include <iosfwd>
#include <string>

#include "glossflow/eval/sweep.hpp"

namespace glossflow {

inline constexpr const char* kSweepCsvHeader = "threshold,stride,avg_size,wer,events,windows";
inline constexpr const char* kSweepTableTitle = "Inference time WER with different parameters";

/// One row per cell in grid order. Failed cells carry wer=NaN.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

/// Table grouped by threshold: stride columns, one row per avg size, the
/// best WER of each threshold block in bold.
std::string render_sweep_markdown(const SweepResult& result);

/// Three significant digits ("0.71", "2.21").
std::string format_wer(double wer);

}  // namespace glossflow
