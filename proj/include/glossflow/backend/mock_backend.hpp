#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "glossflow/backend/backend.hpp"

namespace glossflow {

/// Vectors returned by successive infer() calls; calls past the end of the
/// list return `fallback` (uniform when not given).
struct MockScript {
  std::vector<ScoreVector> script;
  std::optional<ScoreVector> fallback;
  std::chrono::milliseconds delay{0};
};

/// Accepts either a bare array of arrays or
/// {"script": [[...], ...], "default": [...], "delay_ms": n}.
MockScript parse_mock_script(const nlohmann::json& doc);
MockScript load_mock_script_file(const std::string& path);

/// Throws Error{ScriptError} for an empty script or inconsistent lengths.
std::unique_ptr<Backend> make_mock_backend(MockScript script,
                                           BackendOutput kind = BackendOutput::probabilities);

}  // namespace glossflow
