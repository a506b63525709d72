#pragma once

#include <filesystem>
#include <memory>

#include "glossflow/backend/backend.hpp"
#include "glossflow/core/config.hpp"

namespace glossflow {

/// Loads a serialized ONNX model whose single input is a window in
/// cfg.input_layout order and whose single output is (1, expected_classes).
/// Errors: ModelNotFound, ClassCountMismatch, ModelShapeError, BackendError.
std::unique_ptr<Backend> load_onnx_backend(const std::filesystem::path& model_path,
                                           std::size_t expected_classes, const EngineConfig& cfg);

}  // namespace glossflow
