#pragma once

// Minimal CPU interpreter for ONNX graphs: enough operators for compact
// video classifiers (convolution, pooling, linear heads, elementwise math).
// Float32 activations; int64 only for shape tensors.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace glossflow::onnx {

struct Tensor {
  std::vector<std::int64_t> shape;
  std::vector<float> data;
  std::vector<std::int64_t> ints;  // used instead of data when is_int
  bool is_int = false;

  std::size_t numel() const noexcept;
};

struct ValueInfo {
  std::string name;
  // nullopt for symbolic or unknown dimensions.
  std::vector<std::optional<std::int64_t>> dims;
};

struct Attribute {
  std::int64_t i = 0;
  float f = 0.0f;
  std::string s;
  std::vector<std::int64_t> ints;
  std::vector<float> floats;
  std::shared_ptr<const Tensor> t;
};

struct Node {
  std::string op_type;
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::map<std::string, Attribute> attributes;

  const Attribute* attr(std::string_view key) const;
  std::int64_t attr_int(std::string_view key, std::int64_t fallback) const;
  float attr_float(std::string_view key, float fallback) const;
  std::vector<std::int64_t> attr_ints(std::string_view key) const;
};

/// Immutable after load; run() keeps no state, so one Graph may be shared.
class Graph {
 public:
  /// Throws Error{ModelNotFound} for a missing file and Error{BackendError}
  /// for undecodable files or unsupported operators.
  static Graph load(const std::filesystem::path& path);
  static Graph parse(std::string_view bytes);

  const ValueInfo& input() const noexcept { return input_; }
  const ValueInfo& output() const noexcept { return output_; }
  std::int64_t opset() const noexcept { return opset_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }

  Tensor run(Tensor input) const;

 private:
  ValueInfo input_;
  ValueInfo output_;
  std::int64_t opset_ = 0;
  std::vector<Node> nodes_;
  std::map<std::string, std::shared_ptr<const Tensor>> initializers_;
};

bool is_supported_op(std::string_view op_type);

}  // namespace glossflow::onnx
