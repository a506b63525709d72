#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace glossflow::onnx {

struct NodeAttr {
  std::string name;
  std::variant<std::int64_t, float, std::string, std::vector<std::int64_t>, std::vector<float>> value;
};

/// Writes ONNX ModelProto files. Dimensions <= 0 become symbolic.
class ModelBuilder {
 public:
  explicit ModelBuilder(std::int64_t opset = 17);
  ~ModelBuilder();
  ModelBuilder(ModelBuilder&&) noexcept;
  ModelBuilder& operator=(ModelBuilder&&) noexcept;

  ModelBuilder& input(const std::string& name, const std::vector<std::int64_t>& dims);
  ModelBuilder& output(const std::string& name, const std::vector<std::int64_t>& dims);
  ModelBuilder& initializer(const std::string& name, const std::vector<std::int64_t>& dims,
                            const std::vector<float>& values);
  ModelBuilder& initializer_int64(const std::string& name, const std::vector<std::int64_t>& dims,
                                  const std::vector<std::int64_t>& values);
  ModelBuilder& node(const std::string& op_type, const std::vector<std::string>& inputs,
                     const std::vector<std::string>& outputs, const std::vector<NodeAttr>& attrs = {});

  std::string serialize() const;
  void save(const std::filesystem::path& path) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// (1, 3, T, H, W) -> GlobalAveragePool -> Flatten -> Gemm.
/// weights is classes x 3 row-major, so output = weights * channel_means + bias.
struct PooledLinearSpec {
  int window_len = 32;
  int height = 224;
  int width = 224;
  std::vector<float> weights;
  std::vector<float> bias;
};

std::string pooled_linear_model(const PooledLinearSpec& spec);

/// Small 3-D conv classifier over a (1, 3, T, H, W) window:
/// Conv(3->c1, k=1x8x8, s=1x8x8) -> Relu -> MaxPool(2x2x2) ->
/// Conv(c1->c2, k=3, pad=1) -> Relu -> GlobalAveragePool -> Flatten -> Gemm.
/// Weights are drawn from a seeded uniform distribution.
struct ConvClassifierSpec {
  int window_len = 32;
  int height = 224;
  int width = 224;
  int classes = 10;
  int stem_channels = 8;
  int body_channels = 16;
  std::uint32_t seed = 7;
};

std::string conv_classifier_model(const ConvClassifierSpec& spec);

}  // namespace glossflow::onnx
