#pragma once

// Hot loops of the pipeline. Every kernel has an OpenMP implementation in
// glossflow::kernels and a plain serial twin in glossflow::kernels::reference
// with the same signature; tests check them against each other and the
// benchmark target compares their speed.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace glossflow::kernels {

/// Interleaved 8-bit RGB image, row-major.
struct ImageView {
  std::span<const std::uint8_t> pixels;
  int height = 0;
  int width = 0;
};

/// Geometry and normalization for resize-short-side -> center-crop -> normalize.
struct ResizeCropPlan {
  int resized_height = 0;
  int resized_width = 0;
  int crop_top = 0;
  int crop_left = 0;
  int out_height = 0;
  int out_width = 0;
  std::array<double, 3> mean{};
  std::array<double, 3> stddev{};
};

ResizeCropPlan plan_resize_crop(int src_height, int src_width, int short_side, int out_height,
                                int out_width, const std::array<double, 3>& mean,
                                const std::array<double, 3>& stddev);

/// Writes a 3 x out_height x out_width channel-first tensor.
void resize_crop_normalize(const ImageView& src, const ResizeCropPlan& plan, std::span<float> out);

/// Shapes for a batch-1 3-D convolution / pooling. 2-D ops use depth 1.
struct Volume {
  int channels = 0;
  int depth = 1;
  int height = 1;
  int width = 1;
  std::size_t elements() const noexcept {
    return static_cast<std::size_t>(channels) * depth * height * width;
  }
};

struct Window3 {
  std::array<int, 3> kernel{1, 1, 1};
  std::array<int, 3> stride{1, 1, 1};
  std::array<int, 3> dilation{1, 1, 1};
  std::array<int, 3> pad_begin{0, 0, 0};
  std::array<int, 3> pad_end{0, 0, 0};
};

Volume conv_output_shape(const Volume& in, int out_channels, const Window3& w);

/// weight is (out_channels, in.channels, kd, kh, kw); bias may be empty.
void conv3d(std::span<const float> input, const Volume& in, std::span<const float> weight,
            std::span<const float> bias, const Window3& w, std::span<float> output,
            const Volume& out);

enum class PoolKind { max, average };

void pool3d(std::span<const float> input, const Volume& in, const Window3& w, PoolKind kind,
            bool count_include_pad, std::span<float> output, const Volume& out);

/// Mean over every spatial position, one value per channel.
void global_average_pool(std::span<const float> input, const Volume& in, std::span<float> output);

struct GemmShape {
  int m = 0;  // rows of op(A)
  int n = 0;  // cols of op(B)
  int k = 0;  // shared dimension
  bool trans_a = false;
  bool trans_b = false;
};

/// Bias broadcast is described by its row/column counts (1 or m / 1 or n);
/// an empty bias means zero.
struct BiasShape {
  int rows = 0;
  int cols = 0;
};

/// Y = alpha * op(A) * op(B) + beta * C, Y is m x n row-major.
void gemm(std::span<const float> a, std::span<const float> b, std::span<const float> c,
          const BiasShape& c_shape, const GemmShape& shape, float alpha, float beta,
          std::span<float> y);

namespace reference {

void resize_crop_normalize(const ImageView& src, const ResizeCropPlan& plan, std::span<float> out);

void conv3d(std::span<const float> input, const Volume& in, std::span<const float> weight,
            std::span<const float> bias, const Window3& w, std::span<float> output,
            const Volume& out);

void pool3d(std::span<const float> input, const Volume& in, const Window3& w, PoolKind kind,
            bool count_include_pad, std::span<float> output, const Volume& out);

void global_average_pool(std::span<const float> input, const Volume& in, std::span<float> output);

void gemm(std::span<const float> a, std::span<const float> b, std::span<const float> c,
          const BiasShape& c_shape, const GemmShape& shape, float alpha, float beta,
          std::span<float> y);

}  // namespace reference

}  // namespace glossflow::kernels
