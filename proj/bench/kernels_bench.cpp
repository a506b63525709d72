// OpenMP kernels against their serial reference twins.
// Run: build/bench/glossflow_bench [--benchmark_filter=conv]

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "glossflow/kernels/kernels.hpp"

namespace gk = glossflow::kernels;

namespace {

std::vector<float> random_floats(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
  std::vector<float> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

// Stem convolution of the bundled classifier: 32 x 224 x 224 window,
// 1x8x8 kernel with stride 8 into 8 channels.
struct ConvCase {
  gk::Volume in{3, 32, 224, 224};
  gk::Window3 w;
  gk::Volume out;
  std::vector<float> input, weight, bias, output;

  ConvCase() {
    w.kernel = {1, 8, 8};
    w.stride = {1, 8, 8};
    out = gk::conv_output_shape(in, 8, w);
    input = random_floats(in.elements(), 1);
    weight = random_floats(static_cast<std::size_t>(8) * 3 * 64, 2);
    bias = random_floats(8, 3);
    output.resize(out.elements());
  }
};

template <bool Parallel>
void BM_conv3d(benchmark::State& state) {
  ConvCase c;
  for (auto _ : state) {
    if constexpr (Parallel) {
      gk::conv3d(c.input, c.in, c.weight, c.bias, c.w, c.output, c.out);
    } else {
      gk::reference::conv3d(c.input, c.in, c.weight, c.bias, c.w, c.output, c.out);
    }
    benchmark::DoNotOptimize(c.output.data());
  }
}

// One 640x480 camera frame to a 224x224 crop of a 256 short side.
template <bool Parallel>
void BM_resize_crop_normalize(benchmark::State& state) {
  std::vector<std::uint8_t> pixels(640 * 480 * 3);
  for (std::size_t i = 0; i < pixels.size(); ++i) pixels[i] = static_cast<std::uint8_t>((i * 31) % 251);
  const gk::ImageView src{pixels, 480, 640};
  const auto plan = gk::plan_resize_crop(480, 640, 256, 224, 224, {0.45, 0.45, 0.45}, {0.225, 0.225, 0.225});
  std::vector<float> out(3 * 224 * 224);
  for (auto _ : state) {
    if constexpr (Parallel) {
      gk::resize_crop_normalize(src, plan, out);
    } else {
      gk::reference::resize_crop_normalize(src, plan, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_gemm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = random_floats(static_cast<std::size_t>(n) * n, 4);
  const auto b = random_floats(static_cast<std::size_t>(n) * n, 5);
  std::vector<float> y(static_cast<std::size_t>(n) * n);
  const gk::GemmShape shape{n, n, n, false, true};
  for (auto _ : state) {
    if constexpr (Parallel) {
      gk::gemm(a, b, {}, {}, shape, 1.0f, 0.0f, y);
    } else {
      gk::reference::gemm(a, b, {}, {}, shape, 1.0f, 0.0f, y);
    }
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * n * n);
}

}  // namespace

BENCHMARK(BM_conv3d<true>)->Name("conv3d/openmp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_conv3d<false>)->Name("conv3d/reference")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_resize_crop_normalize<true>)->Name("resize_crop_normalize/openmp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_resize_crop_normalize<false>)->Name("resize_crop_normalize/reference")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gemm<true>)->Name("gemm/openmp")->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gemm<false>)->Name("gemm/reference")->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
