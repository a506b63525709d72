#pragma once

#include <chrono>
#include <cstddef>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "glossflow/core/config.hpp"
#include "glossflow/preprocess/preprocess.hpp"

namespace glossflow {

/// Raw model output for one window: logits or probabilities per class.
using ScoreVector = std::vector<double>;

struct LatencyStats {
  std::size_t calls = 0;
  double last_ms = 0.0;
  double moving_average_ms = 0.0;  // mean of the last kLatencyWindow calls
};

inline constexpr std::size_t kLatencyWindow = 10;

/// Inference over one window. Implementations must be deterministic for a
/// fixed model and input and must not keep references to the window. A
/// backend is driven by one thread at a time; latency() may be read from
/// any thread.
class Backend {
 public:
  virtual ~Backend() = default;
  Backend(const Backend&) = delete;
  Backend& operator=(const Backend&) = delete;

  virtual std::size_t num_classes() const = 0;
  BackendOutput output_kind() const noexcept { return output_kind_; }

  /// Runs the model and records wall-clock latency for the call.
  ScoreVector infer(const WindowTensor& window);

  LatencyStats latency() const;

 protected:
  explicit Backend(BackendOutput kind) : output_kind_(kind) {}
  virtual ScoreVector run(const WindowTensor& window) = 0;

 private:
  BackendOutput output_kind_;
  mutable std::mutex stats_mutex_;
  std::deque<double> recent_ms_;
  LatencyStats stats_;
};

using BackendFactory = std::function<std::unique_ptr<Backend>()>;

}  // namespace glossflow
