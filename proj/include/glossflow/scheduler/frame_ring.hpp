#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "glossflow/core/types.hpp"
#include "glossflow/preprocess/preprocess.hpp"

namespace glossflow {

/// Frames between consecutive windows: max(1, round(s * W)), halves rounded
/// away from zero. s = 0 therefore predicts on every frame.
int hop_frames(int window_len, double stride_fraction);

/// Immutable snapshot of a full window, safe to hand to another thread.
struct WindowReady {
  std::vector<FramePtr> frames;
  FrameSpan span;
};

/// Rolling buffer of the most recent W retained frames. A window is emitted
/// once the buffer is full and at least `hop` frames arrived since the last
/// one; there is no padding at stream start. Single writer.
class FrameRing {
 public:
  FrameRing(int capacity, int hop);

  /// Throws Error{OutOfOrderFrame} unless capture_index exceeds every
  /// index pushed so far.
  std::optional<WindowReady> push(FrameIndex capture_index, FramePtr frame);

  void set_hop(int hop);

  int capacity() const noexcept { return capacity_; }
  int hop() const noexcept { return hop_; }
  std::size_t size() const noexcept { return contents_.size(); }

 private:
  struct Slot {
    FrameIndex index;
    FramePtr frame;
  };

  int capacity_;
  int hop_;
  int frames_since_last_window_ = 0;
  std::optional<FrameIndex> last_index_;
  std::deque<Slot> contents_;
};

}  // namespace glossflow
