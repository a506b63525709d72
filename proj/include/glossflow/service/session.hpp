#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "glossflow/backend/backend.hpp"
#include "glossflow/core/config.hpp"
#include "glossflow/core/error.hpp"
#include "glossflow/decoder/decoder.hpp"
#include "glossflow/scheduler/frame_ring.hpp"

namespace glossflow {

/// A window waiting for the inference worker.
struct PendingWindow {
  WindowReady window;
  Clock::time_point ready_at{};  // receipt of the frame that completed it
};

/// Capacity-1 hand-off between ingestion and the worker. Pushing onto a full
/// queue discards the waiting (older) window.
class PendingWindowQueue {
 public:
  /// Returns true when an older window was discarded.
  bool push(PendingWindow window);
  /// Blocks until a window is available or the queue is closed.
  std::optional<PendingWindow> pop();
  void close();
  std::size_t depth() const;
  std::size_t max_depth() const;

 private:
  mutable std::mutex mutex_;
  std::condition_variable ready_;
  std::optional<PendingWindow> slot_;
  std::size_t max_depth_ = 0;
  bool closed_ = false;
};

struct SessionCounters {
  std::uint64_t frames_received = 0;
  std::uint64_t frames_dropped = 0;   // undecodable or too small
  std::uint64_t frames_skipped = 0;   // removed by frame_skip
  std::uint64_t windows_inferred = 0;
  std::uint64_t windows_dropped = 0;  // displaced from the pending queue
  std::uint64_t events_emitted = 0;
  std::uint64_t queue_depth_max = 0;
  double latency_ms = 0.0;            // backend moving average
  double engine_overhead_ms = 0.0;    // moving average, backend time excluded
  double engine_overhead_max_ms = 0.0;
  double engine_overhead_total_ms = 0.0;
  double ingest_max_ms = 0.0;         // slowest handle_frame_message so far
};

struct SessionOptions {
  std::chrono::milliseconds stats_interval{1000};
};

/// Sink for server-to-client text messages. Called from the ingestion
/// path, the worker and the stats ticker; must be thread-safe.
using MessageSink = std::function<void(std::string)>;

/// One live recognition stream, independent of the transport.
///
/// Ingestion (decode, preprocess, ring push) runs on the caller's thread
/// and never waits for inference. Complete windows go through a capacity-1
/// drop-oldest queue to a single worker that infers, decodes and emits
/// gloss messages in order. A ticker emits a stats message every interval.
class Session {
 public:
  Session(std::string id, EngineConfig cfg, std::shared_ptr<const Vocabulary> vocab,
          std::unique_ptr<Backend> backend, MessageSink sink, SessionOptions options = {});
  ~Session();
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  /// Sends the hello message and starts the worker and ticker threads.
  void start();
  /// Stops both threads after the in-flight window (if any) completes.
  /// Idempotent.
  void close();
  bool closed() const;

  /// One encoded JPEG frame. Decode failures are counted, not thrown.
  /// Throws Error{SessionClosed} after close().
  void handle_frame_message(std::span<const std::uint8_t> jpeg);
  /// Same path for an already decoded frame; the capture index is
  /// assigned from the receive counter.
  void handle_frame(RawFrame frame);
  /// Dispatches a client text message ({"type":"config", ...}); replies
  /// with config_ack or error through the sink.
  void handle_text_message(std::string_view text);
  /// Applies a live update of threshold / avg_size / stride_fraction.
  /// Throws Error{ConfigRange, field} and leaves the session unchanged.
  EngineConfig apply_config_update(const nlohmann::json& patch);

  const std::string& id() const noexcept { return id_; }
  EngineConfig config() const;
  SessionCounters counters() const;
  /// Events emitted so far, in order.
  std::vector<GlossEvent> events() const;

  nlohmann::json hello_message() const;
  /// Stats for the interval since the previous call.
  nlohmann::json stats_message();

 private:
  void ingest(RawFrame frame, Clock::time_point received);
  void worker_loop();
  void ticker_loop();
  void send(const nlohmann::json& message);
  void send_error(const Error& e);

  const std::string id_;
  const std::shared_ptr<const Vocabulary> vocab_;
  const std::unique_ptr<Backend> backend_;
  const MessageSink sink_;
  const SessionOptions options_;

  // Ingestion state; also guards config_.
  mutable std::mutex ingest_mutex_;
  EngineConfig config_;
  FrameRing ring_;
  FrameIndex next_index_ = 0;

  // Decoder state, shared by the worker and config updates.
  mutable std::mutex decoder_mutex_;
  StreamDecoder decoder_;
  std::vector<GlossEvent> events_;

  PendingWindowQueue queue_;
  std::int64_t next_ordinal_ = 0;  // worker only

  mutable std::mutex counters_mutex_;
  SessionCounters counters_;
  std::vector<double> recent_overhead_ms_;
  struct Interval {
    Clock::time_point start = Clock::now();
    std::uint64_t frames = 0;
    std::uint64_t windows = 0;
    double ingest_max_ms = 0.0;
  } interval_;

  mutable std::mutex life_mutex_;
  std::condition_variable ticker_wake_;
  bool started_ = false;
  bool closed_ = false;
  std::thread worker_;
  std::thread ticker_;
};

nlohmann::json gloss_message(const GlossEvent& event);
nlohmann::json error_message(const Error& e);

}  // namespace glossflow
