#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "glossflow/backend/backend.hpp"
#include "glossflow/core/config.hpp"
#include "glossflow/core/vocabulary.hpp"
#include "glossflow/service/session.hpp"

namespace glossflow {

struct ServerOptions {
  std::string address = "0.0.0.0";
  std::uint16_t port = 8765;  // 0 picks a free port
  std::size_t max_sessions = 4;
  std::optional<std::filesystem::path> static_dir;  // served under /
  std::size_t max_outbound_messages = 1024;         // per connection
  SessionOptions session;
};

/// WebSocket front end. Each connection to /session gets its own Session
/// and backend instance; other paths serve static files when a static
/// directory is configured.
class Server {
 public:
  Server(ServerOptions options, EngineConfig cfg, std::shared_ptr<const Vocabulary> vocab,
         BackendFactory backend_factory);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds and starts the network threads; returns once listening.
  void start();
  /// Closes every connection and joins all threads. Idempotent.
  void stop();
  /// Blocks until stop() is called from another thread or a SIGINT/SIGTERM.
  void wait();

  std::uint16_t port() const;
  std::size_t active_sessions() const;

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

}  // namespace glossflow
