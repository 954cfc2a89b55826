#pragma once

#include <chrono>
#include <memory>
#include <string>

namespace regsel {

struct ServiceOptions {
  std::string static_dir;                     // empty: no static files
  std::chrono::seconds idle_ttl{24 * 3600};   // session expiry
  std::string snapshot_path;                  // empty: no snapshot
  std::size_t budget = 16;
};

/// HTTP API under /api/v1 plus static assets. Sessions live in memory; when
/// `snapshot_path` is set they are loaded at start and written on stop().
class Service {
public:
  explicit Service(ServiceOptions opt);
  ~Service();
  Service(const Service &) = delete;
  Service &operator=(const Service &) = delete;

  /// Binds the port (0: any free port) and returns it, or -1 on failure.
  int bind(const std::string &host, int port);
  /// Serves until stop(); call after bind().
  void run();
  void stop();
  std::size_t session_count() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

} // namespace regsel
