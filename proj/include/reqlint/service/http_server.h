#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "reqlint/service/workbench.h"

namespace httplib {
class Server;
}

namespace reqlint::service {

// JSON API over a Workbench, plus static files under /ui when a directory
// is given.
class HttpServer {
 public:
  explicit HttpServer(Workbench& workbench, std::filesystem::path ui_dir = {});
  ~HttpServer();

  // Blocks until stop().
  bool listen(const std::string& host, int port);
  // Binds to a free port and returns it, -1 on failure. Serve with listen_after_bind().
  int bind_to_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  void routes();

  Workbench& workbench_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace reqlint::service
