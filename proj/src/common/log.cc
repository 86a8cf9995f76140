#include "reqlint/common/log.h"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace reqlint::log {
namespace {

Level initial_level() {
  const char* env = std::getenv("REQLINT_LOG");
  if (!env) return Level::kWarning;
  const std::string v = env;
  if (v == "debug") return Level::kDebug;
  if (v == "info") return Level::kInfo;
  if (v == "error") return Level::kError;
  if (v == "off") return Level::kOff;
  return Level::kWarning;
}

std::atomic<Level>& current() {
  static std::atomic<Level> lvl{initial_level()};
  return lvl;
}

std::mutex& sink_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

void set_level(Level level) { current().store(level); }
Level level() { return current().load(); }

void write(Level lvl, std::string_view message) {
  if (lvl < current().load()) return;
  static constexpr const char* kNames[] = {"debug", "info", "warning", "error"};
  std::lock_guard<std::mutex> lock(sink_mutex());
  std::cerr << "[reqlint " << kNames[static_cast<int>(lvl)] << "] " << message << '\n';
}

}  // namespace reqlint::log
