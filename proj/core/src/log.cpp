#include "dptv/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace dptv::log {

namespace {

Level g_level = Level::Warn;
std::once_flag g_init;
std::mutex g_write_mutex;

Level parse_level(const char* text) {
  std::string s(text ? text : "");
  if (s == "error") return Level::Error;
  if (s == "warn" || s == "warning") return Level::Warn;
  if (s == "info") return Level::Info;
  if (s == "debug") return Level::Debug;
  return Level::Warn;
}

const char* tag(Level lvl) {
  switch (lvl) {
    case Level::Error: return "error";
    case Level::Warn: return "warn";
    case Level::Info: return "info";
    case Level::Debug: return "debug";
  }
  return "?";
}

}  // namespace

Level level() {
  std::call_once(g_init, [] {
    if (const char* env = std::getenv("DPTV_LAB_LOG")) {
      g_level = parse_level(env);
    }
  });
  return g_level;
}

void set_level(Level lvl) {
  level();  // run env init first so it cannot override later
  g_level = lvl;
}

void write(Level lvl, const std::string& message) {
  std::lock_guard lock(g_write_mutex);
  std::cerr << "[dptv " << tag(lvl) << "] " << message << "\n";
}

}  // namespace dptv::log
