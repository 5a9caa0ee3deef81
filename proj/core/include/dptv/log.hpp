#pragma once

#include <sstream>
#include <string>

namespace dptv::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Active level; initialized from the DPTV_LAB_LOG environment variable
// (error|warn|info|debug) on first use, defaulting to warn.
Level level();
void set_level(Level lvl);

void write(Level lvl, const std::string& message);

template <typename... Args>
void emit(Level lvl, Args&&... args) {
  if (lvl > level()) return;
  std::ostringstream os;
  (os << ... << args);
  write(lvl, os.str());
}

template <typename... Args>
void error(Args&&... args) {
  emit(Level::Error, std::forward<Args>(args)...);
}
template <typename... Args>
void warn(Args&&... args) {
  emit(Level::Warn, std::forward<Args>(args)...);
}
template <typename... Args>
void info(Args&&... args) {
  emit(Level::Info, std::forward<Args>(args)...);
}
template <typename... Args>
void debug(Args&&... args) {
  emit(Level::Debug, std::forward<Args>(args)...);
}

}  // namespace dptv::log
