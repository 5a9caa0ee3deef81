#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <type_traits>

namespace dptv {

/// Streaming 64-bit FNV-1a hash. Used for config hashes, dataset hashes and
/// content-addressed stage directories; stable across platforms and runs.
class Hasher {
 public:
  Hasher& update(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
      state_ ^= bytes[i];
      state_ *= 0x00000100000001B3ULL;
    }
    return *this;
  }

  Hasher& update(std::string_view text) { return update(text.data(), text.size()); }

  template <typename T>
  Hasher& update_value(const T& value) {
    static_assert(std::is_trivially_copyable_v<T>);
    return update(&value, sizeof(T));
  }

  std::uint64_t digest() const { return state_; }

 private:
  std::uint64_t state_ = 0xCBF29CE484222325ULL;
};

inline std::uint64_t fnv1a(std::string_view text) {
  return Hasher{}.update(text).digest();
}

std::string hex_digest(std::uint64_t value, int digits = 16);

}  // namespace dptv
