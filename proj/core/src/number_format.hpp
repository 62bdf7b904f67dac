#pragma once

#include <charconv>
#include <string>

namespace attisim {

/// Shortest round-trip decimal form; keeps serialized files byte-stable.
inline std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace attisim
