#pragma once

#include <charconv>
#include <string>

namespace cfor::csv {

/// Shortest round-trip representation; locale independent so artifacts are
/// byte-identical across runs and machines.
inline std::string num(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return {buf, res.ptr};
}

}  // namespace cfor::csv
