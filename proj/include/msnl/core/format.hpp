#ifndef MSNL_CORE_FORMAT_HPP_
#define MSNL_CORE_FORMAT_HPP_

#include <charconv>
#include <string>
#include <string_view>

namespace msnl {

/// Shortest decimal text that parses back to exactly `v`.
inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

inline bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace msnl

#endif  // MSNL_CORE_FORMAT_HPP_
