#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mixlab {

/// Single exception type for all toolkit errors. Messages are one line and
/// start with a category prefix ("format error:", "config error:", ...).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void append_all(std::ostringstream&) {}
template <typename T, typename... Rest>
void append_all(std::ostringstream& os, T&& v, Rest&&... rest) {
  os << v;
  append_all(os, static_cast<Rest&&>(rest)...);
}
}  // namespace detail

template <typename... Parts>
std::string cat(Parts&&... parts) {
  std::ostringstream os;
  detail::append_all(os, static_cast<Parts&&>(parts)...);
  return os.str();
}

template <typename... Parts>
[[noreturn]] void fail(Parts&&... parts) {
  throw Error(cat(static_cast<Parts&&>(parts)...));
}

/// Incremental FNV-1a, used for config/model/dataset fingerprints.
class Fnv1a {
 public:
  void update(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h_ ^= p[i];
      h_ *= 1099511628211ull;
    }
  }
  template <typename T>
  void update_value(const T& v) {
    static_assert(std::is_trivially_copyable_v<T>);
    update(&v, sizeof(T));
  }
  void update_string(const std::string& s) { update(s.data(), s.size()); }
  std::uint64_t digest() const { return h_; }
  std::string hex() const;

 private:
  std::uint64_t h_ = 1469598103934665603ull;
};

std::string hex64(std::uint64_t v);

inline std::uint64_t fnv1a(const void* data, std::size_t n) {
  Fnv1a h;
  h.update(data, n);
  return h.digest();
}

}  // namespace mixlab
