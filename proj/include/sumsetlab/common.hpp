#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sumsetlab {

inline constexpr std::string_view kEngineVersion = "0.1.0";

/// Bad input or contract violation at an API boundary (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded search ran out of its node budget (CLI exit code 3).
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Guarded internal assertion failed; indicates an engine bug (CLI exit code 4).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define SUMSETLAB_CHECK(cond, msg)                    \
  do {                                                \
    if (!(cond)) throw ::sumsetlab::InternalError(msg); \
  } while (0)

/// Group orders are capped so dense bit-vectors stay cheap.
inline constexpr std::uint64_t kOrderCap = 1ull << 20;

/// Memory cap for sumset tables, in bytes. SUMSETLAB_MEM_CAP overrides.
inline std::uint64_t table_memory_cap() {
  // read every call so the override can change within a process
  if (const char* env = std::getenv("SUMSETLAB_MEM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
  }
  return std::uint64_t{1} << 30;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n < 2) throw ConfigError("smallest_prime_factor: n must be >= 2");
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

/// Exact integer floor of sqrt(n).
inline std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace sumsetlab
