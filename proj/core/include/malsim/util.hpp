#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace malsim {

// Bad user input: config files, CLI flags, trace files. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant: signals a bug in the simulator, not in the
// input. Maps to exit code 3.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

// splitmix64: tiny, well-mixed, platform-independent. Used wherever the
// artifact needs reproducible pseudo-randomness keyed by (seed, index).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform double in [0,1) from a seed and an item index, independent of
// generation order.
inline double det_uniform01(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t bits = splitmix64(seed ^ splitmix64(index + 1));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t fnv1a64(const std::string& s) {
  return fnv1a64(s.data(), s.size());
}

// Fixed-format float printing; keeps emitted logs and CSVs byte-stable.
inline std::string fmt_g(double v, int precision = 9) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

inline std::string fmt_f(double v, int decimals = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

}  // namespace malsim
