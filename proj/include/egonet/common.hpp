#pragma once

#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

namespace egonet {

using NodeId = std::uint32_t;   // dense graph-wide index
using LocalId = std::uint32_t;  // dense index inside one ego view

// Bad parameters or configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad or inconsistent data encountered while processing (CLI exit code 3).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : DataError {
  using DataError::DataError;
};

struct ConvergenceError : DataError {
  using DataError::DataError;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based seed derivation: mixing in one component at a time keeps
// every (master, component...) combination independent yet reproducible.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t component) {
  return splitmix64(seed ^ splitmix64(component));
}

// mt19937_64 is bit-exact across standard libraries; the std distributions
// are not, so draws go through the helpers below instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform double in [0, 1), 53 random bits
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, n), n >= 1 (Lemire's multiply-shift rejection)
  std::uint64_t bounded(std::uint64_t n) {
    while (true) {
      std::uint64_t x = engine_();
      __uint128_t m = static_cast<__uint128_t>(x) * n;
      auto lo = static_cast<std::uint64_t>(m);
      if (lo >= n || lo >= static_cast<std::uint64_t>(-n) % n) {
        return static_cast<std::uint64_t>(m >> 64);
      }
    }
  }

 private:
  std::mt19937_64 engine_;
};

// %.12g: deterministic, compact, and sufficient for plot-ready output.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace egonet
