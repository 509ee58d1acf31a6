#pragma once

// Reproducible per-path random streams: a root seed, a path index and a salt
// are mixed through a 64-bit avalanche finalizer to seed an independent
// engine per path. Paths are therefore bit-identical regardless of thread
// count or scheduling.

#include <cstdint>
#include <random>

namespace hyphull {

/// splitmix64 finalizer.
inline std::uint64_t avalanche64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

inline std::uint64_t stream_seed(std::uint64_t root, std::uint64_t path_index, std::uint64_t salt = 0) {
    std::uint64_t z = root;
    z += 0x9e3779b97f4a7c15ULL * (path_index + 1);
    z += 0x2545f4914f6cdd1dULL * (salt + 1);
    return avalanche64(avalanche64(z) ^ root);
}

class PathRng {
  public:
    PathRng(std::uint64_t root, std::uint64_t path_index, std::uint64_t salt = 0)
        : engine_(stream_seed(root, path_index, salt)) {}

    double gauss() { return normal_(engine_); }
    /// Uniform on [0, 1).
    double uniform01() { return unif_(engine_); }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

}  // namespace hyphull
