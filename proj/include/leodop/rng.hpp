#pragma once

#include <cstdint>
#include <random>

namespace leodop {

// One independently seeded random stream. Streams are derived from a master
// seed plus a stream index so that parallel workers draw from disjoint,
// reproducible sequences regardless of scheduling.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : engine_(seed_for(master_seed, stream_index)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

 private:
  static std::uint64_t seed_for(std::uint64_t master, std::uint64_t stream) {
    // splitmix64 over (master, stream) so nearby indices decorrelate.
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace leodop
