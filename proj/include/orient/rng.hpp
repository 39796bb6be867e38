#pragma once

#include <cstdint>

namespace orient {

// splitmix64 step (Steele/Lea/Flood). Used as the project-wide generator:
// the output stream is identical on every platform and compiler, which keeps
// shuffles, samples and random walks reproducible from a seed alone.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Pinned stream semantics: next_u64() is the raw splitmix64 sequence from the
// seed; below(k) reduces one draw by modulo. Tests freeze reference vectors.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64_next(state_); }

  // Uniform-ish value in [0, bound); bound > 0. Modulo reduction; the bias is
  // irrelevant at the bounds used here and keeps the mapping trivial to pin.
  std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

 private:
  std::uint64_t state_;
};

// Deterministic sub-seed for stream `index` of a base seed. Distinct indices
// give unrelated generators; the same pair always gives the same seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t s = base ^ (0xd1342543de82ef95ULL * (index + 1));
  return splitmix64_next(s);
}

}  // namespace orient
