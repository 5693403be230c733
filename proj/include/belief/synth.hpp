#pragma once

// Seeded generators for the synthetic simple-support corpora. Every corpus
// position owns a stream derived from (seed, tag, index), so corpora are
// bit-identical across runs and independent of generation order.

#include <cstdint>
#include <random>
#include <vector>

#include "belief/mass.hpp"

namespace belief {

struct Seed {
  std::uint64_t value = 0;
};

inline constexpr Seed kDefaultSeed{20170419};

class SeedStream {
 public:
  SeedStream(Seed seed, std::uint64_t tag, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1), 52 bits of resolution.
  double uniform_open();

 private:
  std::mt19937_64 engine_;
};

/// A^w with w ~ U(0, 1). Throws EmptyFocal for the empty set.
SimpleSupport random_ssf(FramePtr frame, SubsetIndex focal, SeedStream& stream);

/// {x}^w whose singleton mass 1 - w is drawn by rejection from U(0, 1)
/// until it exceeds 0.5. Throws NotSingleton.
SimpleSupport random_dominant_ssf(FramePtr frame, SubsetIndex singleton, SeedStream& stream);

/// s1 supports on {x1}, s2 on {x2}, s3 on {x2,x3}, weights U(0, 1).
/// The frame must have three outcomes.
std::vector<SimpleSupport> exp2_corpus(FramePtr frame, Seed seed, int s1 = 60, int s2 = 50, int s3 = 50);

/// t * s2 dominant supports on {x1} followed by s2 on {x2}. The i-th
/// support of each group depends only on (seed, group, i), so corpora for
/// different t share their {x2} part and extend the same {x1} sequence.
/// The frame must have two outcomes.
std::vector<SimpleSupport> exp3_corpus(FramePtr frame, int s2, int t, Seed seed);

}  // namespace belief
