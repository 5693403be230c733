#include "belief/synth.hpp"

#include <cmath>
#include <string>

namespace belief {

namespace {

constexpr std::size_t kMaxCorpusSize = 10'000'000;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_frame_size(const FramePtr& frame, int n, const char* corpus) {
  if (!frame || frame->size() != n) {
    throw Error(ErrorKind::InvalidArgument, std::string(corpus) + " needs a frame of " + std::to_string(n) + " outcomes");
  }
}

void require_count(int value, int minimum, const char* name) {
  if (value < minimum) throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be >= " + std::to_string(minimum));
}

}  // namespace

SeedStream::SeedStream(Seed seed, std::uint64_t tag, std::uint64_t index)
    : engine_(splitmix64(splitmix64(splitmix64(seed.value) ^ tag) ^ index)) {}

double SeedStream::uniform_open() {
  return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52;
}

SimpleSupport random_ssf(FramePtr frame, SubsetIndex focal, SeedStream& stream) {
  if (focal == 0) throw Error(ErrorKind::EmptyFocal, "random simple support needs a non-empty focal set");
  const double w = stream.uniform_open();
  return SimpleSupport::from_log_weight(std::move(frame), focal, std::log(w));
}

SimpleSupport random_dominant_ssf(FramePtr frame, SubsetIndex singleton, SeedStream& stream) {
  if (cardinality(singleton) != 1) throw Error(ErrorKind::NotSingleton, "dominant support needs a singleton focal set");
  double mass = stream.uniform_open();
  while (mass <= 0.5) mass = stream.uniform_open();
  return SimpleSupport::from_log_weight(std::move(frame), singleton, std::log(1.0 - mass));
}

std::vector<SimpleSupport> exp2_corpus(FramePtr frame, Seed seed, int s1, int s2, int s3) {
  require_frame_size(frame, 3, "exp2 corpus");
  require_count(s1, 0, "s1");
  require_count(s2, 0, "s2");
  require_count(s3, 0, "s3");
  if (static_cast<std::size_t>(s1) + static_cast<std::size_t>(s2) + static_cast<std::size_t>(s3) > kMaxCorpusSize) {
    throw Error(ErrorKind::InvalidArgument, "corpus too large");
  }
  const SubsetIndex focal[] = {0b001, 0b010, 0b110};
  const int counts[] = {s1, s2, s3};
  std::vector<SimpleSupport> out;
  out.reserve(static_cast<std::size_t>(s1 + s2 + s3));
  for (int g = 0; g < 3; ++g) {
    for (int i = 0; i < counts[g]; ++i) {
      SeedStream stream(seed, static_cast<std::uint64_t>(g + 1), static_cast<std::uint64_t>(i));
      out.push_back(random_ssf(frame, focal[g], stream));
    }
  }
  return out;
}

std::vector<SimpleSupport> exp3_corpus(FramePtr frame, int s2, int t, Seed seed) {
  require_frame_size(frame, 2, "exp3 corpus");
  require_count(s2, 1, "s2");
  require_count(t, 1, "t");
  const auto s1 = static_cast<std::size_t>(t) * static_cast<std::size_t>(s2);
  if (s1 > kMaxCorpusSize) throw Error(ErrorKind::InvalidArgument, "corpus too large");
  std::vector<SimpleSupport> out;
  out.reserve(s1 + static_cast<std::size_t>(s2));
  for (std::size_t i = 0; i < s1; ++i) {
    SeedStream stream(seed, 1, i);
    out.push_back(random_dominant_ssf(frame, 0b01, stream));
  }
  for (int i = 0; i < s2; ++i) {
    SeedStream stream(seed, 2, static_cast<std::uint64_t>(i));
    out.push_back(random_dominant_ssf(frame, 0b10, stream));
  }
  return out;
}

}  // namespace belief
