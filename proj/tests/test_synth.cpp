#include <doctest.h>

#include <cmath>

#include "belief/lns.hpp"
#include "belief/synth.hpp"
#include "support.hpp"

using namespace belief;

namespace {

bool identical(const std::vector<SimpleSupport>& a, const std::vector<SimpleSupport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].focal() != b[i].focal() || a[i].log_weight() != b[i].log_weight()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("seed streams are deterministic and distinct") {
  SeedStream a(Seed{1}, 2, 3), b(Seed{1}, 2, 3), c(Seed{1}, 2, 4), d(Seed{2}, 2, 3);
  const auto x = a.next_u64();
  CHECK(x == b.next_u64());
  CHECK(x != c.next_u64());
  CHECK(x != d.next_u64());
}

TEST_CASE("random_ssf") {
  const auto frame = test_support::numbered_frame(3);
  double sum = 0.0;
  for (int i = 0; i < 10000; ++i) {
    SeedStream stream(Seed{5}, 0, static_cast<std::uint64_t>(i));
    const SimpleSupport s = random_ssf(frame, 0b011, stream);
    const double w = s.weight();
    CHECK((w > 0.0 && w < 1.0));
    CHECK(s.to_mass()[0b011] == doctest::Approx(1.0 - w));
    sum += w;
  }
  CHECK(std::abs(sum / 10000 - 0.5) < 0.02);

  SeedStream s1(Seed{9}, 0, 0), s2(Seed{9}, 0, 0);
  CHECK(random_ssf(frame, 0b1, s1).log_weight() == random_ssf(frame, 0b1, s2).log_weight());
  SeedStream s3(Seed{9}, 0, 0);
  CHECK_THROWS_AS(random_ssf(frame, 0, s3), Error);
}

TEST_CASE("random_dominant_ssf") {
  const auto frame = test_support::numbered_frame(2);
  double sum = 0.0;
  for (int i = 0; i < 10000; ++i) {
    SeedStream stream(Seed{6}, 0, static_cast<std::uint64_t>(i));
    const double mass = 1.0 - random_dominant_ssf(frame, 0b10, stream).weight();
    CHECK(mass > 0.5);
    CHECK(mass < 1.0);
    sum += mass;
  }
  CHECK(std::abs(sum / 10000 - 0.75) < 0.01);
  SeedStream stream(Seed{6}, 0, 0);
  try {
    random_dominant_ssf(frame, 0b11, stream);
    FAIL("expected NotSingleton");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSingleton);
  }
}

TEST_CASE("exp2 corpus") {
  const auto frame = test_support::numbered_frame(3);
  const auto corpus = exp2_corpus(frame, Seed{8});
  REQUIRE(corpus.size() == 160);
  int counts[8] = {};
  for (const auto& s : corpus) {
    counts[s.focal()] += 1;
    CHECK(std::abs(s.to_mass().masses().sum() - 1.0) < 1e-12);
  }
  CHECK(counts[0b001] == 60);
  CHECK(counts[0b010] == 50);
  CHECK(counts[0b110] == 50);
  CHECK(group_ssfs(corpus).size() == 3);
  CHECK(identical(corpus, exp2_corpus(frame, Seed{8})));
  CHECK_FALSE(identical(corpus, exp2_corpus(frame, Seed{9})));
  CHECK_THROWS_AS(exp2_corpus(test_support::numbered_frame(2), Seed{8}), Error);
}

TEST_CASE("exp3 corpus") {
  const auto frame = test_support::numbered_frame(2);
  const auto corpus = exp3_corpus(frame, 50, 4, Seed{10});
  REQUIRE(corpus.size() == 250);
  CHECK(std::count_if(corpus.begin(), corpus.end(), [](const auto& s) { return s.focal() == 0b01; }) == 200);
  for (const auto& s : corpus) CHECK(1.0 - s.weight() > 0.5);

  const auto tiny = exp3_corpus(frame, 1, 1, Seed{10});
  REQUIRE(tiny.size() == 2);
  CHECK(tiny[0].focal() == 0b01);
  CHECK(tiny[1].focal() == 0b10);

  CHECK(identical(corpus, exp3_corpus(frame, 50, 4, Seed{10})));
  // Paired across t: the minority group and the leading majority supports are shared.
  const auto t1 = exp3_corpus(frame, 50, 1, Seed{10});
  for (int i = 0; i < 50; ++i) {
    CHECK(t1[static_cast<std::size_t>(i)].log_weight() == corpus[static_cast<std::size_t>(i)].log_weight());
    CHECK(t1[static_cast<std::size_t>(50 + i)].log_weight() == corpus[static_cast<std::size_t>(200 + i)].log_weight());
  }
}
