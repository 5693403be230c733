#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "belief/decomposition.hpp"
#include "belief/rules.hpp"
#include "belief/transforms.hpp"
#include "support.hpp"

using namespace belief;
using test_support::dense;
using test_support::numbered_frame;

namespace {

const SubsetIndex T1 = 0b001, T2 = 0b010, T12 = 0b011;

void check_error(ErrorKind kind, const std::function<void()>& fn) {
  bool thrown = false;
  try {
    fn();
  } catch (const Error& e) {
    thrown = true;
    CHECK(e.kind() == kind);
  }
  CHECK(thrown);
}

}  // namespace

TEST_CASE("frame validates labels and size") {
  check_error(ErrorKind::InvalidFrame, [] { Frame({}); });
  check_error(ErrorKind::InvalidFrame, [] { Frame({"a", "a"}); });
  check_error(ErrorKind::InvalidFrame, [] { Frame({"a", ""}); });
  check_error(ErrorKind::InvalidFrame, [] { Frame(Frame::numbered(21).outcomes()); });
  CHECK(Frame(Frame::numbered(21).outcomes(), 21).size() == 21);

  const Frame f({"a", "b", "c"});
  CHECK(f.full() == 0b111);
  CHECK(f.subset({"a", "c"}) == 0b101);
  CHECK(f.name_of(0b101) == "{a,c}");
  CHECK(f.name_of(0) == "{}");
  check_error(ErrorKind::InvalidSubset, [&] { (void)f.subset({"z"}); });
  CHECK(cardinality(0b101) == 2);
  CHECK(is_subset_of(0b001, 0b101));
  CHECK_FALSE(is_subset_of(0b010, 0b101));
}

TEST_CASE("make_mass") {
  const auto frame = numbered_frame(3);
  const MassFunction m1 = make_mass(frame, {{T2, 0.9}, {0b111, 0.1}});
  CHECK(m1[T2] == 0.9);
  CHECK(m1.ignorance() == 0.1);
  CHECK(m1.focal_sets() == std::vector<SubsetIndex>{T2, 0b111});
  CHECK_FALSE(m1.is_dogmatic());

  const MassFunction vac = make_mass(frame, {{0b111, 1.0}});
  CHECK(vac.is_vacuous());
  CHECK(MassFunction::categorical(frame, T2).is_categorical());

  check_error(ErrorKind::SumNotOne, [&] { make_mass(frame, {{T1, 0.5}, {T2, 0.6}}); });
  check_error(ErrorKind::NegativeMass, [&] { make_mass(frame, {{T1, -0.1}, {0b111, 1.1}}); });
  check_error(ErrorKind::DuplicateSubset, [&] { make_mass(frame, {{T1, 0.5}, {T1, 0.5}}); });
  check_error(ErrorKind::InvalidSubset, [&] { make_mass(frame, {{0b1000, 1.0}}); });
}

TEST_CASE("simple support round trip") {
  const auto frame = numbered_frame(2);
  const SimpleSupport s(frame, T1, 0.3);
  const MassFunction m = s.to_mass();
  CHECK(m[T1] == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(m.ignorance() == doctest::Approx(0.3).epsilon(1e-15));
  const auto back = m.as_simple_support();
  REQUIRE(back);
  CHECK(back->focal() == T1);
  CHECK(back->weight() == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(SimpleSupport(frame, 0b11, 0.4).is_vacuous());
  CHECK(SimpleSupport(frame, T1, 1.0).is_vacuous());
  CHECK_FALSE(make_mass(frame, {{T1, 0.2}, {T2, 0.3}, {0b11, 0.5}}).as_simple_support());
  check_error(ErrorKind::InvalidArgument, [&] { SimpleSupport(frame, T1, 1.5); });
}

TEST_CASE("commonality examples") {
  const auto frame = numbered_frame(2);
  const auto q = mass_to_commonality(make_mass(frame, {{T1, 0.9}, {0b11, 0.1}}));
  CHECK(q[0] == doctest::Approx(1.0));
  CHECK(q[T1] == doctest::Approx(1.0));
  CHECK(q[T2] == doctest::Approx(0.1));
  CHECK(q[0b11] == doctest::Approx(0.1));

  const auto vq = mass_to_commonality(MassFunction::vacuous(numbered_frame(3)));
  CHECK((vq.array() == 1.0).all());
  CHECK(commonality_to_mass(numbered_frame(3), Eigen::VectorXd::Ones(8)).is_vacuous());

  // m4 of the six-source example: 0.3 on {theta1} + 0.7 on the frame.
  const auto q4 = mass_to_commonality(make_mass(numbered_frame(3), {{T1, 0.3}, {0b111, 0.7}}));
  CHECK(q4[T1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("implicability inversion example") {
  const auto frame = numbered_frame(2);
  Eigen::VectorXd b(4);
  b << 0.0, 0.9, 0.0, 1.0;
  const MassFunction m = implicability_to_mass(frame, b);
  CHECK(m[T1] == doctest::Approx(0.9));
  CHECK(m.ignorance() == doctest::Approx(0.1));
  CHECK(m[T2] == 0.0);
  Eigen::VectorXd bad(4);
  bad << 0.0, 0.9, 0.5, 1.0;
  check_error(ErrorKind::NotAValidTransform, [&] { implicability_to_mass(frame, bad); });
}

TEST_CASE("fast transforms agree with direct summation") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 4; ++n) {
    const auto frame = numbered_frame(n);
    for (int trial = 0; trial < 50; ++trial) {
      const auto m = test_support::from_dense(frame, oracle::random_mass(rng, n, 4, trial % 2 == 0, true));
      CHECK(oracle::max_abs_diff(dense(mass_to_commonality(m)), oracle::commonality(dense(m))) < 1e-14);
      CHECK(oracle::max_abs_diff(dense(mass_to_implicability(m)), oracle::implicability(dense(m))) < 1e-14);
    }
  }
}

TEST_CASE("transform round trips are identities") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 6; ++n) {
    const auto frame = numbered_frame(n);
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = test_support::from_dense(frame, oracle::random_mass(rng, n, 6, trial % 3 != 0, true));
      CHECK(oracle::max_abs_diff(dense(commonality_to_mass(frame, mass_to_commonality(m))), dense(m)) < 1e-12);
      CHECK(oracle::max_abs_diff(dense(implicability_to_mass(frame, mass_to_implicability(m))), dense(m)) < 1e-12);
    }
  }
}

TEST_CASE("transforms work on other scalar types") {
  Eigen::VectorXf v(4);
  v << 0.1f, 0.2f, 0.3f, 0.4f;
  const Eigen::VectorXf q = superset_sum(v);
  CHECK(q[0] == doctest::Approx(1.0f));
  const Eigen::VectorXf back = superset_mobius(q);
  CHECK(back[2] == doctest::Approx(0.3f));
}

TEST_CASE("canonical decomposition examples") {
  SUBCASE("simple support is its own decomposition") {
    const auto frame = numbered_frame(2);
    const WeightMap w = canonical_decomposition(SimpleSupport(frame, T1, 0.3).to_mass());
    CHECK(w.weight(T1) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(w.weight(0) == 1.0);
    CHECK(w.weight(T2) == 1.0);
    CHECK(w.is_u_separable());
  }
  SUBCASE("consonant mass") {
    const auto frame = numbered_frame(3);
    const auto m = make_mass(frame, {{T1, 0.4}, {T12, 0.3}, {0b111, 0.3}});
    const WeightMap w = canonical_decomposition(m);
    CHECK(w.weight(T1) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(w.weight(T12) == doctest::Approx(0.5).epsilon(1e-12));
    for (SubsetIndex a : {0u, 2u, 4u, 5u, 6u}) CHECK(w.weight(a) == 1.0);
    CHECK(oracle::max_abs_diff(dense(weights_to_mass(w)), dense(m)) < 1e-12);
  }
  SUBCASE("inverse simple support on the empty set") {
    const auto frame = numbered_frame(2);
    const auto m = make_mass(frame, {{T1, 0.5}, {T2, 0.3}, {0b11, 0.2}});
    const WeightMap w = canonical_decomposition(m);
    CHECK(w.weight(T1) == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
    CHECK(w.weight(T2) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(w.weight(0) == doctest::Approx(1.75).epsilon(1e-12));
    CHECK_FALSE(w.is_u_separable());
    CHECK(oracle::max_abs_diff(dense(weights_to_mass(w)), dense(m)) < 1e-12);
  }
  check_error(ErrorKind::DogmaticMass,
              [] { canonical_decomposition(MassFunction::categorical(numbered_frame(2), T1)); });
}

TEST_CASE("weights_to_mass") {
  const auto frame = numbered_frame(3);
  CHECK(weights_to_mass(WeightMap::neutral(frame)).is_vacuous());
  Eigen::VectorXd lw = Eigen::VectorXd::Zero(8);
  lw[T1] = std::log(0.6);
  lw[T12] = std::log(0.5);
  const MassFunction m = weights_to_mass(WeightMap(frame, lw));
  CHECK(m[T1] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(m[T12] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(m.ignorance() == doctest::Approx(0.3).epsilon(1e-12));

  // A lone inverse component is not a mass function.
  Eigen::VectorXd issf = Eigen::VectorXd::Zero(8);
  issf[T1] = std::log(2.0);
  check_error(ErrorKind::NotAMass, [&] { weights_to_mass(WeightMap(frame, issf)); });
}

TEST_CASE("decomposition round trip on random non-dogmatic masses") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 5; ++n) {
    const auto frame = numbered_frame(n);
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = test_support::from_dense(frame, oracle::random_mass(rng, n, 5, true, trial % 4 == 0));
      const WeightMap w = canonical_decomposition(m);
      CHECK(oracle::max_abs_diff(dense(weights_to_mass(w)), dense(m)) < 1e-9);
      const auto ref = oracle::canonical_weights(dense(m));
      for (SubsetIndex a = 0; a < frame->full(); ++a) CHECK(std::abs(w.weight(a) - ref[a]) < 1e-9 * std::max(1.0, ref[a]));
    }
  }
}

TEST_CASE("decomposing a product of simple supports recovers their weights") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> weight(0.05, 0.95);
  for (int n = 2; n <= 4; ++n) {
    const auto frame = numbered_frame(n);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<MassFunction> parts;
      std::map<SubsetIndex, double> expected;
      std::uniform_int_distribution<SubsetIndex> subset(0, frame->full() - 1);
      for (int k = 0; k < 3; ++k) {
        const SubsetIndex a = subset(rng);
        if (expected.count(a)) continue;
        expected[a] = weight(rng);
        parts.push_back(SimpleSupport(frame, a, expected[a]).to_mass());
      }
      const WeightMap w = canonical_decomposition(combine_conjunctive(parts));
      for (SubsetIndex a = 0; a < frame->full(); ++a) {
        const double want = expected.count(a) ? expected[a] : 1.0;
        CHECK(std::abs(w.weight(a) - want) < 1e-9);
      }
    }
  }
}

TEST_CASE("pignistic transform") {
  const auto frame = numbered_frame(3);
  const Eigen::VectorXd uniform = pignistic(MassFunction::vacuous(frame));
  for (int i = 0; i < 3; ++i) CHECK(uniform[i] == doctest::Approx(1.0 / 3.0));

  const Eigen::VectorXd cat = pignistic(MassFunction::categorical(frame, T2));
  CHECK(cat[0] == 0.0);
  CHECK(cat[1] == 1.0);
  CHECK(cat[2] == 0.0);

  // Six-source LNS output as printed to five decimals.
  const auto m = make_mass(frame, {{0, 0.07964}, {T1, 0.45129}, {T2, 0.07036}, {0b111, 0.39871}});
  const Eigen::VectorXd bet = pignistic(m);
  CHECK(std::abs(bet[0] - 0.63474) < 1e-5);
  CHECK(std::abs(bet[1] - 0.22085) < 1e-5);
  CHECK(std::abs(bet[2] - 0.14440) < 1e-5);

  check_error(ErrorKind::TotalConflict, [&] { pignistic(MassFunction::categorical(frame, 0)); });

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    const auto f = numbered_frame(n);
    const auto dm = oracle::random_mass(rng, n, 4, trial % 2 == 0, true);
    if (dm[0] >= 1.0 - 1e-9) continue;
    const Eigen::VectorXd p = pignistic(test_support::from_dense(f, dm));
    CHECK((p.array() >= 0.0).all());
    CHECK(std::abs(p.sum() - 1.0) < 1e-9);
    CHECK(oracle::max_abs_diff(dense(p), oracle::pignistic(dm, n)) < 1e-12);
  }
}
