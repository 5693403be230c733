#include "belief/decomposition.hpp"

#include <cmath>
#include <limits>

#include "belief/transforms.hpp"

namespace belief {

namespace {

constexpr double kCommonalityFloor = 1e-300;
constexpr double kLogWeightSnap = 1e-12;

}  // namespace

WeightMap::WeightMap(FramePtr frame, Eigen::VectorXd log_weights)
    : frame_(std::move(frame)), log_weights_(std::move(log_weights)) {
  if (!frame_) throw Error(ErrorKind::InvalidFrame, "null frame");
  if (static_cast<std::size_t>(log_weights_.size()) != frame_->power_set_size()) {
    throw Error(ErrorKind::InvalidArgument, "weight vector length does not match frame");
  }
  for (Eigen::Index i = 0; i < log_weights_.size(); ++i) {
    if (!std::isfinite(log_weights_[i])) {
      throw Error(ErrorKind::InvalidArgument, "weights must lie in (0, inf)");
    }
  }
  log_weights_[log_weights_.size() - 1] = 0.0;
}

WeightMap WeightMap::neutral(FramePtr frame) {
  const auto size = static_cast<Eigen::Index>(frame->power_set_size());
  return WeightMap(std::move(frame), Eigen::VectorXd::Zero(size));
}

double WeightMap::weight(SubsetIndex a) const { return std::exp(log_weight(a)); }

Eigen::VectorXd WeightMap::weights() const { return log_weights_.array().exp().matrix(); }

bool WeightMap::is_u_separable(double tolerance) const {
  return (log_weights_.array() <= std::log1p(tolerance)).all();
}

WeightMap canonical_decomposition(const MassFunction& m) {
  if (m.is_dogmatic()) throw Error(ErrorKind::DogmaticMass, "canonical decomposition needs m(frame) > 0");
  Eigen::VectorXd lw = mass_to_commonality(m).array().max(kCommonalityFloor).log().matrix();
  superset_mobius_inplace(lw);
  lw = -lw;
  for (Eigen::Index i = 0; i < lw.size(); ++i) {
    if (std::abs(lw[i]) <= kLogWeightSnap) lw[i] = 0.0;
  }
  return WeightMap(m.frame_ptr(), std::move(lw));
}

Eigen::VectorXd commonality_from_log_weights(const Eigen::VectorXd& log_weights) {
  // ln q(B) = sum of ln w(A) over every A that does not contain B. Zero
  // weights are counted separately so -inf never meets -inf.
  const Eigen::Index size = log_weights.size();
  Eigen::VectorXd finite = Eigen::VectorXd::Zero(size);
  Eigen::VectorXd zeros = Eigen::VectorXd::Zero(size);
  for (Eigen::Index a = 0; a + 1 < size; ++a) {
    if (std::isinf(log_weights[a]) && log_weights[a] < 0.0) {
      zeros[a] = 1.0;
    } else {
      finite[a] = log_weights[a];
    }
  }
  const double finite_total = finite.sum();
  const double zero_total = zeros.sum();
  superset_sum_inplace(finite);
  superset_sum_inplace(zeros);
  Eigen::VectorXd q(size);
  for (Eigen::Index b = 0; b < size; ++b) {
    q[b] = zero_total - zeros[b] > 0.5 ? 0.0 : std::exp(finite_total - finite[b]);
  }
  return q;
}

MassFunction weights_to_mass(const WeightMap& weights) {
  Eigen::VectorXd m = commonality_from_log_weights(weights.log_weights());
  superset_mobius_inplace(m);
  return MassFunction::from_computed(weights.frame_ptr(), std::move(m), ErrorKind::NotAMass);
}

}  // namespace belief
