#pragma once

#include <Eigen/Core>

#include "belief/mass.hpp"

namespace belief {

/// Canonical conjunctive weights w(A) for every A strictly inside the frame.
/// Weights above 1 mark inverse simple support components. The entry for
/// the whole frame is fixed at 1.
class WeightMap {
 public:
  /// `log_weights` has length 2^n; the last entry is ignored and forced to 0.
  WeightMap(FramePtr frame, Eigen::VectorXd log_weights);

  static WeightMap neutral(FramePtr frame);

  const Frame& frame() const noexcept { return *frame_; }
  const FramePtr& frame_ptr() const noexcept { return frame_; }

  double weight(SubsetIndex a) const;
  double log_weight(SubsetIndex a) const { return log_weights_[static_cast<Eigen::Index>(a)]; }
  const Eigen::VectorXd& log_weights() const noexcept { return log_weights_; }
  Eigen::VectorXd weights() const;

  /// True when every weight is at most 1 + tolerance.
  bool is_u_separable(double tolerance = 1e-9) const;

 private:
  FramePtr frame_;
  Eigen::VectorXd log_weights_;
};

/// ln w(A) = -sum_{B >= A} (-1)^{|B|-|A|} ln q(B). Commonalities are clamped
/// at 1e-300 and log-weights within 1e-12 of zero snap to exactly zero.
/// Throws DogmaticMass when m(frame) == 0.
WeightMap canonical_decomposition(const MassFunction& m);

/// Commonality of the conjunctive combination of the components A^{w(A)}
/// given ln w over all subsets. Entries may be -inf (categorical component);
/// the entry for the whole frame is ignored.
Eigen::VectorXd commonality_from_log_weights(const Eigen::VectorXd& log_weights);

/// Conjunctive recombination of all components, inverse ones included.
/// Throws NotAMass if the product leaves a negative entry beyond -1e-9.
MassFunction weights_to_mass(const WeightMap& weights);

}  // namespace belief
