#pragma once

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

#include "belief/error.hpp"
#include "belief/frame.hpp"

namespace belief {

/// Tolerance on the sum-to-one constraint when building a mass function.
inline constexpr double kMassTolerance = 1e-9;

class SimpleSupport;

/// Basic belief assignment stored densely over all 2^n subsets.
/// Immutable once built; mass on the empty set (conflict) is allowed.
class MassFunction {
 public:
  /// Validates every entry is finite and >= 0 and the total is 1 within
  /// kMassTolerance. Throws NegativeMass / SumNotOne / InvalidArgument.
  MassFunction(FramePtr frame, Eigen::VectorXd masses);

  static MassFunction vacuous(FramePtr frame);
  static MassFunction categorical(FramePtr frame, SubsetIndex focal);

  /// Builds from a computed vector (transform or rule output). Negative
  /// round-off down to -kMassTolerance is flushed to zero; anything worse
  /// throws `failure`.
  static MassFunction from_computed(FramePtr frame, Eigen::VectorXd masses,
                                    ErrorKind failure = ErrorKind::NotAValidTransform);

  const Frame& frame() const noexcept { return *frame_; }
  const FramePtr& frame_ptr() const noexcept { return frame_; }
  const Eigen::VectorXd& masses() const noexcept { return masses_; }

  double operator[](SubsetIndex s) const { return masses_[static_cast<Eigen::Index>(s)]; }
  double conflict() const noexcept { return masses_[0]; }
  double ignorance() const noexcept { return masses_[masses_.size() - 1]; }

  std::vector<SubsetIndex> focal_sets() const;

  bool is_vacuous() const noexcept { return ignorance() == 1.0; }
  bool is_dogmatic() const noexcept { return ignorance() <= 0.0; }
  bool is_categorical() const;

  /// Some(ssf) when the focal sets are {A, ALL} or {ALL}.
  std::optional<SimpleSupport> as_simple_support() const;

 private:
  struct Trusted {};
  MassFunction(Trusted, FramePtr frame, Eigen::VectorXd masses)
      : frame_(std::move(frame)), masses_(std::move(masses)) {}

  FramePtr frame_;
  Eigen::VectorXd masses_;
};

/// Simple support function A^w: mass 1 - w on `focal`, w on the frame.
/// The weight is kept as ln w so long products never underflow.
class SimpleSupport {
 public:
  /// weight in [0, 1]; throws InvalidArgument otherwise.
  SimpleSupport(FramePtr frame, SubsetIndex focal, double weight);

  /// log_weight <= 0 (may be -inf for a categorical SSF).
  static SimpleSupport from_log_weight(FramePtr frame, SubsetIndex focal, double log_weight);

  const Frame& frame() const noexcept { return *frame_; }
  const FramePtr& frame_ptr() const noexcept { return frame_; }
  SubsetIndex focal() const noexcept { return focal_; }
  double log_weight() const noexcept { return log_weight_; }
  double weight() const;

  bool is_vacuous() const noexcept { return focal_ == frame_->full() || log_weight_ == 0.0; }

  MassFunction to_mass() const;

  /// q(B) = 1 for B within the focal set, w otherwise.
  Eigen::VectorXd commonality() const;

 private:
  FramePtr frame_;
  SubsetIndex focal_;
  double log_weight_;
};

/// Throws NegativeMass, SumNotOne, DuplicateSubset or InvalidSubset.
MassFunction make_mass(FramePtr frame, const std::vector<std::pair<SubsetIndex, double>>& assignments);

Eigen::VectorXd mass_to_commonality(const MassFunction& m);
Eigen::VectorXd mass_to_implicability(const MassFunction& m);

/// Inverse transforms; throw NotAValidTransform if the result is not a BBA.
MassFunction commonality_to_mass(FramePtr frame, const Eigen::VectorXd& commonality);
MassFunction implicability_to_mass(FramePtr frame, const Eigen::VectorXd& implicability);

/// Pignistic probability over outcomes, normalised by 1 - m(empty).
/// Throws TotalConflict when m(empty) >= 1 - 1e-12.
Eigen::VectorXd pignistic(const MassFunction& m);

}  // namespace belief
