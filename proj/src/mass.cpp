#include "belief/mass.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "belief/transforms.hpp"

namespace belief {

namespace {

void check_length(const Frame& frame, const Eigen::VectorXd& v) {
  if (static_cast<std::size_t>(v.size()) != frame.power_set_size()) {
    throw Error(ErrorKind::InvalidArgument, "vector length " + std::to_string(v.size()) +
                                                " does not match 2^" + std::to_string(frame.size()));
  }
}

}  // namespace

MassFunction::MassFunction(FramePtr frame, Eigen::VectorXd masses)
    : frame_(std::move(frame)), masses_(std::move(masses)) {
  if (!frame_) throw Error(ErrorKind::InvalidFrame, "null frame");
  check_length(*frame_, masses_);
  for (Eigen::Index i = 0; i < masses_.size(); ++i) {
    if (!std::isfinite(masses_[i])) throw Error(ErrorKind::NegativeMass, "non-finite mass");
    if (masses_[i] < 0.0) {
      throw Error(ErrorKind::NegativeMass, "negative mass on " + frame_->name_of(static_cast<SubsetIndex>(i)));
    }
  }
  const double total = masses_.sum();
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw Error(ErrorKind::SumNotOne, "masses sum to " + std::to_string(total));
  }
}

MassFunction MassFunction::vacuous(FramePtr frame) {
  const SubsetIndex full = frame->full();
  return categorical(std::move(frame), full);
}

MassFunction MassFunction::categorical(FramePtr frame, SubsetIndex focal) {
  if (!frame) throw Error(ErrorKind::InvalidFrame, "null frame");
  if (!frame->contains(focal)) throw Error(ErrorKind::InvalidSubset, "subset outside frame");
  Eigen::VectorXd m = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(frame->power_set_size()));
  m[focal] = 1.0;
  return MassFunction(Trusted{}, std::move(frame), std::move(m));
}

MassFunction MassFunction::from_computed(FramePtr frame, Eigen::VectorXd masses, ErrorKind failure) {
  if (!frame) throw Error(ErrorKind::InvalidFrame, "null frame");
  check_length(*frame, masses);
  for (Eigen::Index i = 0; i < masses.size(); ++i) {
    double& x = masses[i];
    if (!std::isfinite(x)) throw Error(failure, "non-finite entry");
    if (x < 0.0) {
      if (x < -kMassTolerance) {
        throw Error(failure, "entry " + std::to_string(x) + " on " +
                                 frame->name_of(static_cast<SubsetIndex>(i)));
      }
      x = 0.0;
    }
  }
  const double total = masses.sum();
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw Error(failure, "entries sum to " + std::to_string(total));
  }
  return MassFunction(Trusted{}, std::move(frame), std::move(masses));
}

std::vector<SubsetIndex> MassFunction::focal_sets() const {
  std::vector<SubsetIndex> out;
  for (Eigen::Index i = 0; i < masses_.size(); ++i) {
    if (masses_[i] > 0.0) out.push_back(static_cast<SubsetIndex>(i));
  }
  return out;
}

bool MassFunction::is_categorical() const {
  const auto focal = focal_sets();
  return focal.size() == 1 && focal.front() != frame_->full() && masses_[focal.front()] == 1.0;
}

std::optional<SimpleSupport> MassFunction::as_simple_support() const {
  const SubsetIndex full = frame_->full();
  std::optional<SubsetIndex> other;
  for (Eigen::Index i = 0; i + 1 < masses_.size(); ++i) {
    if (masses_[i] > 0.0) {
      if (other) return std::nullopt;
      other = static_cast<SubsetIndex>(i);
    }
  }
  if (!other) return SimpleSupport::from_log_weight(frame_, full, 0.0);
  const double w = ignorance();
  return SimpleSupport::from_log_weight(frame_, *other,
                                        w > 0.0 ? std::log(w) : -std::numeric_limits<double>::infinity());
}

SimpleSupport::SimpleSupport(FramePtr frame, SubsetIndex focal, double weight)
    : frame_(std::move(frame)), focal_(focal), log_weight_(0.0) {
  if (!frame_) throw Error(ErrorKind::InvalidFrame, "null frame");
  if (!frame_->contains(focal_)) throw Error(ErrorKind::InvalidSubset, "focal set outside frame");
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "simple support weight must lie in [0,1]");
  }
  log_weight_ = std::log(weight);
}

SimpleSupport SimpleSupport::from_log_weight(FramePtr frame, SubsetIndex focal, double log_weight) {
  if (std::isnan(log_weight) || log_weight > 0.0) {
    throw Error(ErrorKind::InvalidArgument, "simple support log-weight must be <= 0");
  }
  SimpleSupport s(std::move(frame), focal, 1.0);
  s.log_weight_ = log_weight;
  return s;
}

double SimpleSupport::weight() const { return std::exp(log_weight_); }

MassFunction SimpleSupport::to_mass() const {
  const SubsetIndex full = frame_->full();
  Eigen::VectorXd m = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(frame_->power_set_size()));
  const double w = weight();
  m[full] = w;
  m[focal_] += 1.0 - w;
  return MassFunction::from_computed(frame_, std::move(m));
}

Eigen::VectorXd SimpleSupport::commonality() const {
  const double w = weight();
  const auto size = static_cast<Eigen::Index>(frame_->power_set_size());
  Eigen::VectorXd q(size);
  for (Eigen::Index b = 0; b < size; ++b) {
    q[b] = is_subset_of(static_cast<SubsetIndex>(b), focal_) ? 1.0 : w;
  }
  return q;
}

MassFunction make_mass(FramePtr frame, const std::vector<std::pair<SubsetIndex, double>>& assignments) {
  if (!frame) throw Error(ErrorKind::InvalidFrame, "null frame");
  Eigen::VectorXd m = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(frame->power_set_size()));
  std::set<SubsetIndex> seen;
  for (const auto& [subset, value] : assignments) {
    if (!frame->contains(subset)) throw Error(ErrorKind::InvalidSubset, "subset outside frame");
    if (!seen.insert(subset).second) {
      throw Error(ErrorKind::DuplicateSubset, "subset " + frame->name_of(subset) + " listed twice");
    }
    m[subset] = value;
  }
  return MassFunction(std::move(frame), std::move(m));
}

Eigen::VectorXd mass_to_commonality(const MassFunction& m) { return superset_sum(m.masses()); }

Eigen::VectorXd mass_to_implicability(const MassFunction& m) { return subset_sum(m.masses()); }

MassFunction commonality_to_mass(FramePtr frame, const Eigen::VectorXd& commonality) {
  return MassFunction::from_computed(std::move(frame), superset_mobius(commonality));
}

MassFunction implicability_to_mass(FramePtr frame, const Eigen::VectorXd& implicability) {
  return MassFunction::from_computed(std::move(frame), subset_mobius(implicability));
}

Eigen::VectorXd pignistic(const MassFunction& m) {
  const double conflict = m.conflict();
  if (conflict >= 1.0 - 1e-12) throw Error(ErrorKind::TotalConflict, "pignistic transform of a fully conflicting mass");
  const int n = m.frame().size();
  Eigen::VectorXd bet = Eigen::VectorXd::Zero(n);
  const auto& masses = m.masses();
  for (Eigen::Index a = 1; a < masses.size(); ++a) {
    if (masses[a] == 0.0) continue;
    const auto subset = static_cast<SubsetIndex>(a);
    const double share = masses[a] / cardinality(subset);
    for (int i = 0; i < n; ++i) {
      if (subset >> i & 1U) bet[i] += share;
    }
  }
  return bet / (1.0 - conflict);
}

}  // namespace belief
