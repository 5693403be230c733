#pragma once

#include <Eigen/Core>

#include <vector>

#include "belief/mass.hpp"
#include "oracle.hpp"

namespace test_support {

inline oracle::Dense dense(const Eigen::VectorXd& v) { return oracle::Dense(v.data(), v.data() + v.size()); }
inline oracle::Dense dense(const belief::MassFunction& m) { return dense(m.masses()); }

inline belief::MassFunction from_dense(const belief::FramePtr& frame, const oracle::Dense& v) {
  return belief::MassFunction(frame, Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
}

inline std::vector<oracle::Dense> dense_all(const std::vector<belief::MassFunction>& ms) {
  std::vector<oracle::Dense> out;
  for (const auto& m : ms) out.push_back(dense(m));
  return out;
}

inline belief::FramePtr numbered_frame(int n) { return std::make_shared<const belief::Frame>(belief::Frame::numbered(n)); }

}  // namespace test_support
