#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace belief {

/// Subsets of a frame are bitmasks: bit i set iff outcome i is a member.
/// 0 is the empty set and (1 << n) - 1 is the whole frame.
using SubsetIndex = std::uint32_t;

constexpr int cardinality(SubsetIndex s) noexcept { return std::popcount(s); }
constexpr bool is_subset_of(SubsetIndex a, SubsetIndex b) noexcept { return (a & ~b) == 0; }

inline constexpr int kDefaultMaxFrameSize = 20;
inline constexpr int kHardMaxFrameSize = 30;

/// Ordered list of distinct outcome labels (the frame of discernment).
class Frame {
 public:
  /// Throws Error(InvalidFrame) on empty/duplicate labels or when the size
  /// exceeds `max_size` (itself capped at kHardMaxFrameSize).
  explicit Frame(std::vector<std::string> outcomes, int max_size = kDefaultMaxFrameSize);

  /// Frame with labels theta1..thetaN.
  static Frame numbered(int n);

  int size() const noexcept { return static_cast<int>(outcomes_.size()); }
  std::size_t power_set_size() const noexcept { return std::size_t{1} << outcomes_.size(); }
  SubsetIndex full() const noexcept { return static_cast<SubsetIndex>(power_set_size() - 1); }

  const std::vector<std::string>& outcomes() const noexcept { return outcomes_; }
  const std::string& label(int i) const { return outcomes_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(const std::string& label) const;

  bool contains(SubsetIndex s) const noexcept { return s <= full(); }

  /// Throws Error(InvalidSubset) on unknown labels.
  SubsetIndex subset(const std::vector<std::string>& labels) const;
  SubsetIndex singleton(int i) const;
  std::vector<std::string> labels_of(SubsetIndex s) const;

  /// "{}", "{a}", "{a,b}", ...
  std::string name_of(SubsetIndex s) const;

  friend bool operator==(const Frame& a, const Frame& b) { return a.outcomes_ == b.outcomes_; }

 private:
  std::vector<std::string> outcomes_;
};

using FramePtr = std::shared_ptr<const Frame>;

inline FramePtr make_frame(std::vector<std::string> outcomes, int max_size = kDefaultMaxFrameSize) {
  return std::make_shared<const Frame>(std::move(outcomes), max_size);
}

inline bool same_frame(const FramePtr& a, const FramePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace belief
