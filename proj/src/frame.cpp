#include "belief/frame.hpp"

#include <algorithm>
#include <unordered_set>

#include "belief/error.hpp"

namespace belief {

Frame::Frame(std::vector<std::string> outcomes, int max_size) : outcomes_(std::move(outcomes)) {
  const int cap = std::min(max_size, kHardMaxFrameSize);
  if (outcomes_.empty()) throw Error(ErrorKind::InvalidFrame, "frame has no outcomes");
  if (static_cast<int>(outcomes_.size()) > cap) {
    throw Error(ErrorKind::InvalidFrame, "frame has " + std::to_string(outcomes_.size()) +
                                             " outcomes, limit is " + std::to_string(cap));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : outcomes_) {
    if (label.empty()) throw Error(ErrorKind::InvalidFrame, "empty outcome label");
    if (!seen.insert(label).second) throw Error(ErrorKind::InvalidFrame, "duplicate outcome label '" + label + "'");
  }
}

Frame Frame::numbered(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("theta" + std::to_string(i));
  return Frame(std::move(labels), std::max(n, kDefaultMaxFrameSize));
}

std::optional<int> Frame::index_of(const std::string& label) const {
  const auto it = std::find(outcomes_.begin(), outcomes_.end(), label);
  if (it == outcomes_.end()) return std::nullopt;
  return static_cast<int>(it - outcomes_.begin());
}

SubsetIndex Frame::subset(const std::vector<std::string>& labels) const {
  SubsetIndex s = 0;
  for (const auto& label : labels) {
    const auto i = index_of(label);
    if (!i) throw Error(ErrorKind::InvalidSubset, "unknown outcome '" + label + "'");
    s |= SubsetIndex{1} << *i;
  }
  return s;
}

SubsetIndex Frame::singleton(int i) const {
  if (i < 0 || i >= size()) throw Error(ErrorKind::InvalidSubset, "outcome index out of range");
  return SubsetIndex{1} << i;
}

std::vector<std::string> Frame::labels_of(SubsetIndex s) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (s >> i & 1U) out.push_back(outcomes_[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::string Frame::name_of(SubsetIndex s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : labels_of(s)) {
    if (!first) out += ',';
    out += label;
    first = false;
  }
  return out + "}";
}

}  // namespace belief
