#include "belief/lns.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "belief/decomposition.hpp"

namespace belief {

namespace {

constexpr double kSeparabilityTolerance = 1e-9;

}  // namespace

void validate(const LnsConfig& cfg) {
  if (!std::isfinite(cfg.eta) || cfg.eta < 0.0) throw Error(ErrorKind::InvalidArgument, "eta must be finite and >= 0");
  switch (cfg.global_rule) {
    case RuleId::Conjunctive:
    case RuleId::Dp:
    case RuleId::Pcr6:
      return;
    default:
      throw Error(ErrorKind::InvalidArgument,
                  "global rule must be conjunctive, dp or pcr6, not " + std::string(to_string(cfg.global_rule)));
  }
}

double GroupSummary::inner_weight() const { return std::exp(inner_log_weight); }

std::vector<SimpleSupport> decompose_to_ssfs(const MassFunction& m, IssfPolicy policy) {
  if (auto ssf = m.as_simple_support()) {
    if (ssf->is_vacuous()) return {};
    return {*ssf};
  }
  const WeightMap weights = canonical_decomposition(m);
  const SubsetIndex full = m.frame().full();
  const double max_log = std::log1p(kSeparabilityTolerance);
  std::vector<SimpleSupport> out;
  for (SubsetIndex a = 0; a < full; ++a) {
    const double lw = weights.log_weight(a);
    if (lw == 0.0) continue;
    if (lw > 0.0) {
      if (policy == IssfPolicy::Strict && lw > max_log) {
        throw Error(ErrorKind::NotSeparable, "inverse simple support on " + m.frame().name_of(a) +
                                                 " (w = " + std::to_string(std::exp(lw)) + ")");
      }
      continue;
    }
    out.push_back(SimpleSupport::from_log_weight(m.frame_ptr(), a, lw));
  }
  return out;
}

std::vector<GroupSummary> group_ssfs(std::span<const SimpleSupport> ssfs) {
  if (ssfs.empty()) return {};
  const FramePtr& frame = ssfs.front().frame_ptr();
  std::vector<std::pair<SubsetIndex, double>> entries;
  entries.reserve(ssfs.size());
  for (const auto& s : ssfs) {
    if (!same_frame(frame, s.frame_ptr())) throw Error(ErrorKind::FrameMismatch, "inputs use different frames");
    if (!s.is_vacuous()) entries.emplace_back(s.focal(), s.log_weight());
  }
  std::sort(entries.begin(), entries.end());
  std::vector<GroupSummary> groups;
  for (const auto& [focal, lw] : entries) {
    if (groups.empty() || groups.back().focal != focal) groups.push_back({focal, 0, 0.0});
    groups.back().count += 1;
    groups.back().inner_log_weight += lw;
  }
  return groups;
}

std::vector<DiscountFactor> discount_factors(std::span<const GroupSummary> groups, int frame_size,
                                             const LnsConfig& cfg) {
  validate(cfg);
  std::vector<double> scores;
  scores.reserve(groups.size());
  double total = 0.0;
  for (const auto& g : groups) {
    double score = static_cast<double>(g.count);
    if (cfg.use_precision) {
      if (g.focal == 0) throw Error(ErrorKind::EmptyFocalInGroup, "precision factor undefined for the empty set");
      const double beta = static_cast<double>(frame_size) / cardinality(g.focal);
      score *= std::pow(beta, cfg.eta);
    }
    scores.push_back(score);
    total += score;
  }
  if (groups.empty() || !(total > 0.0)) throw Error(ErrorKind::EmptyGroups, "no non-vacuous group to weigh");
  if (!std::isfinite(total)) throw Error(ErrorKind::InvalidArgument, "eta too large: precision factors overflow");
  std::vector<DiscountFactor> out;
  out.reserve(groups.size());
  for (double score : scores) out.emplace_back(std::min(1.0, score / total));
  return out;
}

std::vector<SimpleSupport> lns_group_supports(std::span<const SimpleSupport> ssfs, const LnsConfig& cfg) {
  validate(cfg);
  const std::vector<GroupSummary> groups = group_ssfs(ssfs);
  if (groups.empty()) return {};
  const FramePtr& frame = ssfs.front().frame_ptr();
  const std::vector<DiscountFactor> alphas = discount_factors(groups, frame->size(), cfg);
  std::vector<SimpleSupport> out;
  out.reserve(groups.size());
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const double alpha = alphas[k].value();
    double log_weight = groups[k].inner_log_weight;
    if (alpha != 1.0) {
      // exp() flushes to zero for very large groups, which is the intended limit.
      const double w = std::min(1.0, 1.0 - alpha + alpha * groups[k].inner_weight());
      log_weight = std::log(w);
    }
    out.push_back(SimpleSupport::from_log_weight(frame, groups[k].focal, log_weight));
  }
  return out;
}

MassFunction combine_lns(std::span<const SimpleSupport> ssfs, const LnsConfig& cfg) {
  validate(cfg);
  if (ssfs.empty()) throw Error(ErrorKind::EmptyInput, "nothing to combine");
  const std::vector<SimpleSupport> supports = lns_group_supports(ssfs, cfg);
  if (supports.empty()) return MassFunction::vacuous(ssfs.front().frame_ptr());
  if (cfg.global_rule == RuleId::Conjunctive) return combine_conjunctive(std::span<const SimpleSupport>(supports));
  std::vector<MassFunction> masses;
  masses.reserve(supports.size());
  for (const auto& s : supports) masses.push_back(s.to_mass());
  return combine(cfg.global_rule, masses);
}

MassFunction combine_lns(std::span<const MassFunction> ms, const LnsConfig& cfg) {
  validate(cfg);
  if (ms.empty()) throw Error(ErrorKind::EmptyInput, "nothing to combine");
  const FramePtr& frame = ms.front().frame_ptr();
  std::vector<SimpleSupport> ssfs;
  for (const auto& m : ms) {
    if (!same_frame(frame, m.frame_ptr())) throw Error(ErrorKind::FrameMismatch, "inputs use different frames");
    auto parts = decompose_to_ssfs(m, cfg.issf_policy);
    ssfs.insert(ssfs.end(), std::make_move_iterator(parts.begin()), std::make_move_iterator(parts.end()));
  }
  if (ssfs.empty()) return MassFunction::vacuous(frame);
  return combine_lns(std::span<const SimpleSupport>(ssfs), cfg);
}

}  // namespace belief
