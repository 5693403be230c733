#pragma once

// Combination rule for a large number of sources: every input is broken
// into simple support functions, these are grouped by focal set, each
// group is fused and then discounted by its share of the sources
// (optionally favouring precise focal sets), and the group summaries are
// finally combined with a conjunctive-style rule.

#include <cstddef>
#include <span>
#include <vector>

#include "belief/mass.hpp"
#include "belief/rules.hpp"

namespace belief {

/// What to do with inverse simple support components (weight > 1).
enum class IssfPolicy {
  Strict,  ///< fail with NotSeparable
  Drop,    ///< treat the weight as 1; lossy, exploratory use only
};

struct LnsConfig {
  double eta = 1.0;
  bool use_precision = true;
  RuleId global_rule = RuleId::Conjunctive;  ///< conjunctive, dp or pcr6
  IssfPolicy issf_policy = IssfPolicy::Strict;
};

/// Throws InvalidArgument for a negative/non-finite eta or an unsupported
/// global rule.
void validate(const LnsConfig& cfg);

struct GroupSummary {
  SubsetIndex focal = 0;
  std::size_t count = 0;
  double inner_log_weight = 0.0;  ///< sum of ln w over the group

  double inner_weight() const;
};

/// One SimpleSupport per subset carrying a weight below 1. Simple support
/// inputs are returned as-is (empty when vacuous).
std::vector<SimpleSupport> decompose_to_ssfs(const MassFunction& m, IssfPolicy policy = IssfPolicy::Strict);

/// Groups by exact focal set, ordered by SubsetIndex. Vacuous supports are
/// skipped. Log-weights are summed in sorted order, so the result does not
/// depend on the input order.
std::vector<GroupSummary> group_ssfs(std::span<const SimpleSupport> ssfs);

/// alpha_k = beta_k^eta s_k / sum_i beta_i^eta s_i with beta_k = n / |A_k|,
/// n = frame_size; plain proportions s_k / sum_i s_i when precision is off.
/// Throws EmptyGroups or EmptyFocalInGroup.
std::vector<DiscountFactor> discount_factors(std::span<const GroupSummary> groups, int frame_size,
                                             const LnsConfig& cfg);

/// The per-group supports A_k^{w'_k}, w'_k = 1 - alpha_k + alpha_k w_k, that
/// enter the global combination.
std::vector<SimpleSupport> lns_group_supports(std::span<const SimpleSupport> ssfs, const LnsConfig& cfg);

MassFunction combine_lns(std::span<const SimpleSupport> ssfs, const LnsConfig& cfg = {});
MassFunction combine_lns(std::span<const MassFunction> ms, const LnsConfig& cfg = {});

}  // namespace belief
