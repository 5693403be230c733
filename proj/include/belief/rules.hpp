#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "belief/mass.hpp"

namespace belief {

enum class RuleId { Conjunctive, Dempster, Disjunctive, Dp, Pcr6, Cautious, Average };

inline constexpr RuleId kAllRules[] = {RuleId::Conjunctive, RuleId::Dempster, RuleId::Disjunctive, RuleId::Dp,
                                       RuleId::Pcr6,        RuleId::Cautious, RuleId::Average};

std::string_view to_string(RuleId rule) noexcept;
std::optional<RuleId> parse_rule_id(std::string_view name);

/// Upper bound on focal-set tuples visited by the DP and PCR6 rules.
inline constexpr std::size_t kMaxEnumerationTerms = 10'000'000;

/// Dempster's rule fails once 1 - kappa drops to this value or below.
inline constexpr double kTotalConflictThreshold = 1e-12;

/// Reliability factor alpha in [0, 1].
class DiscountFactor {
 public:
  explicit DiscountFactor(double alpha);
  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

// All rules are n-ary, require a non-empty list on a single frame
// (EmptyInput / FrameMismatch otherwise) and never mutate their inputs.

/// Unnormalised conjunctive rule via the product of commonalities.
MassFunction combine_conjunctive(std::span<const MassFunction> ms);
MassFunction combine_conjunctive(std::span<const SimpleSupport> ssfs);

/// Conjunctive rule followed by normalisation. Throws TotalConflict.
MassFunction combine_dempster(std::span<const MassFunction> ms);

/// Disjunctive rule via the product of implicabilities.
MassFunction combine_disjunctive(std::span<const MassFunction> ms);

/// Dubois-Prade: each conflicting tuple of focal sets goes to their union.
/// Throws TermExplosion past kMaxEnumerationTerms tuples.
MassFunction combine_dp(std::span<const MassFunction> ms);

/// PCR6: each conflicting tuple's product is split among its members in
/// proportion to the masses they were given. Throws TermExplosion.
MassFunction combine_pcr6(std::span<const MassFunction> ms);

/// Minimum of canonical weights. Throws DogmaticMass.
MassFunction combine_cautious(std::span<const MassFunction> ms);

MassFunction combine_average(std::span<const MassFunction> ms);

MassFunction combine(RuleId rule, std::span<const MassFunction> ms);

MassFunction discount(const MassFunction& m, DiscountFactor alpha);

}  // namespace belief
