#include "belief/rules.hpp"

#include <algorithm>
#include <cmath>

#include "belief/decomposition.hpp"
#include "belief/transforms.hpp"

namespace belief {

namespace {

template <typename T>
const FramePtr& common_frame(std::span<const T> items) {
  if (items.empty()) throw Error(ErrorKind::EmptyInput, "nothing to combine");
  const FramePtr& frame = items.front().frame_ptr();
  for (const auto& item : items.subspan(1)) {
    if (!same_frame(frame, item.frame_ptr())) throw Error(ErrorKind::FrameMismatch, "inputs use different frames");
  }
  return frame;
}

struct FocalEntry {
  SubsetIndex subset;
  double mass;
};

using FocalTable = std::vector<std::vector<FocalEntry>>;

FocalTable focal_table(std::span<const MassFunction> ms) {
  FocalTable table;
  table.reserve(ms.size());
  double terms = 1.0;
  for (const auto& m : ms) {
    auto& row = table.emplace_back();
    for (SubsetIndex s : m.focal_sets()) row.push_back({s, m[s]});
    terms *= static_cast<double>(row.size());
    if (terms > static_cast<double>(kMaxEnumerationTerms)) {
      throw Error(ErrorKind::TermExplosion, "more than " + std::to_string(kMaxEnumerationTerms) +
                                                " focal-set tuples to enumerate");
    }
  }
  return table;
}

// Depth-first walk over every tuple of focal sets, one per source, in a
// fixed order. `leaf` receives the chosen entries, their intersection,
// union and mass product.
template <typename Leaf>
void enumerate_tuples(const FocalTable& table, SubsetIndex full, Leaf&& leaf) {
  const std::size_t depth = table.size();
  std::vector<const FocalEntry*> chosen(depth);
  std::vector<SubsetIndex> inter(depth + 1), uni(depth + 1);
  std::vector<double> product(depth + 1);
  inter[0] = full;
  uni[0] = 0;
  product[0] = 1.0;
  std::vector<std::size_t> cursor(depth, 0);
  std::size_t level = 0;
  while (true) {
    if (level == depth) {
      leaf(std::span<const FocalEntry* const>(chosen), inter[depth], uni[depth], product[depth]);
      if (depth == 0) return;
      --level;
      ++cursor[level];
      continue;
    }
    if (cursor[level] == table[level].size()) {
      cursor[level] = 0;
      if (level == 0) return;
      --level;
      ++cursor[level];
      continue;
    }
    const FocalEntry& e = table[level][cursor[level]];
    chosen[level] = &e;
    inter[level + 1] = inter[level] & e.subset;
    uni[level + 1] = uni[level] | e.subset;
    product[level + 1] = product[level] * e.mass;
    ++level;
  }
}

Eigen::VectorXd zero_vector(const Frame& frame) {
  return Eigen::VectorXd::Zero(static_cast<Eigen::Index>(frame.power_set_size()));
}

}  // namespace

std::string_view to_string(RuleId rule) noexcept {
  switch (rule) {
    case RuleId::Conjunctive: return "conjunctive";
    case RuleId::Dempster: return "dempster";
    case RuleId::Disjunctive: return "disjunctive";
    case RuleId::Dp: return "dp";
    case RuleId::Pcr6: return "pcr6";
    case RuleId::Cautious: return "cautious";
    case RuleId::Average: return "average";
  }
  return "unknown";
}

std::optional<RuleId> parse_rule_id(std::string_view name) {
  for (RuleId rule : kAllRules) {
    if (to_string(rule) == name) return rule;
  }
  return std::nullopt;
}

DiscountFactor::DiscountFactor(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorKind::InvalidArgument, "discount factor must lie in [0,1]");
}

MassFunction combine_conjunctive(std::span<const MassFunction> ms) {
  const FramePtr& frame = common_frame(ms);
  Eigen::VectorXd q = mass_to_commonality(ms.front());
  for (const auto& m : ms.subspan(1)) q.array() *= mass_to_commonality(m).array();
  superset_mobius_inplace(q);
  return MassFunction::from_computed(frame, std::move(q));
}

MassFunction combine_conjunctive(std::span<const SimpleSupport> ssfs) {
  const FramePtr& frame = common_frame(ssfs);
  Eigen::VectorXd log_weights = zero_vector(*frame);
  for (const auto& s : ssfs) {
    if (!s.is_vacuous()) log_weights[s.focal()] += s.log_weight();
  }
  Eigen::VectorXd m = commonality_from_log_weights(log_weights);
  superset_mobius_inplace(m);
  return MassFunction::from_computed(frame, std::move(m));
}

MassFunction combine_dempster(std::span<const MassFunction> ms) {
  const MassFunction conj = combine_conjunctive(ms);
  Eigen::VectorXd m = conj.masses();
  m[0] = 0.0;
  // Summing the non-empty masses directly is more accurate than 1 - kappa.
  const double retained = m.sum();
  if (retained <= kTotalConflictThreshold) {
    throw Error(ErrorKind::TotalConflict, "1 - kappa = " + std::to_string(retained) + " is below machine reach");
  }
  m /= retained;
  return MassFunction::from_computed(conj.frame_ptr(), std::move(m));
}

MassFunction combine_disjunctive(std::span<const MassFunction> ms) {
  const FramePtr& frame = common_frame(ms);
  Eigen::VectorXd b = mass_to_implicability(ms.front());
  for (const auto& m : ms.subspan(1)) b.array() *= mass_to_implicability(m).array();
  subset_mobius_inplace(b);
  return MassFunction::from_computed(frame, std::move(b));
}

MassFunction combine_dp(std::span<const MassFunction> ms) {
  const FramePtr& frame = common_frame(ms);
  const FocalTable table = focal_table(ms);
  Eigen::VectorXd out = zero_vector(*frame);
  enumerate_tuples(table, frame->full(),
                   [&](std::span<const FocalEntry* const>, SubsetIndex inter, SubsetIndex uni, double product) {
                     out[inter != 0 ? inter : uni] += product;
                   });
  return MassFunction::from_computed(frame, std::move(out));
}

MassFunction combine_pcr6(std::span<const MassFunction> ms) {
  const FramePtr& frame = common_frame(ms);
  const FocalTable table = focal_table(ms);
  Eigen::VectorXd out = zero_vector(*frame);
  enumerate_tuples(table, frame->full(),
                   [&](std::span<const FocalEntry* const> chosen, SubsetIndex inter, SubsetIndex, double product) {
                     if (inter != 0) {
                       out[inter] += product;
                       return;
                     }
                     double total = 0.0;
                     for (const FocalEntry* e : chosen) total += e->mass;
                     for (const FocalEntry* e : chosen) out[e->subset] += product * (e->mass / total);
                   });
  return MassFunction::from_computed(frame, std::move(out));
}

MassFunction combine_cautious(std::span<const MassFunction> ms) {
  const FramePtr& frame = common_frame(ms);
  Eigen::VectorXd log_weights = canonical_decomposition(ms.front()).log_weights();
  for (const auto& m : ms.subspan(1)) {
    log_weights = log_weights.cwiseMin(canonical_decomposition(m).log_weights());
  }
  return weights_to_mass(WeightMap(frame, std::move(log_weights)));
}

MassFunction combine_average(std::span<const MassFunction> ms) {
  const FramePtr& frame = common_frame(ms);
  Eigen::VectorXd sum = zero_vector(*frame);
  for (const auto& m : ms) sum += m.masses();
  return MassFunction::from_computed(frame, sum / static_cast<double>(ms.size()));
}

MassFunction combine(RuleId rule, std::span<const MassFunction> ms) {
  switch (rule) {
    case RuleId::Conjunctive: return combine_conjunctive(ms);
    case RuleId::Dempster: return combine_dempster(ms);
    case RuleId::Disjunctive: return combine_disjunctive(ms);
    case RuleId::Dp: return combine_dp(ms);
    case RuleId::Pcr6: return combine_pcr6(ms);
    case RuleId::Cautious: return combine_cautious(ms);
    case RuleId::Average: return combine_average(ms);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown rule");
}

MassFunction discount(const MassFunction& m, DiscountFactor alpha) {
  const double a = alpha.value();
  Eigen::VectorXd out = a * m.masses();
  out[out.size() - 1] += 1.0 - a;
  return MassFunction::from_computed(m.frame_ptr(), std::move(out));
}

}  // namespace belief
