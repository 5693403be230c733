#include "belief/experiments.hpp"

#include <charconv>
#include <cstdio>

namespace belief {

namespace {

std::string fixed(double x, int decimals) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, decimals);
  return std::string(buf, res.ptr);
}

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string pad_left(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

std::string config_comment(const LnsConfig& cfg) {
  return "# lns: eta=" + shortest(cfg.eta) + " precision=" + (cfg.use_precision ? "on" : "off") +
         " global_rule=" + std::string(to_string(cfg.global_rule)) +
         " issf_policy=" + (cfg.issf_policy == IssfPolicy::Strict ? "strict" : "drop") + "\n";
}

std::vector<MassFunction> to_masses(std::span<const SimpleSupport> ssfs) {
  std::vector<MassFunction> out;
  out.reserve(ssfs.size());
  for (const auto& s : ssfs) out.push_back(s.to_mass());
  return out;
}

}  // namespace

std::string subset_key(const Frame& frame, SubsetIndex s) {
  if (s == 0) return "empty";
  std::string out;
  for (const auto& label : frame.labels_of(s)) {
    if (!out.empty()) out += '+';
    out += label;
  }
  return out;
}

BbaDocument experiment1_document() {
  BbaDocument doc;
  doc.frame = {"theta1", "theta2", "theta3"};
  const std::vector<std::string> all = doc.frame;
  doc.bbas.push_back({"m1", {{{"theta2"}, 0.9}, {all, 0.1}}});
  const double support[] = {0.1, 0.2, 0.3, 0.1, 0.2};
  for (int i = 0; i < 5; ++i) {
    doc.bbas.push_back({"m" + std::to_string(i + 2), {{{"theta1"}, support[i]}, {all, 1.0 - support[i]}}});
  }
  return doc;
}

std::vector<MassFunction> experiment1_masses() {
  const BbaDocument doc = experiment1_document();
  return to_masses(doc, frame_of(doc));
}

Table1 compute_table1() {
  const std::vector<MassFunction> ms = experiment1_masses();
  Table1 table;
  table.frame = ms.front().frame_ptr();
  for (RuleId rule : kAllRules) {
    table.columns.emplace_back(to_string(rule));
    table.values.push_back(combine(rule, ms).masses());
  }
  table.columns.emplace_back("lns");
  table.values.push_back(combine_lns(std::span<const MassFunction>(ms)).masses());
  return table;
}

std::string table1_text(const Table1& table) {
  constexpr std::size_t kWidth = 13;
  std::string out = pad_left("", 24);
  for (const auto& c : table.columns) out += pad_left(c, kWidth);
  out += '\n';
  const auto rows = static_cast<SubsetIndex>(table.frame->power_set_size());
  for (SubsetIndex s = 0; s < rows; ++s) {
    out += pad_left(table.frame->name_of(s), 24);
    for (const auto& v : table.values) out += pad_left(fixed(v[s], 5), kWidth);
    out += '\n';
  }
  out += "dp: n-ary Dubois-Prade (each conflicting tuple moves to the union of its focal sets)\n";
  return out;
}

std::string table1_csv(const Table1& table) {
  std::string out = "subset";
  for (const auto& c : table.columns) out += "," + c;
  out += '\n';
  const auto rows = static_cast<SubsetIndex>(table.frame->power_set_size());
  for (SubsetIndex s = 0; s < rows; ++s) {
    out += subset_key(*table.frame, s);
    for (const auto& v : table.values) out += "," + fixed(v[s], 5);
    out += '\n';
  }
  return out;
}

std::vector<double> default_eta_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 24; ++i) grid.push_back(0.25 * i);
  return grid;
}

Exp2Result run_exp2(const std::vector<double>& eta_grid, Seed seed, const LnsConfig& base) {
  validate(base);
  Exp2Result result;
  result.frame = make_frame({"theta1", "theta2", "theta3"});
  result.seed = seed;
  result.base = base;
  const std::vector<SimpleSupport> corpus = exp2_corpus(result.frame, seed);
  for (double eta : eta_grid) {
    LnsConfig cfg = base;
    cfg.eta = eta;
    const MassFunction m = combine_lns(std::span<const SimpleSupport>(corpus), cfg);
    result.rows.push_back({eta, m.masses(), pignistic(m)});
  }
  result.crossover = betp_crossover(result.rows);
  return result;
}

std::optional<double> betp_crossover(const std::vector<Exp2Row>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double d = rows[i].betp[0] - rows[i].betp[1];
    if (d <= 0.0) continue;
    if (i == 0) return std::nullopt;
    const double before = rows[i - 1].betp[0] - rows[i - 1].betp[1];
    return rows[i - 1].eta + (rows[i].eta - rows[i - 1].eta) * (-before) / (d - before);
  }
  return std::nullopt;
}

std::string exp2_csv(const Exp2Result& result) {
  const Frame& frame = *result.frame;
  std::string out = "# exp2: s1=60 s2=50 s3=50 seed=" + std::to_string(result.seed.value) + "\n";
  out += config_comment(result.base);
  out += "seed,eta";
  const auto subsets = static_cast<SubsetIndex>(frame.power_set_size());
  for (SubsetIndex s = 0; s < subsets; ++s) out += ",m_" + subset_key(frame, s);
  for (const auto& label : frame.outcomes()) out += ",betp_" + label;
  out += '\n';
  for (const auto& row : result.rows) {
    out += std::to_string(result.seed.value) + "," + shortest(row.eta);
    for (SubsetIndex s = 0; s < subsets; ++s) out += "," + fixed(row.masses[s], 10);
    for (Eigen::Index i = 0; i < row.betp.size(); ++i) out += "," + fixed(row.betp[i], 10);
    out += '\n';
  }
  out += "# crossover_eta=" + (result.crossover ? fixed(*result.crossover, 6) : std::string("none")) + "\n";
  return out;
}

std::vector<int> Exp3Options::default_s2_grid() {
  std::vector<int> grid;
  for (int s2 = 5; s2 <= 100; s2 += 5) grid.push_back(s2);
  return grid;
}

std::vector<std::string> Exp3Options::all_exp3_rules() {
  std::vector<std::string> rules;
  for (RuleId rule : kAllRules) rules.emplace_back(to_string(rule));
  rules.emplace_back("lns");
  return rules;
}

MassFunction combine_named(const std::string& rule, std::span<const SimpleSupport> ssfs, const LnsConfig& cfg) {
  if (rule == "lns") return combine_lns(ssfs, cfg);
  const auto id = parse_rule_id(rule);
  if (!id) throw Error(ErrorKind::InvalidArgument, "unknown rule '" + rule + "'");
  if (*id == RuleId::Conjunctive) return combine_conjunctive(ssfs);
  return combine(*id, to_masses(ssfs));
}

std::vector<Exp3Cell> run_exp3(const Exp3Options& options) {
  validate(options.lns);
  for (const auto& rule : options.rules) {
    if (rule != "lns" && !parse_rule_id(rule)) throw Error(ErrorKind::InvalidArgument, "unknown rule '" + rule + "'");
  }
  const FramePtr frame = make_frame({"theta1", "theta2"});
  std::vector<Exp3Cell> cells;
  for (int t : options.t_values) {
    for (int s2 : options.s2_values) {
      const std::vector<SimpleSupport> corpus = exp3_corpus(frame, s2, t, options.seed);
      for (const auto& rule : options.rules) {
        Exp3Cell cell{t, s2, rule};
        try {
          const MassFunction m = combine_named(rule, corpus, options.lns);
          cell.ok = true;
          cell.conflict = m.conflict();
          cell.theta1 = m[0b01];
        } catch (const Error& e) {
          if (!is_rule_failure(e.kind())) throw;
          cell.failure = std::string(to_string(e.kind()));
        }
        cells.push_back(std::move(cell));
      }
    }
  }
  return cells;
}

std::string exp3_csv(const Exp3Options& options, const std::vector<Exp3Cell>& cells) {
  std::string out = "# exp3: seed=" + std::to_string(options.seed.value) + "\n";
  out += config_comment(options.lns);
  out += "seed,t,s2,rule,m_empty,m_theta1,status,reason\n";
  for (const auto& c : cells) {
    out += std::to_string(options.seed.value) + "," + std::to_string(c.t) + "," + std::to_string(c.s2) + "," + c.rule;
    if (c.ok) {
      out += "," + shortest(c.conflict) + "," + shortest(c.theta1) + ",ok,\n";
    } else {
      out += ",,,rule-failed," + c.failure + "\n";
    }
  }
  return out;
}

}  // namespace belief
