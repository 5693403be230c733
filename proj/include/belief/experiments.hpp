#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "belief/document.hpp"
#include "belief/lns.hpp"
#include "belief/synth.hpp"

namespace belief {

/// "empty", or the member labels joined with '+'. Safe in CSV headers.
std::string subset_key(const Frame& frame, SubsetIndex s);

// Six-source example on {theta1, theta2, theta3}: one source backs
// {theta2}, five back {theta1}.

BbaDocument experiment1_document();
std::vector<MassFunction> experiment1_masses();

struct Table1 {
  FramePtr frame;
  std::vector<std::string> columns;
  std::vector<Eigen::VectorXd> values;  ///< one dense mass vector per column
};

/// Columns: the seven reference rules, then lns with default settings.
Table1 compute_table1();
std::string table1_text(const Table1& table);
std::string table1_csv(const Table1& table);

struct Exp2Row {
  double eta = 0.0;
  Eigen::VectorXd masses;
  Eigen::VectorXd betp;
};

struct Exp2Result {
  FramePtr frame;
  Seed seed;
  LnsConfig base;
  std::vector<Exp2Row> rows;
  std::optional<double> crossover;
};

/// 0, 0.25, ..., 6.
std::vector<double> default_eta_grid();

/// LNS over one seeded {x1}/{x2}/{x2,x3} corpus for every eta in the grid.
Exp2Result run_exp2(const std::vector<double>& eta_grid, Seed seed, const LnsConfig& base = {});

/// First eta where BetP(x1) overtakes BetP(x2), linearly interpolated
/// between grid points. None if BetP(x1) starts ahead or never overtakes.
std::optional<double> betp_crossover(const std::vector<Exp2Row>& rows);

std::string exp2_csv(const Exp2Result& result);

struct Exp3Options {
  std::vector<int> t_values{1, 2, 3, 4};
  std::vector<int> s2_values = default_s2_grid();
  std::vector<std::string> rules = all_exp3_rules();
  Seed seed = kDefaultSeed;
  LnsConfig lns;

  static std::vector<int> default_s2_grid();
  static std::vector<std::string> all_exp3_rules();
};

struct Exp3Cell {
  int t = 0;
  int s2 = 0;
  std::string rule;
  bool ok = false;
  double conflict = 0.0;
  double theta1 = 0.0;
  std::string failure;  ///< error kind when !ok
};

/// Cells ordered by (t, s2, rule order given in the options).
std::vector<Exp3Cell> run_exp3(const Exp3Options& options);

/// Runs one rule name ("lns" or a RuleId name) over simple supports.
MassFunction combine_named(const std::string& rule, std::span<const SimpleSupport> ssfs, const LnsConfig& cfg);

std::string exp3_csv(const Exp3Options& options, const std::vector<Exp3Cell>& cells);

}  // namespace belief
