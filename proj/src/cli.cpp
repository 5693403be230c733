#include "belief/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "belief/document.hpp"
#include "belief/experiments.hpp"

namespace belief::cli {

namespace {

int exit_code_for(const Error& e) { return is_rule_failure(e.kind()) ? kExitRuleFailure : kExitInputError; }

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

// Output sink honouring --output.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
      use_file_ = true;
    }
  }
  std::ostream& stream() { return use_file_ ? file_ : fallback_; }

 private:
  std::ostream& fallback_;
  std::ofstream file_;
  bool use_file_ = false;
};

std::vector<double> parse_grid(const std::string& spec) {
  // "a:b:step" or a comma list
  std::vector<double> out;
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw Error(ErrorKind::InvalidArgument, "bad number '" + s + "' in grid");
    return v;
  };
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw Error(ErrorKind::InvalidArgument, "grid must be start:stop:step");
    const double start = to_double(parts[0]), stop = to_double(parts[1]), step = to_double(parts[2]);
    if (!(step > 0.0) || stop < start) throw Error(ErrorKind::InvalidArgument, "empty or unbounded grid");
    const auto count = static_cast<long>((stop - start) / step + 1e-9);
    if (count > 100000) throw Error(ErrorKind::InvalidArgument, "grid too long");
    for (long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ',');) out.push_back(to_double(p));
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty grid");
  return out;
}

}  // namespace

int combine_text(std::string_view text, const CombineOptions& options, std::ostream& out, std::ostream& err) {
  try {
    validate(options.lns);
    if (options.rule != "lns" && !parse_rule_id(options.rule)) {
      throw Error(ErrorKind::InvalidArgument, "unknown rule '" + options.rule + "'");
    }
    DocumentLimits limits;
    limits.max_frame_size = options.max_frame_size;
    const BbaDocument doc = parse_document(text, limits);
    const FramePtr frame = frame_of(doc, limits);
    const std::vector<MassFunction> ms = to_masses(doc, frame);
    if (ms.empty()) throw Error(ErrorKind::EmptyInput, "document has no bba");
    const MassFunction fused = options.rule == "lns" ? combine_lns(std::span<const MassFunction>(ms), options.lns)
                                                     : combine(*parse_rule_id(options.rule), ms);
    if (options.csv) {
      std::ostringstream csv;
      csv << "subset,mass\n";
      for (SubsetIndex s : fused.focal_sets()) {
        char buf[64];
        const auto res = options.decimals < 0
                             ? std::to_chars(buf, buf + sizeof buf, fused[s])
                             : std::to_chars(buf, buf + sizeof buf, fused[s], std::chars_format::fixed, options.decimals);
        csv << subset_key(*frame, s) << ',' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)) << '\n';
      }
      out << csv.str();
    } else {
      const std::vector<MassFunction> result{fused};
      out << print_document(to_document(result, {options.rule}), options.decimals);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuse Dempster-Shafer mass functions and run the combination experiments", "belief-fuse"};
  app.require_subcommand(1);

  std::uint64_t seed = kDefaultSeed.value;
  double eta = 1.0;
  bool no_precision = false;
  std::string global_rule = "conjunctive";
  std::string issf_policy = "strict";
  std::string output;
  std::string format = "text";
  int max_frame_size = kDefaultMaxFrameSize;

  auto add_shared = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed")->capture_default_str();
    sub->add_option("--eta", eta, "Precision exponent")->capture_default_str();
    sub->add_flag("--no-precision", no_precision, "Plain proportional discounting");
    sub->add_option("--global-rule", global_rule, "Rule for the global LNS step")
        ->check(CLI::IsMember({"conjunctive", "dp", "pcr6"}))
        ->capture_default_str();
    sub->add_option("--issf-policy", issf_policy, "Inverse simple support handling")
        ->check(CLI::IsMember({"strict", "drop"}))
        ->capture_default_str();
    sub->add_option("--output,-o", output, "Write to this path instead of stdout");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv"}))->capture_default_str();
    sub->add_option("--max-frame-size", max_frame_size, "Largest accepted frame")
        ->check(CLI::Range(1, kHardMaxFrameSize))
        ->capture_default_str();
  };

  auto* combine_cmd = app.add_subcommand("combine", "Fuse every bba of a document");
  std::string input;
  std::string rule = "lns";
  int decimals = 5;
  combine_cmd->add_option("input", input, "Document path, '-' for stdin")->required();
  combine_cmd->add_option("--rule", rule, "lns or a reference rule")
      ->check(CLI::IsMember({"lns", "conjunctive", "dempster", "disjunctive", "dp", "pcr6", "cautious", "average"}))
      ->capture_default_str();
  combine_cmd->add_option("--decimals", decimals, "Printed decimals, -1 for round-trip precision")
      ->capture_default_str();
  add_shared(combine_cmd);

  auto* table1_cmd = app.add_subcommand("table1", "Six-source comparison of all rules");
  add_shared(table1_cmd);

  auto* exp2_cmd = app.add_subcommand("exp2", "LNS over a seeded corpus across precision exponents");
  std::string eta_grid = "0:6:0.25";
  exp2_cmd->add_option("--eta-grid", eta_grid, "start:stop:step or comma list")->capture_default_str();
  add_shared(exp2_cmd);

  auto* exp3_cmd = app.add_subcommand("exp3", "Conflict growth with the number of sources");
  std::vector<int> t_values{1, 2, 3, 4};
  std::vector<int> s2_values = Exp3Options::default_s2_grid();
  std::vector<std::string> rules = Exp3Options::all_exp3_rules();
  exp3_cmd->add_option("--t", t_values, "Majority ratios")->delimiter(',')->check(CLI::Range(1, 10000));
  exp3_cmd->add_option("--s2", s2_values, "Minority group sizes")->delimiter(',')->check(CLI::Range(1, 1000000));
  exp3_cmd->add_option("--rules", rules, "Rules to run")->delimiter(',');
  add_shared(exp3_cmd);

  auto* generate_cmd = app.add_subcommand("generate", "Write a seeded corpus as a document");
  std::string corpus = "exp2";
  int s1 = 60, s2 = 50, s3 = 50, t = 1;
  generate_cmd->add_option("corpus", corpus, "exp2 or exp3")->check(CLI::IsMember({"exp2", "exp3"}))->required();
  generate_cmd->add_option("--s1", s1, "exp2: supports on {theta1}")->check(CLI::Range(0, 1000000));
  generate_cmd->add_option("--s2", s2, "supports on {theta2}")->check(CLI::Range(0, 1000000));
  generate_cmd->add_option("--s3", s3, "exp2: supports on {theta2,theta3}")->check(CLI::Range(0, 1000000));
  generate_cmd->add_option("--t", t, "exp3: majority ratio")->check(CLI::Range(1, 10000));
  add_shared(generate_cmd);

  std::vector<std::string> argv_tail(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  LnsConfig cfg;
  cfg.eta = eta;
  cfg.use_precision = !no_precision;
  cfg.global_rule = *parse_rule_id(global_rule);
  cfg.issf_policy = issf_policy == "drop" ? IssfPolicy::Drop : IssfPolicy::Strict;
  const bool csv = format == "csv";

  try {
    Sink sink(output, out);
    std::ostream& os = sink.stream();
    if (combine_cmd->parsed()) {
      CombineOptions options{rule, cfg, decimals, csv, max_frame_size};
      return combine_text(read_input(input), options, os, err);
    }
    if (table1_cmd->parsed()) {
      const Table1 table = compute_table1();
      os << (csv ? table1_csv(table) : table1_text(table));
    } else if (exp2_cmd->parsed()) {
      os << exp2_csv(run_exp2(parse_grid(eta_grid), Seed{seed}, cfg));
    } else if (exp3_cmd->parsed()) {
      Exp3Options options;
      options.t_values = t_values;
      options.s2_values = s2_values;
      options.rules = rules;
      options.seed = Seed{seed};
      options.lns = cfg;
      os << exp3_csv(options, run_exp3(options));
    } else if (generate_cmd->parsed()) {
      std::vector<SimpleSupport> ssfs;
      if (corpus == "exp2") {
        ssfs = exp2_corpus(make_frame({"theta1", "theta2", "theta3"}), Seed{seed}, s1, s2, s3);
      } else {
        ssfs = exp3_corpus(make_frame({"theta1", "theta2"}), s2, t, Seed{seed});
      }
      std::vector<MassFunction> ms;
      std::vector<std::string> names;
      for (std::size_t i = 0; i < ssfs.size(); ++i) {
        ms.push_back(ssfs[i].to_mass());
        names.push_back("s" + std::to_string(i + 1));
      }
      if (ms.empty()) throw Error(ErrorKind::InvalidArgument, "corpus is empty");
      os << "# " << corpus << " corpus, seed=" << seed << '\n' << print_document(to_document(ms, names));
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace belief::cli
