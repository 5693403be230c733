#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "belief/lns.hpp"

namespace belief::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitRuleFailure = 2;

struct CombineOptions {
  std::string rule = "lns";
  LnsConfig lns;
  int decimals = 5;  ///< < 0 prints round-trip precision
  bool csv = false;
  int max_frame_size = kDefaultMaxFrameSize;
};

/// Parses `text`, fuses every bba with `options.rule` and writes the result
/// to `out`. Errors go to `err`. Returns an exit code.
int combine_text(std::string_view text, const CombineOptions& options, std::ostream& out, std::ostream& err);

/// Entry point shared by the executable and the tests. args[0] is the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace belief::cli
