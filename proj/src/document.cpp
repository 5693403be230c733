#include "belief/document.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

namespace belief {

namespace {

constexpr std::string_view kWholeFrame = "ALL";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string format_double(double x, int decimals) {
  char buf[64];
  const auto res = decimals < 0 ? std::to_chars(buf, buf + sizeof buf, x)
                                : std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, decimals);
  return std::string(buf, res.ptr);
}

struct Parser {
  const DocumentLimits& limits;
  BbaDocument doc;
  bool have_frame = false;
  std::set<std::string> bba_names;
  std::set<std::vector<std::string>> seen_focal;

  void frame_line(std::size_t line, std::string_view rest) {
    if (have_frame) parse_fail(line, "frame declared twice");
    std::set<std::string_view> labels;
    std::size_t pos = 0;
    while (pos < rest.size()) {
      const auto start = rest.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      const auto end = std::min(rest.find_first_of(" \t", start), rest.size());
      const std::string_view label = rest.substr(start, end - start);
      if (!is_valid_token(label) || label == kWholeFrame) parse_fail(line, "invalid outcome label '" + std::string(label) + "'");
      if (!labels.insert(label).second) parse_fail(line, "duplicate outcome label '" + std::string(label) + "'");
      doc.frame.emplace_back(label);
      pos = end;
    }
    if (doc.frame.empty()) parse_fail(line, "frame has no outcomes");
    if (static_cast<int>(doc.frame.size()) > std::min(limits.max_frame_size, kHardMaxFrameSize)) {
      throw Error(ErrorKind::InvalidFrame, "frame has " + std::to_string(doc.frame.size()) + " outcomes, limit is " +
                                               std::to_string(limits.max_frame_size));
    }
    have_frame = true;
  }

  void bba_line(std::size_t line, std::string_view name) {
    if (!have_frame) parse_fail(line, "bba before frame");
    if (!is_valid_token(name)) parse_fail(line, "invalid bba name '" + std::string(name) + "'");
    if (!bba_names.insert(std::string(name)).second) parse_fail(line, "duplicate bba name '" + std::string(name) + "'");
    finish_bba();
    const std::size_t dense = std::size_t{1} << doc.frame.size();
    if ((doc.bbas.size() + 1) * dense > limits.max_dense_entries) {
      throw Error(ErrorKind::InvalidArgument, "document too large to combine densely");
    }
    doc.bbas.push_back({std::string(name), {}});
    seen_focal.clear();
  }

  void mass_line(std::size_t line, std::string_view focal_text, std::string_view value_text) {
    if (doc.bbas.empty()) parse_fail(line, "mass entry outside a bba");
    BbaEntry entry;
    if (focal_text == kWholeFrame) {
      entry.focal = doc.frame;
    } else {
      if (focal_text.size() < 2 || focal_text.front() != '{' || focal_text.back() != '}') {
        parse_fail(line, "focal set must be {..} or ALL");
      }
      const std::string_view inner = trim(focal_text.substr(1, focal_text.size() - 2));
      if (!inner.empty()) {
        std::set<std::string_view> members;
        for (std::string_view part : split(inner, ',')) {
          part = trim(part);
          if (std::find(doc.frame.begin(), doc.frame.end(), part) == doc.frame.end()) {
            parse_fail(line, "unknown outcome '" + std::string(part) + "'");
          }
          if (!members.insert(part).second) parse_fail(line, "outcome listed twice in focal set");
          entry.focal.emplace_back(part);
        }
      }
    }
    const char* first = value_text.data();
    const char* last = first + value_text.size();
    const auto res = std::from_chars(first, last, entry.value);
    if (res.ec != std::errc() || res.ptr != last || !std::isfinite(entry.value)) {
      parse_fail(line, "invalid mass value '" + std::string(value_text) + "'");
    }
    if (entry.value < 0.0) throw Error(ErrorKind::NegativeMass, "line " + std::to_string(line));
    std::vector<std::string> key = entry.focal;
    std::sort(key.begin(), key.end());
    if (!seen_focal.insert(std::move(key)).second) {
      throw Error(ErrorKind::DuplicateSubset, "line " + std::to_string(line));
    }
    doc.bbas.back().masses.push_back(std::move(entry));
  }

  void finish_bba() const {
    if (doc.bbas.empty()) return;
    const Bba& bba = doc.bbas.back();
    double total = 0.0;
    for (const auto& e : bba.masses) total += e.value;
    if (std::abs(total - 1.0) > kMassTolerance) {
      throw Error(ErrorKind::SumNotOne, "bba '" + bba.name + "' sums to " + format_double(total, -1));
    }
  }
};

}  // namespace

bool is_valid_token(std::string_view token) {
  if (token.empty() || token.size() > 256) return false;
  for (char c : token) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                    c == '.' || c == '-';
    if (!ok) return false;
  }
  return true;
}

BbaDocument parse_document(std::string_view text, const DocumentLimits& limits) {
  Parser p{limits, {}, false, {}, {}};
  std::size_t line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.rfind(':');
    if (colon == std::string_view::npos) parse_fail(line_no, "expected 'key: value'");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view rest = trim(line.substr(colon + 1));
    if (key == "frame") {
      p.frame_line(line_no, rest);
    } else if (key == "bba") {
      p.bba_line(line_no, rest);
    } else {
      if (!p.have_frame) parse_fail(line_no, "document must start with a frame line");
      p.mass_line(line_no, key, rest);
    }
  }
  if (!p.have_frame) parse_fail(line_no, "missing frame line");
  p.finish_bba();
  return std::move(p.doc);
}

std::string print_document(const BbaDocument& doc, int decimals) {
  std::string out = "frame:";
  for (const auto& label : doc.frame) out += " " + label;
  out += '\n';
  for (const auto& bba : doc.bbas) {
    out += "bba: " + bba.name + '\n';
    for (const auto& e : bba.masses) {
      out += "  {";
      for (std::size_t i = 0; i < e.focal.size(); ++i) {
        if (i > 0) out += ',';
        out += e.focal[i];
      }
      out += "}: " + format_double(e.value, decimals) + '\n';
    }
  }
  return out;
}

FramePtr frame_of(const BbaDocument& doc, const DocumentLimits& limits) {
  return make_frame(doc.frame, limits.max_frame_size);
}

std::vector<MassFunction> to_masses(const BbaDocument& doc, const FramePtr& frame) {
  std::vector<MassFunction> out;
  out.reserve(doc.bbas.size());
  for (const auto& bba : doc.bbas) {
    std::vector<std::pair<SubsetIndex, double>> assignments;
    assignments.reserve(bba.masses.size());
    for (const auto& e : bba.masses) assignments.emplace_back(frame->subset(e.focal), e.value);
    out.push_back(make_mass(frame, assignments));
  }
  return out;
}

BbaDocument to_document(std::span<const MassFunction> ms, const std::vector<std::string>& names) {
  if (ms.empty()) throw Error(ErrorKind::EmptyInput, "no mass functions");
  if (names.size() != ms.size()) throw Error(ErrorKind::InvalidArgument, "one name per mass function required");
  BbaDocument doc;
  doc.frame = ms.front().frame().outcomes();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Bba bba{names[i], {}};
    const auto& m = ms[i];
    for (SubsetIndex s : m.focal_sets()) bba.masses.push_back({m.frame().labels_of(s), m[s]});
    doc.bbas.push_back(std::move(bba));
  }
  return doc;
}

}  // namespace belief
