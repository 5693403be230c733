#pragma once

// Line-oriented text format for collections of mass functions:
//
//   # comment
//   frame: theta1 theta2 theta3
//   bba: m1
//     {theta2}: 0.9
//     ALL: 0.1
//
// `{}` is the empty set and `ALL` the whole frame (stored expanded). Labels
// and names use [A-Za-z0-9_.-]; `ALL` is reserved.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "belief/mass.hpp"

namespace belief {

struct BbaEntry {
  std::vector<std::string> focal;
  double value = 0.0;

  friend bool operator==(const BbaEntry&, const BbaEntry&) = default;
};

struct Bba {
  std::string name;
  std::vector<BbaEntry> masses;

  friend bool operator==(const Bba&, const Bba&) = default;
};

struct BbaDocument {
  std::vector<std::string> frame;
  std::vector<Bba> bbas;

  friend bool operator==(const BbaDocument&, const BbaDocument&) = default;
};

struct DocumentLimits {
  int max_frame_size = kDefaultMaxFrameSize;
  /// Cap on bbas * 2^n, the dense storage needed to combine the document.
  std::size_t max_dense_entries = std::size_t{1} << 26;
};

/// Throws Error(ParseError) on syntax errors and the mass-function errors
/// (NegativeMass, SumNotOne, DuplicateSubset, InvalidFrame, ...) when a
/// bba breaks the sum-to-one rule.
BbaDocument parse_document(std::string_view text, const DocumentLimits& limits = {});

/// `decimals < 0` prints the shortest round-trip representation.
std::string print_document(const BbaDocument& doc, int decimals = -1);

bool is_valid_token(std::string_view token);

std::vector<MassFunction> to_masses(const BbaDocument& doc, const FramePtr& frame);
FramePtr frame_of(const BbaDocument& doc, const DocumentLimits& limits = {});

/// One bba per mass function, listing entries with positive mass in
/// SubsetIndex order.
BbaDocument to_document(std::span<const MassFunction> ms, const std::vector<std::string>& names);

}  // namespace belief
