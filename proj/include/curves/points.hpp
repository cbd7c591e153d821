#pragma once

// Per-point predicate tables for user supplied intersection points.
//
// Record grammar, one per line (blank lines and lines starting with '#' are
// skipped):
//   g=<word>[;eta=+1|-1;eta1=+1|-1;eta2=+1|-1;case=forward|backward|other]
// The ordering fields come all together or not at all.

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "curves/coset.hpp"

namespace curves {

// Throws ParseError with the message prefixed by "line <n>: ".
PointDatum parse_point_record(std::string_view text, std::size_t line_no);
std::vector<PointDatum> read_points(std::istream& in);

struct PointRow {
  std::string g;
  int nielsen_class = 0;  // 1-based label in order of first appearance
  std::optional<bool> trivial;          // self-intersection only
  bool special = false;
  bool self_cancelling = false;
  std::optional<bool> geom_special;     // self-intersection only
  std::optional<int> strict_class;      // self, all points ordered
  std::optional<StrictPredicates> strict;  // self, this point ordered
};

std::vector<PointRow> points_table(const SurfaceSpec& s, const CyclicWord& w1, const CyclicWord& w2,
                                   const std::vector<PointDatum>& points);

}  // namespace curves
