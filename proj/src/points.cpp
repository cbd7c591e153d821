#include "curves/points.hpp"

#include <numeric>

#include "curves/errors.hpp"

namespace curves {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_sign(std::string_view key, std::string_view v) {
  if (v == "+1" || v == "1") return 1;
  if (v == "-1") return -1;
  throw ParseError(std::string(key) + " must be +1 or -1, got \"" + std::string(v) + "\"");
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<int> labels(UnionFind& uf, std::size_t n) {
  std::vector<int> label(n, 0);
  std::vector<int> by_root(n, 0);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int& l = by_root[uf.find(i)];
    if (l == 0) l = ++next;
    label[i] = l;
  }
  return label;
}

}  // namespace

PointDatum parse_point_record(std::string_view text, std::size_t line_no) {
  try {
    PointDatum d;
    bool have_g = false;
    Ordering ord;
    int ordering_fields = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(';', start), text.size());
      const std::string_view field = trim(text.substr(start, end - start));
      start = end + 1;
      if (field.empty()) continue;
      const std::size_t eq = field.find('=');
      if (eq == std::string_view::npos) throw ParseError("field \"" + std::string(field) + "\" has no '='");
      const std::string_view key = trim(field.substr(0, eq));
      const std::string_view value = trim(field.substr(eq + 1));
      if (key == "g") {
        d.connecting_word = Word::parse(value);
        have_g = true;
      } else if (key == "eta") {
        ord.eta = parse_sign(key, value);
        ++ordering_fields;
      } else if (key == "eta1") {
        ord.eta1 = parse_sign(key, value);
        ++ordering_fields;
      } else if (key == "eta2") {
        ord.eta2 = parse_sign(key, value);
        ++ordering_fields;
      } else if (key == "case") {
        ord.cyclic_case = parse_cyclic_case(value);
        ++ordering_fields;
      } else {
        throw ParseError("unknown field \"" + std::string(key) + "\"");
      }
    }
    if (!have_g) throw ParseError("missing g=<word>");
    if (ordering_fields != 0 && ordering_fields != 4) {
      throw ParseError("ordering needs all of eta, eta1, eta2, case");
    }
    if (ordering_fields == 4) d.ordering = ord;
    return d;
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

std::vector<PointDatum> read_points(std::istream& in) {
  std::vector<PointDatum> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(parse_point_record(t, line_no));
  }
  return out;
}

std::vector<PointRow> points_table(const SurfaceSpec& s, const CyclicWord& w1, const CyclicWord& w2,
                                   const std::vector<PointDatum>& points) {
  const std::size_t n = points.size();
  const bool self = w1 == w2;
  bool all_ordered = self && n > 0;
  for (const PointDatum& d : points) all_ordered = all_ordered && d.ordering.has_value();

  UnionFind classes(n);
  UnionFind strict(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (nielsen_equivalent(s, w1, w2, points[i], points[j])) classes.unite(i, j);
      if (all_ordered && strict_predicates(s, w1, points[i], points[j]).equivalent) strict.unite(i, j);
    }
  }
  const std::vector<int> class_label = labels(classes, n);
  const std::vector<int> strict_label = labels(strict, n);

  std::vector<PointRow> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const PointDatum& d = points[i];
    PointRow row;
    row.g = d.connecting_word.str();
    row.nielsen_class = class_label[i];
    row.special = is_special_point(s, w1, w2, d);
    row.self_cancelling = is_self_cancelling(s, w1, w2, d);
    if (self) {
      row.trivial = is_trivial_point(s, w1, d);
      row.geom_special = is_geometrically_special(s, w1, d);
      if (d.ordering) row.strict = strict_predicates(s, w1, d, d);
      if (all_ordered) row.strict_class = strict_label[i];
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace curves
