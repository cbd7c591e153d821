#include "curves/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "curves/errors.hpp"
#include "curves/geodesic.hpp"

namespace curves {

namespace {

// Working precision is 50 digits; products of words of length <= 16 lose
// at most ~25 of them to cancellation.
const Real kSideTol("1e-35");
const Real kSepTol("1e-28");

struct Line {
  Real lo;
  Real hi;
};

Line line_of(const Mat2& m) {
  const Axis ax = axis_of(m);
  return ax.attracting < ax.repelling ? Line{ax.attracting, ax.repelling}
                                      : Line{ax.repelling, ax.attracting};
}

bool close(const Real& x, const Real& y) {
  using boost::multiprecision::abs;
  return abs(x - y) <= kSepTol * (1 + abs(x) + abs(y));
}

// Axes of the cyclic rotations of c, i.e. the lifts of its geodesic that
// pass through the base tile.
std::vector<Line> rotation_lines(const IsometryRep& rep, const CyclicWord& c) {
  std::vector<Line> out;
  out.reserve(c.size());
  std::vector<Letter> rot(c.letters().begin(), c.letters().end());
  for (std::size_t t = 0; t < c.size(); ++t) {
    out.push_back(line_of(rep.matrix(rot)));
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  }
  return out;
}

// 1 if the lines cross inside the base tile, 0 otherwise.
int crossing_in_tile(const IsometryRep& rep, const Line& u, const Line& v) {
  const bool lo_eq = close(u.lo, v.lo);
  const bool hi_eq = close(u.hi, v.hi);
  if (lo_eq && hi_eq) throw PreconditionError("two lifts coincide; the classes share a root");
  if (lo_eq || hi_eq || close(u.lo, v.hi) || close(u.hi, v.lo)) {
    throw NumericError("geodesic endpoints closer than 1e-28; retry with a larger lambda");
  }
  const bool linked = (u.lo < v.lo && v.lo < u.hi && u.hi < v.hi) ||
                      (v.lo < u.lo && u.lo < v.hi && v.hi < u.hi);
  if (!linked) return 0;
  const Real m1 = (u.lo + u.hi) / 2;
  const Real r1 = (u.hi - u.lo) / 2;
  const Real m2 = (v.lo + v.hi) / 2;
  const Real r2 = (v.hi - v.lo) / 2;
  const Real x = (r1 * r1 - r2 * r2 + m2 * m2 - m1 * m1) / (2 * (m2 - m1));
  const Real y2 = r1 * r1 - (x - m1) * (x - m1);
  if (y2 <= 0) throw NumericError("linked geodesics without a crossing point");
  return rep.in_base_tile(x, boost::multiprecision::sqrt(y2)) ? 1 : 0;
}

void check_word(const IsometryRep& rep, const CyclicWord& c) {
  if (c.empty()) throw PreconditionError("oracle: contractible class");
  for (const Letter& l : c.letters()) (void)rep.matrix(l);
}

}  // namespace

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

const Mat2& IsometryRep::matrix(const Letter& l) const {
  if (std::find(generators_.begin(), generators_.end(), l.gen) == generators_.end()) {
    throw PreconditionError(std::string("letter '") + l.to_char() + "' has no matrix in this representation");
  }
  return l.sign > 0 ? plus_[l.gen] : minus_[l.gen];
}

Mat2 IsometryRep::matrix(std::span<const Letter> w) const {
  Mat2 m;
  for (const Letter& l : w) m = m * matrix(l);
  return m;
}

const HalfDisk& IsometryRep::disk(const Dart& d) const { return disks_[d.gen][d.side > 0 ? 0 : 1]; }

bool IsometryRep::in_base_tile(const Real& x, const Real& y) const {
  for (const HalfDisk& h : minus_disks_) {
    const Real dist2 = (x - h.center) * (x - h.center) + y * y;
    if (dist2 <= h.radius * h.radius + kSideTol) return false;
  }
  for (const HalfDisk& h : plus_disks_) {
    const Real dist2 = (x - h.center) * (x - h.center) + y * y;
    if (dist2 < h.radius * h.radius - kSideTol) return false;
  }
  return true;
}

IsometryRep realize(const SurfaceSpec& s, double lambda) {
  if (!s.is_fatgraph()) throw AdmissibilityError("oracle requires orientable fatgraph surface, got " + s.name());
  if (s.twist_mask() != 0) throw AdmissibilityError("oracle requires orientable surface, got " + s.name());

  IsometryRep rep;
  rep.generators_ = s.generators();
  rep.lambda_ = lambda;
  const Real lam(lambda);

  if (s.rank() == 1) {
    // z -> lambda^2 z maps |z| > 1 onto |z| > lambda^2.
    if (lambda * lambda - 1.0 < 1e-6) throw PreconditionError("lambda too close to 1");
    const int g = rep.generators_.front();
    rep.plus_[g] = {lam, 0, 0, 1 / lam};
    rep.minus_[g] = rep.plus_[g].inverse();
    rep.disks_[g] = {HalfDisk{0, lam * lam}, HalfDisk{0, 1}};
    return rep;
  }

  if (2.0 * lambda - 2.0 < 1e-6) throw PreconditionError("lambda too close to 1; disks overlap");
  for (int g : rep.generators_) {
    const Real cp = 2 * lam * s.position({g, 1});
    const Real cm = 2 * lam * s.position({g, -1});
    rep.plus_[g] = {cp, -1 - cp * cm, 1, -cm};
    rep.minus_[g] = rep.plus_[g].inverse();
    rep.disks_[g] = {HalfDisk{cp, 1}, HalfDisk{cm, 1}};
    rep.plus_disks_.push_back(rep.disks_[g][0]);
    rep.minus_disks_.push_back(rep.disks_[g][1]);
  }
  return rep;
}

Axis axis_of(const Mat2& m) {
  using boost::multiprecision::abs;
  using boost::multiprecision::sqrt;
  const Real tr = m.trace();
  const Real disc = tr * tr - 4;
  if (disc <= 0) throw NumericError("element is not hyperbolic");
  if (m.c == 0) {
    // Upper triangular: fixed points infinity and b/(d-a); not used for rank >= 2.
    throw NumericError("axis through infinity");
  }
  // Stable roots of c z^2 + (d - a) z - b = 0.
  const Real amd = m.a - m.d;
  const Real root = sqrt(disc);
  const Real z1 = (amd + (amd >= 0 ? root : -root)) / (2 * m.c);
  const Real z2 = -m.b / (m.c * z1);
  const bool z1_attracting = abs(m.c * z1 + m.d) > 1;
  return z1_attracting ? Axis{z1, z2} : Axis{z2, z1};
}

long count_self_numeric(const IsometryRep& rep, const CyclicWord& c) {
  check_word(rep, c);
  if (primitive_root(c).exponent != 1) throw PreconditionError("oracle: " + c.str() + " is a proper power");
  if (c.size() == 1) return 0;
  const std::vector<Line> lines = rotation_lines(rep, c);
  long count = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) count += crossing_in_tile(rep, lines[i], lines[j]);
  }
  return count;
}

long count_pair_numeric(const IsometryRep& rep, const CyclicWord& c1, const CyclicWord& c2) {
  check_word(rep, c1);
  check_word(rep, c2);
  const CyclicWord r1 = primitive_root(c1).root;
  const CyclicWord r2 = primitive_root(c2).root;
  if (r1 == r2 || r1 == r2.inverse()) throw PreconditionError("oracle: classes share a root");
  const std::vector<Line> l1 = rotation_lines(rep, c1);
  const std::vector<Line> l2 = rotation_lines(rep, c2);
  long count = 0;
  for (const Line& u : l1) {
    for (const Line& v : l2) count += crossing_in_tile(rep, u, v);
  }
  return count;
}

std::vector<CyclicWord> enumerate_cyclic_words(const std::vector<int>& generators, std::size_t max_len) {
  std::vector<Letter> alphabet;
  for (int g : generators) {
    alphabet.push_back({g, 1});
    alphabet.push_back({g, -1});
  }
  std::set<CyclicWord> seen;
  std::vector<Letter> cur;
  std::function<void()> extend = [&] {
    if (!cur.empty() && cur.front() != cur.back().inverse()) {
      seen.insert(CyclicWord::from_cyclically_reduced(cur));
    }
    if (cur.size() == max_len) return;
    for (const Letter& x : alphabet) {
      if (!cur.empty() && cur.back() == x.inverse()) continue;
      cur.push_back(x);
      extend();
      cur.pop_back();
    }
  };
  extend();
  return {seen.begin(), seen.end()};
}

OracleCheckSummary run_oracle_check(const SurfaceSpec& s, std::size_t max_len,
                                    std::size_t pair_samples, unsigned seed) {
  const IsometryRep rep2 = realize(s, 2.0);
  const IsometryRep rep3 = realize(s, 3.0);
  OracleCheckSummary out;

  std::set<CyclicWord> root_set;
  for (const CyclicWord& c : enumerate_cyclic_words(s.generators(), max_len)) {
    root_set.insert(primitive_root(c).root);
  }
  const std::vector<CyclicWord> roots(root_set.begin(), root_set.end());

  auto record = [&](const std::string& what, long comb, long n2, long n3) {
    if (comb != n2 || comb != n3) {
      out.mismatches.push_back(what + ": combinatorial=" + std::to_string(comb) + " numeric(2)=" +
                               std::to_string(n2) + " numeric(3)=" + std::to_string(n3));
    }
  };

  for (const CyclicWord& c : roots) {
    ++out.self_checked;
    try {
      record("self " + c.str(), self_intersection_geom(s, c), count_self_numeric(rep2, c),
             count_self_numeric(rep3, c));
    } catch (const NumericError& e) {
      out.mismatches.push_back("self " + c.str() + ": " + e.what());
    }
  }

  if (s.rank() < 2 || roots.size() < 2) return out;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
  std::uniform_int_distribution<long> power(1, 2);
  while (static_cast<std::size_t>(out.pairs_checked) < pair_samples) {
    const CyclicWord& r1 = roots[pick(rng)];
    const CyclicWord& r2 = roots[pick(rng)];
    if (r1 == r2 || r1 == r2.inverse()) continue;
    const CyclicWord c1 = r1.pow(power(rng));
    const CyclicWord c2 = r2.pow(power(rng));
    ++out.pairs_checked;
    try {
      record("pair " + c1.str() + " " + c2.str(), pair_intersection_geom(s, c1, c2),
             count_pair_numeric(rep2, c1, c2), count_pair_numeric(rep3, c1, c2));
    } catch (const NumericError& e) {
      out.mismatches.push_back("pair " + c1.str() + " " + c2.str() + ": " + e.what());
    }
  }
  return out;
}

}  // namespace curves
