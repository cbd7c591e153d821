#pragma once

// Double-coset problems <a> g <b> in a free group, and the Nielsen
// equivalence criteria for intersection points built on them.
//
// An intersection point is encoded by its connecting word: the class of the
// path running along the first curve to the point and back along the second.
// Two points are Nielsen equivalent iff their connecting words lie in the
// same double coset of the cyclic subgroups generated by the two curves.

#include <optional>
#include <vector>

#include "curves/surface.hpp"
#include "curves/word.hpp"

namespace curves {

enum class CyclicCase { Forward, Backward, Other };

const char* to_string(CyclicCase c);
CyclicCase parse_cyclic_case(std::string_view text);  // throws ParseError

// Relative position data for the strict (ordered) criteria. eta is the sign
// of v2 - v1 for the point itself; eta1, eta2 and cyclic_case describe its
// position relative to the point it is compared with.
struct Ordering {
  int eta = 1;
  int eta1 = 1;
  int eta2 = 1;
  CyclicCase cyclic_case = CyclicCase::Other;
};

struct PointDatum {
  Word connecting_word;
  std::optional<Ordering> ordering;
};

struct CosetSolution {
  long p = 0;
  long q = 0;

  friend bool operator==(const CosetSolution&, const CosetSolution&) = default;
};

// Default additive slack on the exponent search bounds.
inline constexpr long kCosetSlack = 2;

// Exponent bound for the subgroup generated by `a` (full word, possibly
// not cyclically reduced) when matching words of the given lengths.
long coset_bound(const Word& a, std::size_t len_target, std::size_t len_g, long slack = kCosetSlack);

// Some (p, q) with a^p * g * b^q == target, minimising |p| + |q| (ties broken
// towards smaller |p|, then smaller p). a and b must be nontrivial.
std::optional<CosetSolution> solve_double_coset(const Word& a, const Word& target, const Word& g,
                                                const Word& b, long slack = kCosetSlack);

// Every solution inside the search bounds, sorted as above.
std::vector<CosetSolution> all_double_coset_solutions(const Word& a, const Word& target,
                                                      const Word& g, const Word& b,
                                                      long slack = kCosetSlack);

bool nielsen_equivalent(const SurfaceSpec& s, const CyclicWord& w1, const CyclicWord& w2,
                        const PointDatum& d1, const PointDatum& d2);

bool is_trivial_point(const SurfaceSpec& s, const CyclicWord& w, const PointDatum& d);

bool is_special_point(const SurfaceSpec& s, const CyclicWord& w1, const CyclicWord& w2,
                      const PointDatum& d);

bool is_self_cancelling(const SurfaceSpec& s, const CyclicWord& w1, const CyclicWord& w2,
                        const PointDatum& d);

bool is_geometrically_special(const SurfaceSpec& s, const CyclicWord& w, const PointDatum& d);

struct StrictPredicates {
  bool equivalent = false;
  bool special = false;
  bool geom_special = false;
  bool self_cancelling = false;
  bool geom_self_cancelling = false;
};

// Strict criteria for two self-intersection points of the curve w. The
// equivalence test reads eta1, eta2 and cyclic_case from d2 (they describe d2
// relative to d1); the single-point criteria are evaluated on d1 with its
// own eta. Both points must carry ordering data.
StrictPredicates strict_predicates(const SurfaceSpec& s, const CyclicWord& w, const PointDatum& d1,
                                   const PointDatum& d2);

}  // namespace curves
