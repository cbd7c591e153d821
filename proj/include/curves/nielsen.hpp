#pragma once

// Nielsen-type invariants of curves on surfaces: minimal intersection
// numbers MI, Nielsen numbers NI and NI*, their geometric (unordered)
// variants, Reidemeister numbers and the Wecken verdicts.

#include <optional>
#include <string>
#include <vector>

#include "curves/surface.hpp"
#include "curves/word.hpp"

namespace curves {

// Nonnegative integer or infinity.
struct ExtCount {
  long value = 0;
  bool infinite = false;

  static ExtCount finite(long v) { return {v, false}; }
  static ExtCount infinity() { return {0, true}; }
  std::string str() const { return infinite ? "infinite" : std::to_string(value); }

  friend bool operator==(const ExtCount&, const ExtCount&) = default;
};

enum class Branch {
  FinitePi1,
  Contractible,
  Rank1ClosedForm,
  NonspecialPower,
  SpecialPower,
  DistinctRoots,
  CommonRoot,
  SpecialPair,
  Rp2Pair,
};

const char* to_string(Branch b);

struct CurveClass {
  CyclicWord word;
  CyclicWord root;  // empty for contractible classes
  long k = 0;       // exponent over the root; 0 for contractible classes
  int orientation = 1;
  bool special = false;
  std::optional<long> k_prime;  // set for special classes
};

struct PairClass {
  bool common_root = false;
  bool special_pair = false;
  CyclicWord root;  // set when common_root
  long k = 0;
  long l = 0;  // negative when c2's root is the inverse of c1's
};

struct ClassInventory {
  long essential_nonspecial = 0;
  long essential_special = 0;
  long nonessential_special_lower_bound = 0;
  long geometrically_special = 0;
  bool trivial_class_present = false;
  bool defective_special = false;
  long min_points_per_special_class = 1;
};

struct SelfReport {
  long mi = 0;
  long ni = 0;
  long ni_star = 0;
  long mi_geom = 0;
  long ni_geom = 0;
  long ni_star_geom = 0;
  ExtCount ri;
  ExtCount ri_geom;
  bool wecken = true;
  bool wecken_geom = true;
  std::optional<long> k_prime;
  ClassInventory inventory;
  Branch branch = Branch::FinitePi1;
  CurveClass curve;
};

struct PairReport {
  long mi = 0;
  long ni = 0;
  long ni_star = 0;
  ExtCount ri;
  bool wecken = true;
  bool special_pair = false;
  ClassInventory inventory;
  Branch branch = Branch::FinitePi1;
  PairClass pair;
};

CurveClass classify_curve(const SurfaceSpec& s, const CyclicWord& c);
PairClass classify_pair(const SurfaceSpec& s, const CyclicWord& c1, const CyclicWord& c2);

SelfReport self_report(const SurfaceSpec& s, const CyclicWord& c);
PairReport pair_report(const SurfaceSpec& s, const CyclicWord& c1, const CyclicWord& c2);

// Representatives of the distinct double cosets <c1> g <c2> among reduced
// words g of length <= max_len, in shortlex order.
std::vector<Word> reidemeister_enumerate(const SurfaceSpec& s, const CyclicWord& c1,
                                         const CyclicWord& c2, std::size_t max_len);
inline std::vector<Word> reidemeister_enumerate(const SurfaceSpec& s, const CyclicWord& c,
                                                std::size_t max_len) {
  return reidemeister_enumerate(s, c, c, max_len);
}

}  // namespace curves
