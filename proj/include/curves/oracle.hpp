#pragma once

// Numeric cross-check of the combinatorial intersection counts: a Schottky
// group in PSL(2,R) realising an orientable ribbon-graph surface, with
// closed geodesics counted by crossings of their lifts in one tile.
//
// Generator x maps the outside of the half-disk D(x-) onto the inside of
// D(x+); the half-disks sit on the real line in the vertex order of the
// ribbon graph, so the exterior of all of them is a fundamental tile F and
// leaving F through D(x+) reads the letter x.

#include <array>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "curves/surface.hpp"
#include "curves/word.hpp"

namespace curves {

using Real = boost::multiprecision::cpp_bin_float_50;

struct Mat2 {
  Real a = 1, b = 0, c = 0, d = 1;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  Mat2 inverse() const { return {d, -b, -c, a}; }  // determinant one
  Real trace() const { return a + d; }
};

struct HalfDisk {
  Real center;
  Real radius;
};

class IsometryRep {
 public:
  int rank() const { return static_cast<int>(generators_.size()); }
  const std::vector<int>& generators() const { return generators_; }
  double lambda() const { return lambda_; }

  // Matrix of a letter or a word.
  const Mat2& matrix(const Letter& l) const;
  Mat2 matrix(std::span<const Letter> w) const;
  Mat2 matrix(const Word& w) const { return matrix(std::span<const Letter>(w.letters())); }

  // Ping-pong disk for a dart; rank one uses the annulus frame instead.
  const HalfDisk& disk(const Dart& d) const;

  // True iff z = (x, y), y > 0, lies in the base tile. Sides on D(x+) belong
  // to the tile, sides on D(x-) to its neighbour.
  bool in_base_tile(const Real& x, const Real& y) const;

  friend IsometryRep realize(const SurfaceSpec& s, double lambda);

 private:
  std::vector<int> generators_;
  double lambda_ = 2.0;
  std::array<Mat2, 26> plus_{};
  std::array<Mat2, 26> minus_{};
  std::array<std::array<HalfDisk, 2>, 26> disks_{};
  std::vector<HalfDisk> minus_disks_;
  std::vector<HalfDisk> plus_disks_;
};

// Throws AdmissibilityError for nonorientable or non-fatgraph surfaces and
// PreconditionError when lambda leaves the disks less than 1e-6 apart.
IsometryRep realize(const SurfaceSpec& s, double lambda = 2.0);

// Attracting and repelling fixed points of a hyperbolic element.
struct Axis {
  Real attracting;
  Real repelling;
};
Axis axis_of(const Mat2& m);

// Geometric self-intersection count of the closed geodesic of a primitive
// cyclic word. Throws NumericError when endpoints cannot be separated.
long count_self_numeric(const IsometryRep& rep, const CyclicWord& c);

// Crossings of the geodesics of two classes without a common root, counted
// with the multiplicity of proper powers.
long count_pair_numeric(const IsometryRep& rep, const CyclicWord& c1, const CyclicWord& c2);

// Every canonical cyclic word of length 1..max_len over the generators.
std::vector<CyclicWord> enumerate_cyclic_words(const std::vector<int>& generators, std::size_t max_len);

struct OracleCheckSummary {
  long self_checked = 0;
  long pairs_checked = 0;
  std::vector<std::string> mismatches;
};

// Compares the combinatorial counter with the numeric counts at lambda = 2
// and 3 on every primitive class up to max_len, then on `pair_samples`
// random pairs without a common root (deterministic for a given seed).
OracleCheckSummary run_oracle_check(const SurfaceSpec& s, std::size_t max_len,
                                    std::size_t pair_samples = 200, unsigned seed = 20240601);

}  // namespace curves
