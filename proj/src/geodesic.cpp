#include "curves/geodesic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "curves/errors.hpp"

namespace curves {

Letter BoundaryRay::letter(std::size_t t) const {
  const long b = static_cast<long>(base);
  const long tt = static_cast<long>(t);
  if (direction > 0) return word->at_cyclic(b + tt);
  return word->at_cyclic(b - 1 - tt).inverse();
}

namespace {

void require_fatgraph(const SurfaceSpec& s, const char* op) {
  if (!s.is_fatgraph()) {
    throw AdmissibilityError(std::string(op) + " requires a fatgraph surface, got " + s.name());
  }
}

// Position of `d` counted from the cut, reading the vertex order forwards
// (state +1) or backwards (state -1).
int offset_from(const SurfaceSpec& s, int cut_pos, const Dart& d, int state) {
  const int m = 2 * s.rank();
  const int pos = s.position(d);
  const int diff = state > 0 ? pos - cut_pos : cut_pos - pos;
  return ((diff % m) + m) % m;
}

bool linked(const SurfaceSpec& s, const BoundaryRay& a1, const BoundaryRay& a2,
            const BoundaryRay& b1, const BoundaryRay& b2) {
  const int ca = compare_rays(s, a1, a2);
  const int c11 = compare_rays(s, a1, b1);
  const int c12 = compare_rays(s, a1, b2);
  const int c21 = compare_rays(s, a2, b1);
  const int c22 = compare_rays(s, a2, b2);
  if (ca == 0 || c11 == 0 || c12 == 0 || c21 == 0 || c22 == 0) {
    throw InternalError("lifts share an end; the classes have a common root");
  }
  // With lo < hi the A-ends, x lies between them iff lo < x < hi.
  const bool b1_inside = ca < 0 ? (c11 < 0 && c21 > 0) : (c21 < 0 && c11 > 0);
  const bool b2_inside = ca < 0 ? (c12 < 0 && c22 > 0) : (c22 < 0 && c12 > 0);
  return b1_inside != b2_inside;
}

// Counts pairs (A, B) of lifts, A the axis of w1 through the base vertex and
// B a lift of w2, that cross, modulo the stabiliser of A. Each pair is
// recorded at the vertex x of A where the common segment of A and B starts
// (in A's direction); x ranges over one period of A and B over the lifts of
// w2 through x.
long count_linked(const SurfaceSpec& s, const CyclicWord& w1, const CyclicWord& w2, bool same) {
  long count = 0;
  for (std::size_t i = 0; i < w1.size(); ++i) {
    const BoundaryRay a_fwd{&w1, i, 1, 1};
    const BoundaryRay a_bwd{&w1, i, -1, 1};
    for (std::size_t j = 0; j < w2.size(); ++j) {
      if (same && i == j) continue;
      const BoundaryRay b_fwd{&w2, j, 1, 1};
      const BoundaryRay b_bwd{&w2, j, -1, 1};
      const Letter back = a_bwd.letter(0);
      if (back == b_fwd.letter(0) || back == b_bwd.letter(0)) continue;
      if (linked(s, a_fwd, a_bwd, b_fwd, b_bwd)) ++count;
    }
  }
  return count;
}

}  // namespace

int compare_rays(const SurfaceSpec& s, const BoundaryRay& r1, const BoundaryRay& r2) {
  require_fatgraph(s, "compare_rays");
  if (r1.word == nullptr || r2.word == nullptr || r1.word->empty() || r2.word->empty()) {
    throw PreconditionError("compare_rays needs rays over nonempty cyclic words");
  }
  if (r1.orientation_state != r2.orientation_state) {
    throw PreconditionError("rays leaving one vertex share its orientation state");
  }
  const std::size_t n1 = r1.word->size();
  const std::size_t n2 = r2.word->size();
  const std::size_t bound = 2 * std::lcm(n1, n2) + std::max(n1, n2);

  int state = r1.orientation_state;
  int cut = -1;
  for (std::size_t t = 0; t < bound; ++t) {
    const Letter l1 = r1.letter(t);
    const Letter l2 = r2.letter(t);
    if (l1 != l2) {
      int o1 = 0;
      int o2 = 0;
      if (cut < 0) {
        const int m = 2 * s.rank();
        o1 = state > 0 ? s.position(dart_of(l1)) : (m - s.position(dart_of(l1))) % m;
        o2 = state > 0 ? s.position(dart_of(l2)) : (m - s.position(dart_of(l2))) % m;
      } else {
        o1 = offset_from(s, cut, dart_of(l1), state);
        o2 = offset_from(s, cut, dart_of(l2), state);
      }
      return o1 < o2 ? -1 : 1;
    }
    if (s.twisted(l1.gen)) state = -state;
    cut = s.position(dart_of(l1.inverse()));
  }
  return 0;
}

bool share_root(const CyclicWord& c1, const CyclicWord& c2) {
  const CyclicWord r1 = primitive_root(c1).root;
  const CyclicWord r2 = primitive_root(c2).root;
  return r1 == r2 || r1 == r2.inverse();
}

long self_intersection_geom(const SurfaceSpec& s, const CyclicWord& c) {
  require_fatgraph(s, "self_intersection_geom");
  if (c.empty()) throw PreconditionError("self_intersection_geom: contractible class");
  validate_letters(s, c.letters());
  if (primitive_root(c).exponent != 1) {
    throw PreconditionError("self_intersection_geom: " + c.str() + " is a proper power");
  }
  const long ordered = count_linked(s, c, c, true);
  if (ordered % 2 != 0) throw InternalError("odd number of ordered self-crossings");
  return ordered / 2;
}

long pair_intersection_geom(const SurfaceSpec& s, const CyclicWord& c1, const CyclicWord& c2) {
  require_fatgraph(s, "pair_intersection_geom");
  if (c1.empty() || c2.empty()) throw PreconditionError("pair_intersection_geom: contractible class");
  validate_letters(s, c1.letters());
  validate_letters(s, c2.letters());
  if (share_root(c1, c2)) {
    throw PreconditionError("pair_intersection_geom: " + c1.str() + " and " + c2.str() +
                            " are powers of a common class");
  }
  return count_linked(s, c1, c2, false);
}

}  // namespace curves
