#pragma once

// Intersection counts of geodesic representatives on a ribbon-graph
// surface, computed combinatorially in the universal cover.
//
// The universal cover of a one-vertex ribbon graph is the Cayley tree of
// the free group, embedded in the plane: the darts around a tree vertex h
// follow the surface's vertex order when h is orientation preserving and
// the reversed order otherwise. Lifts of closed geodesics are the axes of
// conjugates of the word; two lifts cross iff their ends interleave on the
// circle of ends of the tree.

#include <cstddef>

#include "curves/surface.hpp"
#include "curves/word.hpp"

namespace curves {

// An infinite ray from the base vertex of a lift, reading a cyclic word
// forwards (w w w ...) or backwards (W W W ...) from a rotation index.
struct BoundaryRay {
  const CyclicWord* word = nullptr;
  std::size_t base = 0;
  int direction = 1;          // +1 reads w, -1 reads w^-1
  int orientation_state = 1;  // local orientation at the base vertex

  Letter letter(std::size_t t) const;
};

// Linear order on the ends of rays leaving a common vertex, obtained by
// cutting the circle of ends next to the first dart of the vertex order.
// Returns 0 only when the two rays read the same infinite sequence.
int compare_rays(const SurfaceSpec& s, const BoundaryRay& r1, const BoundaryRay& r2);

// Number of transversal double points of the geodesic in the class of a
// primitive, nontrivial cyclic word.
long self_intersection_geom(const SurfaceSpec& s, const CyclicWord& c);

// Number of transversal intersection points of the geodesics in two classes
// whose primitive roots are not conjugate up to inversion. Proper powers are
// allowed; each crossing is counted with the multiplicity of the parameters.
long pair_intersection_geom(const SurfaceSpec& s, const CyclicWord& c1, const CyclicWord& c2);

// True iff the primitive roots agree up to inversion.
bool share_root(const CyclicWord& c1, const CyclicWord& c2);

}  // namespace curves
