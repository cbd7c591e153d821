#pragma once

// Admissible surfaces: the plane, the sphere, the projective plane, and
// thickenings of one-vertex ribbon graphs (with optional twisted edges).
//
// Surface grammar:
//   plane | sphere | rp2 | annulus | moebius | pants | torus1
//   fatgraph:order=<darts>;twists=<generators>
// where <darts> lists `x+` / `x-` in the cyclic order around the vertex and
// <generators> is a comma separated (possibly empty) set of twisted edges.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curves/word.hpp"

namespace curves {

enum class SurfaceKind { Plane, Sphere, ProjectivePlane, Fatgraph };

struct Dart {
  int gen = 0;
  int side = 1;  // +1: outgoing end of the edge, -1: incoming end

  friend bool operator==(const Dart&, const Dart&) = default;
};

// Dart through which a path leaves a vertex when it reads `l`.
inline Dart dart_of(const Letter& l) { return {l.gen, l.sign}; }

class SurfaceSpec {
 public:
  SurfaceKind kind() const { return kind_; }
  bool is_fatgraph() const { return kind_ == SurfaceKind::Fatgraph; }
  const std::string& name() const { return name_; }

  // Fatgraph data; empty for the closed-form kinds.
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<Dart>& vertex_order() const { return vertex_order_; }
  std::uint32_t twist_mask() const { return twist_mask_; }
  bool twisted(int gen) const { return (twist_mask_ >> gen) & 1u; }
  bool declares(int gen) const { return gen >= 0 && gen < 26 && dart_pos_[gen][0] >= 0; }
  int rank() const { return static_cast<int>(generators_.size()); }

  // Position of a dart in vertex_order().
  int position(const Dart& d) const { return dart_pos_[d.gen][d.side > 0 ? 0 : 1]; }

  friend SurfaceSpec build_surface(std::string_view text);
  friend SurfaceSpec make_fatgraph(std::vector<Dart> order, std::uint32_t twist_mask,
                                   std::string name);

 private:
  SurfaceKind kind_ = SurfaceKind::Plane;
  std::string name_;
  std::vector<int> generators_;
  std::vector<Dart> vertex_order_;
  std::uint32_t twist_mask_ = 0;
  std::array<std::array<int, 2>, 26> dart_pos_{};
};

// Throws ParseError on grammar violations and AdmissibilityError for
// recognised but unsupported surfaces (closed surfaces with chi <= 0).
SurfaceSpec build_surface(std::string_view text);

// Validated construction from parts; throws ParseError on bad dart orders.
SurfaceSpec make_fatgraph(std::vector<Dart> order, std::uint32_t twist_mask, std::string name);

enum class Pi1Kind { Trivial, OrderTwo, InfiniteCyclic, Free };

struct SurfaceProfile {
  int euler_characteristic = 0;
  bool orientable = true;
  int boundary_components = 0;
  Pi1Kind pi1 = Pi1Kind::Trivial;
  int rank = 0;  // free rank of pi_1 (0 unless infinite)
};

SurfaceProfile profile(const SurfaceSpec& s);

// True iff pi_1 is infinite.
bool has_special_curve(const SurfaceSpec& s);

// Checks every letter is a declared generator (fatgraphs only; other kinds
// accept any letters). Throws ParseError naming the offending letter.
void validate_letters(const SurfaceSpec& s, std::span<const Letter> letters);

// Orientation character of a loop; throws ParseError on unknown generators.
int orientation_character(const SurfaceSpec& s, std::span<const Letter> letters);
inline int orientation_character(const SurfaceSpec& s, const Word& w) {
  return orientation_character(s, std::span<const Letter>(w.letters()));
}
inline int orientation_character(const SurfaceSpec& s, const CyclicWord& w) {
  return orientation_character(s, std::span<const Letter>(w.letters()));
}

const char* to_string(Pi1Kind kind);

}  // namespace curves
