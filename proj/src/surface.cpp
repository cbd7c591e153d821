#include "curves/surface.hpp"

#include <algorithm>
#include <sstream>

#include "curves/errors.hpp"

namespace curves {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Dart parse_dart(std::string_view tok) {
  if (tok.size() != 2 || tok[0] < 'a' || tok[0] > 'z' || (tok[1] != '+' && tok[1] != '-')) {
    throw ParseError("malformed dart \"" + std::string(tok) + "\" (expected e.g. a+ or a-)");
  }
  return {tok[0] - 'a', tok[1] == '+' ? 1 : -1};
}

SurfaceSpec parse_fatgraph(std::string_view body, std::string name) {
  std::string_view order_text;
  std::string_view twist_text;
  bool seen_order = false;
  for (std::string_view field : split(body, ';')) {
    if (field.starts_with("order=")) {
      order_text = field.substr(6);
      seen_order = true;
    } else if (field.starts_with("twists=")) {
      twist_text = field.substr(7);
    } else {
      throw ParseError("unknown fatgraph field \"" + std::string(field) + "\"");
    }
  }
  if (!seen_order || order_text.empty()) throw ParseError("fatgraph needs a nonempty order=<darts>");

  std::vector<Dart> order;
  for (std::string_view tok : split(order_text, ',')) order.push_back(parse_dart(tok));

  std::uint32_t mask = 0;
  if (!twist_text.empty()) {
    for (std::string_view tok : split(twist_text, ',')) {
      if (tok.size() != 1 || tok[0] < 'a' || tok[0] > 'z') {
        throw ParseError("malformed twist generator \"" + std::string(tok) + "\"");
      }
      mask |= 1u << (tok[0] - 'a');
    }
  }
  return make_fatgraph(std::move(order), mask, std::move(name));
}

}  // namespace

SurfaceSpec make_fatgraph(std::vector<Dart> order, std::uint32_t twist_mask, std::string name) {
  SurfaceSpec s;
  s.kind_ = SurfaceKind::Fatgraph;
  s.name_ = std::move(name);
  for (auto& row : s.dart_pos_) row = {-1, -1};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Dart& d = order[i];
    int& slot = s.dart_pos_[d.gen][d.side > 0 ? 0 : 1];
    if (slot >= 0) {
      throw ParseError(std::string("duplicate dart ") + static_cast<char>('a' + d.gen) +
                       (d.side > 0 ? "+" : "-"));
    }
    slot = static_cast<int>(i);
  }
  for (int g = 0; g < 26; ++g) {
    const bool plus = s.dart_pos_[g][0] >= 0;
    const bool minus = s.dart_pos_[g][1] >= 0;
    if (plus != minus) {
      throw ParseError(std::string("missing dart ") + static_cast<char>('a' + g) + (plus ? "-" : "+"));
    }
    if (plus) s.generators_.push_back(g);
  }
  if (s.generators_.empty()) throw ParseError("fatgraph needs at least one edge");
  for (int g = 0; g < 26; ++g) {
    if (((twist_mask >> g) & 1u) && s.dart_pos_[g][0] < 0) {
      throw ParseError(std::string("twist on undeclared generator ") + static_cast<char>('a' + g));
    }
  }
  s.vertex_order_ = std::move(order);
  s.twist_mask_ = twist_mask;
  return s;
}

SurfaceSpec build_surface(std::string_view text) {
  if (text.empty()) throw ParseError("empty surface description");
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n') throw ParseError("whitespace in surface description");
  }

  auto simple = [&](SurfaceKind kind) {
    SurfaceSpec s;
    s.kind_ = kind;
    s.name_ = std::string(text);
    for (auto& row : s.dart_pos_) row = {-1, -1};
    return s;
  };

  if (text == "plane") return simple(SurfaceKind::Plane);
  if (text == "sphere") return simple(SurfaceKind::Sphere);
  if (text == "rp2") return simple(SurfaceKind::ProjectivePlane);
  if (text == "annulus") return make_fatgraph({{0, 1}, {0, -1}}, 0, "annulus");
  if (text == "moebius") return make_fatgraph({{0, 1}, {0, -1}}, 1u, "moebius");
  if (text == "pants") return make_fatgraph({{0, 1}, {0, -1}, {1, 1}, {1, -1}}, 0, "pants");
  if (text == "torus1") return make_fatgraph({{0, 1}, {1, 1}, {0, -1}, {1, -1}}, 0, "torus1");
  if (text.starts_with("fatgraph:")) return parse_fatgraph(text.substr(9), std::string(text));

  if (text == "torus" || text == "klein" || text == "kleinbottle" || text.starts_with("closed")) {
    throw AdmissibilityError("closed surface \"" + std::string(text) +
                             "\" has non-free fundamental group; not supported");
  }
  if (text.find("twists=") != std::string_view::npos) {
    throw ParseError("twist flags are only allowed on fatgraph surfaces");
  }
  throw ParseError("unknown surface \"" + std::string(text) + "\"");
}

SurfaceProfile profile(const SurfaceSpec& s) {
  SurfaceProfile p;
  switch (s.kind()) {
    case SurfaceKind::Plane:
      p = {1, true, 0, Pi1Kind::Trivial, 0};
      return p;
    case SurfaceKind::Sphere:
      p = {2, true, 0, Pi1Kind::Trivial, 0};
      return p;
    case SurfaceKind::ProjectivePlane:
      p = {1, false, 0, Pi1Kind::OrderTwo, 0};
      return p;
    case SurfaceKind::Fatgraph:
      break;
  }

  const int g = s.rank();
  const int darts = 2 * g;
  p.euler_characteristic = 1 - g;
  p.orientable = s.twist_mask() == 0;
  p.rank = g;
  p.pi1 = g == 1 ? Pi1Kind::InfiniteCyclic : Pi1Kind::Free;

  // Boundary tracing over (dart, direction) states. Each boundary circle
  // is traced once in each direction.
  const auto& order = s.vertex_order();
  std::vector<char> seen(static_cast<std::size_t>(2 * darts), 0);
  auto state_index = [&](int pos, int dir) { return static_cast<std::size_t>(2 * pos + (dir > 0 ? 0 : 1)); };
  int orbits = 0;
  for (int start = 0; start < darts; ++start) {
    for (int start_dir : {1, -1}) {
      if (seen[state_index(start, start_dir)]) continue;
      ++orbits;
      int pos = start;
      int dir = start_dir;
      while (!seen[state_index(pos, dir)]) {
        seen[state_index(pos, dir)] = 1;
        const int next = ((pos + dir) % darts + darts) % darts;
        const Dart d = order[static_cast<std::size_t>(next)];
        pos = s.position({d.gen, -d.side});
        if (s.twisted(d.gen)) dir = -dir;
      }
    }
  }
  p.boundary_components = orbits / 2;
  return p;
}

bool has_special_curve(const SurfaceSpec& s) { return s.is_fatgraph(); }

void validate_letters(const SurfaceSpec& s, std::span<const Letter> letters) {
  if (!s.is_fatgraph()) return;
  for (const Letter& l : letters) {
    if (!s.declares(l.gen)) {
      throw ParseError(std::string("letter '") + l.to_char() + "' is not a generator of surface " +
                       s.name());
    }
  }
}

int orientation_character(const SurfaceSpec& s, std::span<const Letter> letters) {
  switch (s.kind()) {
    case SurfaceKind::Plane:
    case SurfaceKind::Sphere:
      return 1;
    case SurfaceKind::ProjectivePlane:
      return letters.size() % 2 == 0 ? 1 : -1;
    case SurfaceKind::Fatgraph:
      break;
  }
  validate_letters(s, letters);
  return orientation_character(s.twist_mask(), letters);
}

const char* to_string(Pi1Kind kind) {
  switch (kind) {
    case Pi1Kind::Trivial:
      return "trivial";
    case Pi1Kind::OrderTwo:
      return "order-two";
    case Pi1Kind::InfiniteCyclic:
      return "infinite-cyclic";
    case Pi1Kind::Free:
      return "free";
  }
  return "?";
}

}  // namespace curves
