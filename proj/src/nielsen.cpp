#include "curves/nielsen.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "curves/coset.hpp"
#include "curves/errors.hpp"
#include "curves/geodesic.hpp"

namespace curves {

const char* to_string(Branch b) {
  switch (b) {
    case Branch::FinitePi1:
      return "finite-pi1";
    case Branch::Contractible:
      return "contractible";
    case Branch::Rank1ClosedForm:
      return "rank1-closed-form";
    case Branch::NonspecialPower:
      return "thm5a";
    case Branch::SpecialPower:
      return "thm5b";
    case Branch::DistinctRoots:
      return "thm6a-no-common-root";
    case Branch::CommonRoot:
      return "thm6a-common-root";
    case Branch::SpecialPair:
      return "thm6b";
    case Branch::Rp2Pair:
      return "rp2-pair";
  }
  return "?";
}

namespace {

long delta(long k) { return k % 2 == 0 ? 1 : 0; }

// Nontrivial on rp2 iff the word has odd length.
bool rp2_nontrivial(const CyclicWord& c) { return c.size() % 2 != 0; }

bool is_contractible(const SurfaceSpec& s, const CyclicWord& c) {
  switch (s.kind()) {
    case SurfaceKind::Plane:
    case SurfaceKind::Sphere:
      return true;
    case SurfaceKind::ProjectivePlane:
      return !rp2_nontrivial(c);
    case SurfaceKind::Fatgraph:
      break;
  }
  return c.empty();
}

void finalize(SelfReport& r) {
  r.wecken = r.mi == r.ni;
  r.wecken_geom = r.mi_geom == r.ni_geom;
}

SelfReport general_self(const SurfaceSpec& s, const CurveClass& cc) {
  SelfReport r;
  r.curve = cc;
  const long k = cc.k;
  const long n = self_intersection_geom(s, cc.root);
  const long ni0 = 2 * n;
  ClassInventory& inv = r.inventory;
  if (!cc.special) {
    r.branch = Branch::NonspecialPower;
    r.mi = k * k * ni0 + k - 1;
    r.ni = r.mi;
    r.ni_star = r.mi;
    r.mi_geom = k * k * n + (k - 1) / 2;
    r.ni_geom = r.mi_geom;
    inv.essential_special = k - 1;
    inv.essential_nonspecial = r.ni - inv.essential_special;
    inv.defective_special = k > 1;
  } else {
    r.branch = Branch::SpecialPower;
    const long kp = *cc.k_prime;
    r.k_prime = kp;
    r.mi = k * k * ni0 + 2 * (kp - 1);
    r.ni = k * k * ni0;
    r.ni_star = r.ni;
    r.mi_geom = k * k * n + kp - 1;
    r.ni_geom = k * k * n + delta(kp);
    inv.essential_nonspecial = r.ni;
    inv.nonessential_special_lower_bound = kp - 1;
    inv.geometrically_special = delta(kp);
    inv.min_points_per_special_class = 2;
  }
  r.ni_star_geom = r.ni_geom;
  r.ri = s.rank() == 1 ? ExtCount::finite(k) : ExtCount::infinity();
  r.ri_geom = s.rank() == 1 ? ExtCount::finite(k / 2 + 1) : ExtCount::infinity();
  finalize(r);
  return r;
}

void require_same(long got, long want, const char* field) {
  if (got != want) {
    throw InternalError(std::string("rank-1 closed form disagrees with general formula on ") + field);
  }
}

}  // namespace

CurveClass classify_curve(const SurfaceSpec& s, const CyclicWord& c) {
  validate_letters(s, c.letters());
  CurveClass cc;
  cc.word = c;
  if (s.kind() == SurfaceKind::ProjectivePlane) {
    if (rp2_nontrivial(c)) {
      cc.root = CyclicWord::parse("a");
      cc.k = 1;
      cc.orientation = -1;
    }
    return cc;
  }
  if (is_contractible(s, c)) return cc;
  const PrimitiveDecomposition pd = primitive_root(c);
  cc.root = pd.root;
  cc.k = pd.exponent;
  cc.orientation = orientation_character(s, c);
  cc.special = cc.orientation > 0 && cc.k > 1;
  if (cc.special) {
    const bool root_preserves = orientation_character(s, cc.root) > 0;
    cc.k_prime = root_preserves ? cc.k : cc.k / 2;
  }
  return cc;
}

PairClass classify_pair(const SurfaceSpec& s, const CyclicWord& c1, const CyclicWord& c2) {
  const CurveClass a = classify_curve(s, c1);
  const CurveClass b = classify_curve(s, c2);
  PairClass pc;
  if (s.kind() == SurfaceKind::ProjectivePlane) {
    pc.special_pair = a.k != 0 && b.k != 0;
    pc.common_root = pc.special_pair;
    pc.root = a.root;
    pc.k = a.k;
    pc.l = b.k;
    return pc;
  }
  if (a.k == 0 || b.k == 0) return pc;
  pc.k = a.k;
  if (a.root == b.root) {
    pc.common_root = true;
    pc.l = b.k;
  } else if (a.root == b.root.inverse()) {
    pc.common_root = true;
    pc.l = -b.k;
  } else {
    pc.l = b.k;
    return pc;
  }
  pc.root = a.root;
  pc.special_pair = a.orientation < 0 && b.orientation < 0;
  return pc;
}

SelfReport self_report(const SurfaceSpec& s, const CyclicWord& c) {
  const CurveClass cc = classify_curve(s, c);
  SelfReport r;
  r.curve = cc;
  if (!s.is_fatgraph()) {
    r.branch = Branch::FinitePi1;
    const bool rp2_loop = s.kind() == SurfaceKind::ProjectivePlane && cc.k != 0;
    const long ri = s.kind() == SurfaceKind::ProjectivePlane && !rp2_loop ? 2 : 1;
    r.ri = ExtCount::finite(ri);
    r.ri_geom = ExtCount::finite(ri);
    finalize(r);
    return r;
  }
  if (cc.k == 0) {
    r.branch = Branch::Contractible;
    r.ri = ExtCount::infinity();
    r.ri_geom = ExtCount::infinity();
    finalize(r);
    return r;
  }

  r = general_self(s, cc);
  if (s.rank() != 1) return r;

  // Rank one: the root is the core curve; it preserves orientation on the
  // annulus and reverses it on the Moebius band.
  const long k = cc.k;
  const bool cylinder = orientation_character(s, cc.root) > 0;
  long mi = 0;
  long ni = 0;
  long mi_geom = 0;
  long ni_geom = 0;
  if (cylinder) {
    mi = 2 * k - 2;
    ni = 0;
    mi_geom = k - 1;
    ni_geom = delta(k);
  } else if (k % 2 == 0) {
    mi = k - 2;
    ni = 0;
    mi_geom = (k - 1) / 2;
    ni_geom = delta(k / 2);
  } else {
    mi = k - 1;
    ni = k - 1;
    mi_geom = (k - 1) / 2;
    ni_geom = (k - 1) / 2;
  }
  require_same(r.mi, mi, "MI");
  require_same(r.ni, ni, "NI");
  require_same(r.mi_geom, mi_geom, "MI_geom");
  require_same(r.ni_geom, ni_geom, "NI_geom");
  r.ri = ExtCount::finite(k);
  r.ri_geom = ExtCount::finite(k / 2 + 1);
  r.branch = Branch::Rank1ClosedForm;
  return r;
}

PairReport pair_report(const SurfaceSpec& s, const CyclicWord& c1, const CyclicWord& c2) {
  const PairClass pc = classify_pair(s, c1, c2);
  PairReport r;
  r.pair = pc;
  r.special_pair = pc.special_pair;

  if (!s.is_fatgraph()) {
    if (s.kind() == SurfaceKind::ProjectivePlane) {
      const CurveClass a = classify_curve(s, c1);
      const CurveClass b = classify_curve(s, c2);
      if (pc.special_pair) {
        r.branch = Branch::Rp2Pair;
        r.mi = r.ni = r.ni_star = 1;
        r.ri = ExtCount::finite(1);
        r.inventory.essential_special = 1;
        r.inventory.defective_special = true;
      } else {
        r.branch = Branch::FinitePi1;
        // Double cosets of the subgroups generated by the two classes in Z/2.
        r.ri = ExtCount::finite(a.k == 0 && b.k == 0 ? 2 : 1);
      }
    } else {
      r.branch = Branch::FinitePi1;
      r.ri = ExtCount::finite(1);
    }
    r.wecken = r.mi == r.ni;
    return r;
  }

  const CurveClass a = classify_curve(s, c1);
  const CurveClass b = classify_curve(s, c2);
  if (a.k == 0 || b.k == 0) {
    r.branch = Branch::Contractible;
    r.ri = ExtCount::infinity();
    r.wecken = true;
    return r;
  }

  if (!pc.common_root) {
    r.branch = Branch::DistinctRoots;
    r.mi = pair_intersection_geom(s, c1, c2);
    r.ni = r.ni_star = r.mi;
    r.inventory.essential_nonspecial = r.ni;
  } else {
    const long k = std::labs(pc.k);
    const long l = std::labs(pc.l);
    const long base = k * l * 2 * self_intersection_geom(s, pc.root);
    if (!pc.special_pair) {
      r.branch = Branch::CommonRoot;
      r.mi = r.ni = r.ni_star = base;
      r.inventory.essential_nonspecial = base;
    } else {
      r.branch = Branch::SpecialPair;
      const long g = std::gcd(k, l);
      r.mi = base + std::min(k, l);
      r.ni = r.ni_star = base + g;
      r.inventory.essential_nonspecial = base;
      r.inventory.essential_special = g;
      r.inventory.defective_special = true;
      r.inventory.min_points_per_special_class = std::min(k, l) / g;
    }
  }

  if (s.rank() == 1) {
    // Exponent sums over the single generator.
    auto expsum = [](const CyclicWord& c) {
      long e = 0;
      for (const Letter& x : c.letters()) e += x.sign;
      return std::labs(e);
    };
    r.ri = ExtCount::finite(std::gcd(expsum(c1), expsum(c2)));
  } else {
    r.ri = ExtCount::infinity();
  }
  r.wecken = r.mi == r.ni;
  return r;
}

std::vector<Word> reidemeister_enumerate(const SurfaceSpec& s, const CyclicWord& c1,
                                         const CyclicWord& c2, std::size_t max_len) {
  if (!s.is_fatgraph()) {
    throw AdmissibilityError("Reidemeister enumeration needs a fatgraph surface, got " + s.name());
  }
  if (c1.empty() || c2.empty()) throw PreconditionError("Reidemeister enumeration of a contractible class");
  validate_letters(s, c1.letters());
  validate_letters(s, c2.letters());

  std::vector<Letter> alphabet;
  for (int g : s.generators()) {
    alphabet.push_back({g, 1});
    alphabet.push_back({g, -1});
  }

  // Reduced words in shortlex order, one length layer at a time.
  std::vector<Word> words{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (const Letter& x : alphabet) {
        if (!w.empty() && w[w.size() - 1] == x.inverse()) continue;
        std::vector<Letter> ls = w.letters();
        ls.push_back(x);
        next.push_back(free_reduce(ls));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  const Word a = c1.as_word();
  const Word b = c2.as_word();
  std::vector<Word> reps;
  for (const Word& w : words) {
    bool fresh = true;
    for (const Word& r : reps) {
      if (solve_double_coset(a, w, r, b)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(w);
  }
  return reps;
}

}  // namespace curves
