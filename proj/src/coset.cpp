#include "curves/coset.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "curves/errors.hpp"

namespace curves {

const char* to_string(CyclicCase c) {
  switch (c) {
    case CyclicCase::Forward:
      return "forward";
    case CyclicCase::Backward:
      return "backward";
    case CyclicCase::Other:
      return "other";
  }
  return "?";
}

CyclicCase parse_cyclic_case(std::string_view text) {
  if (text == "forward") return CyclicCase::Forward;
  if (text == "backward") return CyclicCase::Backward;
  if (text == "other") return CyclicCase::Other;
  throw ParseError("unknown cyclic case \"" + std::string(text) + "\" (forward|backward|other)");
}

namespace {

bool solution_less(const CosetSolution& x, const CosetSolution& y) {
  const long sx = std::labs(x.p) + std::labs(x.q);
  const long sy = std::labs(y.p) + std::labs(y.q);
  if (sx != sy) return sx < sy;
  if (std::labs(x.p) != std::labs(y.p)) return std::labs(x.p) < std::labs(y.p);
  if (x.p != y.p) return x.p < y.p;
  return x.q < y.q;
}

// If w == core^q for a cyclically reduced core, returns q.
std::optional<long> power_of(const Word& w, const CyclicWord& core) {
  if (w.empty()) return 0L;
  const std::size_t n = core.size();
  if (w.size() % n != 0) return std::nullopt;
  const long m = static_cast<long>(w.size() / n);
  const Word base = core.as_word();
  if (w == base.pow(m)) return m;
  if (w == base.pow(-m)) return -m;
  return std::nullopt;
}

void require_nontrivial(const Word& w, const char* role) {
  if (w.empty()) {
    throw PreconditionError(std::string("double coset with trivial ") + role +
                            " subgroup; compare words directly");
  }
}

void require_fatgraph(const SurfaceSpec& s) {
  if (!s.is_fatgraph()) {
    throw AdmissibilityError("Nielsen point criteria need a fatgraph surface, got " + s.name());
  }
}

void check_inputs(const SurfaceSpec& s, const CyclicWord& w, const PointDatum& d) {
  require_fatgraph(s);
  if (w.empty()) throw PreconditionError("curve class is contractible");
  validate_letters(s, w.letters());
  validate_letters(s, d.connecting_word.letters());
}

long strict_bound(const CyclicWord& w, const Word& x, const Word& y) {
  return coset_bound(w.as_word(), x.size(), y.size()) + 2;
}

}  // namespace

long coset_bound(const Word& a, std::size_t len_target, std::size_t len_g, long slack) {
  const std::size_t cyclen = cyclic_reduce(a).word.size();
  if (cyclen == 0) throw PreconditionError("coset bound for a trivial subgroup");
  const std::size_t num = len_target + len_g + 2 * a.size();
  return static_cast<long>((num + cyclen - 1) / cyclen) + slack;
}

std::vector<CosetSolution> all_double_coset_solutions(const Word& a, const Word& target,
                                                      const Word& g, const Word& b, long slack) {
  require_nontrivial(a, "left");
  require_nontrivial(b, "right");
  const long bound_a = coset_bound(a, target.size(), g.size(), slack);
  const long bound_b = coset_bound(b, target.size(), g.size(), slack);
  const CyclicReduction rb = cyclic_reduce(b);
  const Word v_inv = rb.conjugator.inverse();

  std::vector<CosetSolution> out;
  for (long p = -bound_a; p <= bound_a; ++p) {
    // b^q = v e^q v^-1 must equal (a^p g)^-1 target.
    const Word x = (a.pow(p) * g).inverse() * target;
    const Word y = v_inv * x * rb.conjugator;
    const std::optional<long> q = power_of(y, rb.word);
    if (q && std::labs(*q) <= bound_b) out.push_back({p, *q});
  }
  std::sort(out.begin(), out.end(), solution_less);
  return out;
}

std::optional<CosetSolution> solve_double_coset(const Word& a, const Word& target, const Word& g,
                                                const Word& b, long slack) {
  const auto all = all_double_coset_solutions(a, target, g, b, slack);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool nielsen_equivalent(const SurfaceSpec& s, const CyclicWord& w1, const CyclicWord& w2,
                        const PointDatum& d1, const PointDatum& d2) {
  check_inputs(s, w1, d1);
  check_inputs(s, w2, d2);
  return solve_double_coset(w1.as_word(), d1.connecting_word, d2.connecting_word, w2.as_word())
      .has_value();
}

bool is_trivial_point(const SurfaceSpec& s, const CyclicWord& w, const PointDatum& d) {
  check_inputs(s, w, d);
  return power_of(d.connecting_word, w).has_value();
}

bool is_special_point(const SurfaceSpec& s, const CyclicWord& w1, const CyclicWord& w2,
                      const PointDatum& d) {
  check_inputs(s, w1, d);
  check_inputs(s, w2, d);
  const Word& g = d.connecting_word;
  for (const CosetSolution& sol : all_double_coset_solutions(w1.as_word(), g, g, w2.as_word())) {
    if (sol.p != 0 || sol.q != 0) return true;
  }
  return false;
}

bool is_self_cancelling(const SurfaceSpec& s, const CyclicWord& w1, const CyclicWord& w2,
                        const PointDatum& d) {
  check_inputs(s, w1, d);
  check_inputs(s, w2, d);
  const Word& g = d.connecting_word;
  const int chi = orientation_character(s, w1);
  for (const CosetSolution& sol : all_double_coset_solutions(w1.as_word(), g, g, w2.as_word())) {
    if ((sol.p != 0 || sol.q != 0) && chi < 0 && sol.p % 2 != 0) return true;
  }
  return false;
}

bool is_geometrically_special(const SurfaceSpec& s, const CyclicWord& w, const PointDatum& d) {
  check_inputs(s, w, d);
  const Word& g = d.connecting_word;
  const Word a = w.as_word();
  return solve_double_coset(a, g, g.inverse(), a).has_value();
}

StrictPredicates strict_predicates(const SurfaceSpec& s, const CyclicWord& w, const PointDatum& d1,
                                   const PointDatum& d2) {
  check_inputs(s, w, d1);
  check_inputs(s, w, d2);
  if (!d1.ordering || !d2.ordering) {
    throw PreconditionError("strict criteria need ordering data on both points");
  }
  const Word a = w.as_word();
  const int chi = orientation_character(s, w);
  const Word& x = d1.connecting_word;
  const Word& y = d2.connecting_word;
  const Ordering& rel = *d2.ordering;
  const int eta = d1.ordering->eta;
  const long shift = (rel.eta1 - rel.eta2) / 2 + (rel.cyclic_case == CyclicCase::Forward    ? -1
                                                  : rel.cyclic_case == CyclicCase::Backward ? 1
                                                                                            : 0);
  auto reverses = [&](long e) { return chi < 0 && e % 2 != 0; };

  StrictPredicates out;
  const long bq = strict_bound(w, x, y);
  for (long q = -bq; q <= bq; ++q) {
    const long q_hat = q + shift;
    if (x == a.pow(-q_hat) * y * a.pow(q)) out.equivalent = true;
    if (q != 0 && x == a.pow(-q) * x * a.pow(q)) {
      out.special = true;
      if (reverses(q)) out.self_cancelling = true;
    }
    if (x == a.pow(eta - q) * x.inverse() * a.pow(q)) {
      out.geom_special = true;
      if (orientation_character(s, a.pow(-q) * x) > 0) out.geom_self_cancelling = true;
    }
  }
  return out;
}

}  // namespace curves
