// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "curves/coset.hpp"
#include "curves/geodesic.hpp"
#include "curves/nielsen.hpp"
#include "curves/oracle.hpp"
#include "gen.hpp"

using namespace curves;

namespace {

// Reports gathered by criteria 1-6 for the chain check of criterion 8.
std::vector<SelfReport> g_self_reports;
std::vector<PairReport> g_pair_reports;

struct Check {
  std::ostringstream why;
  bool ok = true;

  template <typename T, typename U>
  void eq(const T& got, const U& want, const std::string& what) {
    if (got == want) return;
    if (ok) why << what << ": got " << got << ", want " << want;
    ok = false;
  }
  void truth(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) why << what;
    ok = false;
  }
};

std::ostream& operator<<(std::ostream& os, const ExtCount& c) { return os << c.str(); }

long delta(long k) { return k % 2 == 0 ? 1 : 0; }

CyclicWord power_of_a(long k) { return CyclicWord::parse("a").pow(k); }

SelfReport self(const SurfaceSpec& s, const CyclicWord& c) {
  g_self_reports.push_back(self_report(s, c));
  return g_self_reports.back();
}

PairReport pair(const SurfaceSpec& s, const CyclicWord& c1, const CyclicWord& c2) {
  g_pair_reports.push_back(pair_report(s, c1, c2));
  return g_pair_reports.back();
}

void criterion1(Check& c) {
  const SurfaceSpec s = build_surface("annulus");
  for (long k = 1; k <= 8; ++k) {
    const SelfReport r = self(s, power_of_a(k));
    const std::string at = "k=" + std::to_string(k) + " ";
    c.eq(r.mi, 2 * k - 2, at + "MI");
    c.eq(r.ni, 0, at + "NI");
    c.eq(r.ni_star, 0, at + "NI*");
    c.eq(r.ri, ExtCount::finite(k), at + "RI");
    c.eq(r.mi_geom, k - 1, at + "MI_geom");
    c.eq(r.ni_geom, delta(k), at + "NI_geom");
    c.eq(r.ri_geom, ExtCount::finite(k / 2 + 1), at + "RI_geom");
  }
}

void criterion2(Check& c) {
  const SurfaceSpec s = build_surface("moebius");
  for (long k = 1; k <= 8; ++k) {
    const SelfReport r = self(s, power_of_a(k));
    const std::string at = "k=" + std::to_string(k) + " ";
    const bool even = k % 2 == 0;
    c.eq(r.mi, even ? k - 2 : k - 1, at + "MI");
    c.eq(r.ni, even ? 0 : k - 1, at + "NI");
    c.eq(r.ri, ExtCount::finite(k), at + "RI");
    c.eq(r.mi_geom, (k - 1) / 2, at + "MI_geom");
    c.eq(r.ni_geom, even ? delta(k / 2) : (k - 1) / 2, at + "NI_geom");
  }
}

void criterion3(Check& c) {
  const SurfaceSpec s = build_surface("moebius");
  for (long k1 = 1; k1 <= 5; ++k1) {
    for (long k2 = 1; k2 <= 5; ++k2) {
      const PairReport r = pair(s, power_of_a(k1), power_of_a(k2));
      const std::string at = "k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) + " ";
      const bool even = (k1 * k2) % 2 == 0;
      c.eq(r.mi, even ? 0 : std::min(k1, k2), at + "MI");
      c.eq(r.ni, even ? 0 : std::gcd(k1, k2), at + "NI");
      c.eq(r.ri, ExtCount::finite(std::gcd(k1, k2)), at + "RI");
    }
  }
}

void criterion4(Check& c) {
  const CyclicWord a = CyclicWord::parse("a");
  const PairReport r = pair(build_surface("rp2"), a, a);
  c.eq(r.mi, 1, "MI");
  c.eq(r.ni, 1, "NI");
  c.eq(r.ni_star, 1, "NI*");
  c.eq(r.ri, ExtCount::finite(1), "RI");
  c.eq(r.inventory.essential_special, 1, "essential special classes");
  c.truth(r.inventory.defective_special, "special class not defective");
}

void criterion5(Check& c) {
  for (const char* name : {"pants", "torus1"}) {
    const SurfaceSpec s = build_surface(name);
    for (int i = 0; i < 20; ++i) {
      const CyclicWord w = gen::primitive(2, 6);
      const long n = self_intersection_geom(s, w);
      for (long k : {2, 3}) {
        const SelfReport r = self(s, w.pow(k));
        const std::string at = std::string(name) + " " + w.str() + "^" + std::to_string(k) + " ";
        c.eq(r.mi, k * k * 2 * n + 2 * (k - 1), at + "MI");
        c.eq(r.ni, k * k * 2 * n, at + "NI");
      }
    }
  }
}

void criterion6(Check& c) {
  for (const char* name : {"annulus", "pants", "torus1"}) {
    const SurfaceSpec s = build_surface(name);
    for (int i = 0; i < 10; ++i) {
      const CyclicWord w = gen::primitive(s.rank(), 6);
      const long n = self_intersection_geom(s, w);
      for (auto [k, l] : {std::pair<long, long>{1, 2}, {2, 3}}) {
        const PairReport r = pair(s, w.pow(k), w.pow(l));
        c.eq(r.mi, k * l * 2 * n, std::string(name) + " " + w.str() + " (" + std::to_string(k) + "," +
                                      std::to_string(l) + ") MI");
      }
    }
  }
}

void criterion7(Check& c) {
  long selfs = 0;
  long pairs = 0;
  for (const char* name : {"annulus", "pants", "torus1"}) {
    const OracleCheckSummary sum = run_oracle_check(build_surface(name), 8, 200);
    selfs += sum.self_checked;
    pairs += sum.pairs_checked;
    c.truth(sum.mismatches.empty(), std::string(name) + ": " + (sum.mismatches.empty() ? "" : sum.mismatches[0]));
  }
  c.truth(pairs >= 200, "fewer than 200 pairs compared");
  std::printf("  oracle compared %ld primitive classes and %ld pairs\n", selfs, pairs);
}

void criterion8(Check& c) {
  for (const SelfReport& r : g_self_reports) {
    const std::string at = r.curve.word.str() + " ";
    c.eq(r.mi, 2 * r.mi_geom, at + "MI = 2 MI_geom");
    c.truth(r.mi_geom >= r.ni_geom, at + "MI_geom >= NI_geom");
    c.truth(2 * r.ni_geom >= r.ni, at + "2 NI_geom >= NI");
    c.truth(r.mi >= r.ni_star && r.ni_star >= r.ni, at + "MI >= NI* >= NI");
  }
  for (const PairReport& r : g_pair_reports) {
    c.truth(r.mi >= r.ni_star && r.ni_star >= r.ni, "pair MI >= NI* >= NI");
  }
  c.truth(!g_self_reports.empty() && !g_pair_reports.empty(), "no reports collected");
}

void criterion9(Check& c) {
  for (int t = 0; t < 1000; ++t) {
    const Word a = gen::word(2, 4);
    const Word b = gen::word(2, 4);
    if (a.empty() || b.empty()) {
      --t;
      continue;
    }
    const Word g = gen::word(2, 5);
    const Word target =
        gen::uniform(0, 1) ? a.pow(gen::uniform(-3, 3)) * g * b.pow(gen::uniform(-3, 3)) : gen::word(2, 8);
    const auto sol = solve_double_coset(a, target, g, b);
    if (sol) c.truth(a.pow(sol->p) * g * b.pow(sol->q) == target, "unsound solution for " + target.str());
    c.truth(sol == solve_double_coset(a, target, g, b, kCosetSlack + 5), "bound +5 changed " + target.str());
  }
  const SurfaceSpec s = build_surface("pants");
  for (int t = 0; t < 300; ++t) {
    const CyclicWord w1 = gen::cyclic(2, 5);
    const CyclicWord w2 = gen::cyclic(2, 5);
    const Word x = w1.as_word();
    const Word y = w2.as_word();
    const Word d1 = gen::word(2, 5);
    const Word d2 = gen::uniform(0, 2) ? x.pow(gen::uniform(-2, 2)) * d1 * y.pow(gen::uniform(-2, 2)) : gen::word(2, 5);
    const Word d3 = gen::uniform(0, 2) ? x.pow(gen::uniform(-2, 2)) * d2 * y.pow(gen::uniform(-2, 2)) : gen::word(2, 5);
    const PointDatum p1{d1, {}}, p2{d2, {}}, p3{d3, {}};
    const bool e12 = nielsen_equivalent(s, w1, w2, p1, p2);
    const bool e23 = nielsen_equivalent(s, w1, w2, p2, p3);
    c.truth(nielsen_equivalent(s, w1, w2, p1, p1), "not reflexive");
    c.truth(e12 == nielsen_equivalent(s, w1, w2, p2, p1), "not symmetric");
    c.truth(!(e12 && e23) || nielsen_equivalent(s, w1, w2, p1, p3), "not transitive");
  }
}

void criterion10(Check& c) {
  for (const char* name : {"annulus", "pants", "torus1", "rp2"}) {
    const SurfaceSpec s = build_surface(name);
    for (int t = 0; t < 100; ++t) {
      const CyclicWord w1 = gen::cyclic(std::max(1, s.rank()), 5);
      const CyclicWord w2 = gen::uniform(0, 1) ? primitive_root(w1).root.pow(gen::uniform(1, 3)) : gen::cyclic(std::max(1, s.rank()), 5);
      const PairReport r = pair_report(s, w1, w2);
      c.truth(r.wecken, std::string(name) + " pair " + w1.str() + " " + w2.str() + " not Wecken");
    }
  }
  const PairReport m = pair_report(build_surface("moebius"), power_of_a(3), power_of_a(5));
  c.truth(!m.wecken && m.mi == 3 && m.ni == 1, "moebius (3,5) should have MI=3 > NI=1");
  for (const char* name : {"annulus", "moebius", "pants", "torus1", "plane", "sphere", "rp2"}) {
    const SurfaceSpec s = build_surface(name);
    for (int t = 0; t < 100; ++t) {
      const CyclicWord root = gen::cyclic(std::max(1, s.rank()), 4);
      const CyclicWord w = root.pow(gen::uniform(1, 4));
      const SelfReport r = self_report(s, w);
      const bool expected = !r.curve.special || r.k_prime == 1;
      c.truth(r.wecken == expected, std::string(name) + " self " + w.str() + " Wecken verdict");
    }
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0 for no limit
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "annulus closed forms, k = 1..8", 1.0, criterion1},
      {2, "Moebius closed forms, k = 1..8", 1.0, criterion2},
      {3, "Moebius pair table, 1 <= k1,k2 <= 5", 1.0, criterion3},
      {4, "rp2 pair (a, a)", 0.0, criterion4},
      {5, "power law on pants and torus1", 30.0, criterion5},
      {6, "common-root pairs on orientable presets", 30.0, criterion6},
      {7, "counter vs hyperbolic oracle, length <= 8", 300.0, criterion7},
      {8, "chain inequalities on reports of 1-6", 0.0, criterion8},
      {9, "coset solver soundness and equivalence", 60.0, criterion9},
      {10, "Wecken landscape", 0.0, criterion10},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.truth(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_s > 0 && secs >= cr.limit_s) check.truth(false, "time limit exceeded");
    std::string limit = cr.limit_s > 0 ? " (limit " + std::to_string(static_cast<int>(cr.limit_s)) + " s)" : "";
    std::printf("%s criterion %d: %s [%.3f s%s]%s%s\n", check.ok ? "PASS" : "FAIL", cr.id, cr.title, secs,
                limit.c_str(), check.ok ? "" : " - ", check.why.str().c_str());
    std::fflush(stdout);
    if (!check.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
