// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include "gapcert/cases.hpp"
#include "gapcert/exactint.hpp"
#include "gapcert/gapmap.hpp"
#include "gapcert/intervals.hpp"
#include "gapcert/picard.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace gc = gapcert;
namespace pc = gapcert::picard;
namespace cs = gapcert::cases;
using gc::Integer;
using gc::Interval;
using gc::IntervalSet;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what;
    ok = ok && cond;
  }
};

int failures = 0;

void run(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0) o.require(secs < budget_s, "runtime " + std::to_string(secs) + " s over budget");
  if (!o.ok) ++failures;
  std::printf("%s %2d %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.note.str().empty() ? "" : ": ", o.note.str().c_str());
}

std::string show(const IntervalSet& s) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < s.parts().size(); ++i)
    out << (i ? "," : "") << "[" << s.parts()[i].lo() << "," << s.parts()[i].hi() << "]";
  out << "}";
  return out.str();
}

void criterion1(Outcome& o) {
  auto dec = gc::decompose(5);
  o.require(dec.proved_gaps == IntervalSet{Interval(0, 2)}, "proved(5) = " + show(dec.proved_gaps));
  o.require(dec.unknown_candidates.empty(), "unknown(5) = " + show(dec.unknown_candidates));
  for (int g = 3; g <= 10000; ++g)
    if (!gc::certify_nongap(5, g)) o.require(false, "certify_nongap(5, " + std::to_string(g) + ")");
}

void criterion2(Outcome& o) {
  for (int d = 1; d <= 4; ++d)
    for (int g = 0; g <= 10000; ++g)
      if (gc::status(d, g).verdict != gc::Verdict::CertifiedNonGap)
        o.require(false, "status(" + std::to_string(d) + "," + std::to_string(g) + ")");
  o.require(gc::decompose(4).proved_gaps.empty() && gc::decompose(4).unknown_candidates.empty(), "decompose(4) not empty");
}

void criterion3(Outcome& o) {
  for (int d = 6; d <= 500; ++d) {
    auto i1 = gc::i_interval(d, 1);
    Integer D = d;
    Interval want((D * D - 3 * D + 4) / 2, D * D - 2 * D - 9);
    o.require(i1 && *i1 == want, "I_1(" + std::to_string(d) + ")");
  }
}

void criterion4(Outcome& o) {
  for (int d = 4; d <= 100; ++d)
    for (int n = d; n <= 3 * d; ++n)
      o.require(gc::contiguity_holds(d, n), "contiguity(" + std::to_string(d) + "," + std::to_string(n) + ")");
}

void criterion5(Outcome& o) {
  o.require(gc::refined_horizon(5) == 2, "refined_horizon(5) = " + gc::to_string(gc::refined_horizon(5)));
  for (int d = 5; d <= 200; ++d) {
    Integer D = d;
    Integer closed = D * (D - 1) * (5 * D - 19) / 6 - 1;
    o.require(gc::coarse_horizon(d) == closed, "coarse_horizon(" + std::to_string(d) + ")");
    o.require(gc::refined_horizon(d) <= gc::coarse_horizon(d), "refined > coarse at d = " + std::to_string(d));
    // Smallest n with n^3 >= 12 d^2, i.e. ceil of the cube root.
    Integer n0 = 1;
    while (n0 * n0 * n0 < 12 * D * D) ++n0;
    for (Integer n = n0; n < D; ++n)
      o.require(gc::contiguity_holds(D, n), "sufficiency at d = " + std::to_string(d) + ", n = " + gc::to_string(n));
  }
}

void criterion6(Outcome& o) {
  const auto table = cs::builtin_cases();
  auto find = [&](const std::string& id) -> const cs::CaseRecord& {
    for (const auto& c : table)
      if (c.id == id) return c;
    throw std::logic_error("missing case " + id);
  };
  struct Cubic {
    const char* id;
    int slope, offset;
  };
  for (const Cubic& c : {Cubic{"cubic-i", 3, 0}, Cubic{"cubic-ii.a-ddag", 3, 3}, Cubic{"cubic-ii.b-dag", 5, 0},
                         Cubic{"cubic-ii.b-ddag", 5, 1}, Cubic{"cubic-iii", 5, 0}})
    for (int d = 6; d <= 8; ++d)
      o.require(cs::max_neg_kappa(find(c.id), d) == c.slope * d + c.offset, std::string(c.id) + " d=" + std::to_string(d));

  struct Quartic {
    const char* id;
    pc::Coeff quoted;
    bool exact;
  };
  for (const Quartic& q : {Quartic{"quartic-cone", 8, true}, Quartic{"quartic-normal-rational-a", 24, false},
                           Quartic{"quartic-normal-rational-b", 24, false}, Quartic{"quartic-elliptic-scroll-a", 24, true},
                           Quartic{"quartic-elliptic-scroll-b", 24, true}, Quartic{"quartic-rational-a", 24, true},
                           Quartic{"quartic-normal-rational-c", 11, false}, Quartic{"quartic-elliptic-ruled-a", 16, false},
                           Quartic{"quartic-monoid", 20, false}, Quartic{"quartic-elliptic-ruled-b", 20, false},
                           Quartic{"quartic-elliptic-ruled-c", 16, false}, Quartic{"quartic-genus2-scroll", 18, false},
                           Quartic{"quartic-rational-b", 22, false}, Quartic{"quartic-rational-c", 36, true}}) {
    pc::Coeff got = cs::max_neg_kappa(find(q.id), 6);
    o.require(q.exact ? got == q.quoted : got <= q.quoted,
              std::string(q.id) + " computed " + std::to_string(got) + " vs quoted " + std::to_string(q.quoted));
    std::printf("      %-28s quoted %s%-3lld computed %lld\n", q.id, q.exact ? "= " : "<=", static_cast<long long>(q.quoted),
                static_cast<long long>(got));
  }
  for (const auto& c : cs::verify_kappa())
    o.require(c.passed, c.name + ": " + c.detail);
}

void criterion7(Outcome& o) {
  auto rep = cs::verify_all();
  o.require(rep.triples.size() == 13, "expected 13 restricted triples");
  o.require(rep.passed, "verify_all failed");
  bool special = false;
  for (const auto& r : rep.rows)
    if (r.case_id == "quartic-rational-c" && r.phi == 73 && r.family_dim == 17 && r.threshold == 23 && r.passed)
      special = true;
  o.require(special, "DirectDim path for quartic-rational-c not exercised");
  const std::string cmd = std::string("\"") + GAPCERT_CLI + "\" verify cases > /dev/null";
  int rc = std::system(cmd.c_str());
  o.require(rc == 0, "`gapcert verify cases` returned " + std::to_string(rc));
}

void criterion8(Outcome& o) {
  int models = 0;
  for (const auto& name : pc::builtin_names()) {
    auto L = pc::builtin(name);
    const auto m = L.info().model;
    if (m != pc::SurfaceModel::NormalCubic && m != pc::SurfaceModel::NormalQuartic) continue;
    const pc::Coeff deg = m == pc::SurfaceModel::NormalCubic ? 3 : 4;
    ++models;
    for (pc::Coeff d = 1; d <= 30; ++d)
      o.require(Integer(pc::adjunction_genus(L, d * L.cls("H"))) == gc::arithmetic_genus(deg, d),
                name + " d=" + std::to_string(d));
  }
  o.require(models >= 3, "too few cone/quartic models");
}

void criterion9(Outcome& o) {
  using Set = gc::basic_interval_set<long>;
  using Iv = gc::basic_interval<long>;
  constexpr long U = 100000;
  std::mt19937_64 rng(90210);
  std::uniform_int_distribution<int> count(0, 12);
  std::uniform_int_distribution<long> pos(0, U), len(0, 5000);
  auto family = [&] {
    std::vector<Iv> parts;
    for (int k = count(rng); k > 0; --k) {
      long lo = pos(rng);
      parts.emplace_back(lo, std::min(U, lo + len(rng)));
    }
    return Set(std::move(parts));
  };
  auto bits = [&](const Set& s) {
    std::vector<char> b(U + 1, 0);
    for (const auto& p : s.parts()) std::fill(b.begin() + p.lo(), b.begin() + p.hi() + 1, 1);
    return b;
  };
  for (int trial = 0; trial < 1000 && o.ok; ++trial) {
    Set a = family(), b = family();
    long x = pos(rng), y = pos(rng);
    Iv bound(std::min(x, y), std::max(x, y));
    auto ma = bits(a), mb = bits(b), mu = bits(a | b), mc = bits(gc::complement_within(a, bound));
    for (long g = 0; g <= U; ++g) {
      if (mu[g] != (ma[g] || mb[g]) || mc[g] != (bound.contains(g) && !ma[g]) || gc::contains(a, g) != bool(ma[g])) {
        o.require(false, "trial " + std::to_string(trial) + " at g = " + std::to_string(g));
        break;
      }
    }
  }
}

void criterion10(Outcome& o) {
  struct Want {
    int d;
    IntervalSet proved, unknown;
    int horizon;
  };
  for (const Want& w : {Want{6, {Interval(0, 6), Interval(11, 15)}, {Interval(26, 26)}, 26},
                        Want{7, {Interval(0, 11), Interval(16, 26)}, {Interval(37, 44)}, 44}}) {
    auto dec = gc::decompose(w.d);
    const std::string d = "d=" + std::to_string(w.d);
    o.require(dec.proved_gaps == w.proved, d + " proved " + show(dec.proved_gaps));
    o.require(dec.unknown_candidates == w.unknown, d + " unknown " + show(dec.unknown_candidates));
    o.require(dec.horizon == w.horizon, d + " horizon " + gc::to_string(dec.horizon));
    // Cross-check the proved parts: [0, d(d-3)/2 - 3] and the closed form of I_1.
    Integer D = w.d;
    IntervalSet expected{Interval(0, D * (D - 3) / 2 - 3), Interval((D * D - 3 * D + 4) / 2, D * D - 2 * D - 9)};
    o.require(dec.proved_gaps == expected, d + " proved parts disagree with closed forms");
  }
}

}  // namespace

int main() {
  run(1, "Gaps(5) = {0,1,2} and certify_nongap(5,g) on [3,10^4]", 5, criterion1);
  run(2, "low-degree status is CertifiedNonGap for d <= 4, g in [0,10^4]", 5, criterion2);
  run(3, "I_1(d) = [(d^2-3d+4)/2, d^2-2d-9] for d in [6,500]", 0, criterion3);
  run(4, "contiguity for d in [4,100], n in [d,3d]", 0, criterion4);
  run(5, "horizons: refined(5) = 2, refined <= coarse, cube-root sufficiency", 0, criterion5);
  run(6, "kappa values from Gram-matrix arithmetic", 0, criterion6);
  run(7, "verify cases eliminates all 13 restricted triples", 1, criterion7);
  run(8, "adjunction genus on cone and quartic models, d in [1,30]", 0, criterion8);
  run(9, "interval-set algebra vs bitset on 1000 random families", 30, criterion9);
  run(10, "decompositions of degree 6 and 7", 0, criterion10);
  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
