#pragma once

// Certification engine for the genus gaps of a very general degree-d
// surface in P^3.
//
// A genus g is certified realizable (non-gap) when it lies in some
//   J_n(d) = [g_{d,n} - l_{d,n}, g_{d,n}],   n >= 1,
// the range swept by nodal complete intersections with 0..l_{d,n} nodes.
// A genus is a proved gap when it lies in the initial interval
//   Gaps_0(d) = [0, d(d-3)/2 - 3]
// or (for d >= 6) in the second interval
//   I_1(d) = [g_{d,1} + 1, g_{d,2} - l_{d,2} - 1].
// Everything else below the certification horizon is reported Unknown;
// Unknown is never claimed to be a gap.

#include "gapcert/exactint.hpp"
#include "gapcert/intervals.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace gapcert {

enum class Verdict { ProvedGap, CertifiedNonGap, Unknown };

enum class Source { XuInitial, MainTheoremGaps1, LowDegree, SeveriInterval, None };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ProvedGap: return "ProvedGap";
    case Verdict::CertifiedNonGap: return "CertifiedNonGap";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

constexpr std::string_view to_string(Source s) {
  switch (s) {
    case Source::XuInitial: return "Xu-initial";
    case Source::MainTheoremGaps1: return "MainTheorem-Gaps1";
    case Source::LowDegree: return "LowDegree";
    case Source::SeveriInterval: return "SeveriInterval";
    case Source::None: return "none";
  }
  return "?";
}

/// A nodal complete intersection X . F_n with delta = g_{d,n} - g nodes.
struct Certificate {
  Integer n;
  Integer delta;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct GapStatus {
  Verdict verdict = Verdict::Unknown;
  Source source = Source::None;
  std::optional<Certificate> certificate;
  friend bool operator==(const GapStatus&, const GapStatus&) = default;
};

struct TaggedInterval {
  Interval interval;
  Source source;
  friend bool operator==(const TaggedInterval&, const TaggedInterval&) = default;
};

struct GapDecomposition {
  Integer d;
  Integer horizon;                      // Gaps(d) is contained in [0, horizon]
  IntervalSet proved_gaps;              // within [0, horizon]
  std::vector<TaggedInterval> proved_parts;  // proved_gaps split by source
  IntervalSet unknown_candidates;
  IntervalSet nongap_certified;         // within [0, horizon]
  friend bool operator==(const GapDecomposition&, const GapDecomposition&) = default;
};

inline Interval j_interval(const Integer& d, const Integer& n) {
  if (d < 4) throw std::invalid_argument("j_interval: requires d >= 4");
  if (n < 1) throw std::invalid_argument("j_interval: requires n >= 1");
  Integer g = arithmetic_genus(d, n);
  return Interval(g - linsys_dim(d, n), g);
}

/// I_n(d) = [g_{d,n} + 1, g_{d,n+1} - l_{d,n+1} - 1] when non-empty.
inline std::optional<Interval> i_interval(const Integer& d, const Integer& n) {
  if (d < 4) throw std::invalid_argument("i_interval: requires d >= 4");
  if (n < 1) throw std::invalid_argument("i_interval: requires n >= 1");
  Integer lo = arithmetic_genus(d, n) + 1;
  Integer hi = arithmetic_genus(d, n + 1) - linsys_dim(d, n + 1) - 1;
  if (hi < lo) return std::nullopt;
  return Interval(std::move(lo), std::move(hi));
}

/// Upper end of Gaps_0(d) = [0, d(d-3)/2 - 3].
inline Integer initial_gap_end(const Integer& d) { return d * (d - 3) / 2 - 3; }

/// g_{d,d-1} - l_{d,d-1} - 1: every genus above it lies in some J_n(d).
inline Integer coarse_horizon_exact(const Integer& d) {
  if (d < 4) throw std::invalid_argument("coarse_horizon_exact: requires d >= 4");
  return arithmetic_genus(d, d - 1) - linsys_dim(d, d - 1) - 1;
}

/// Closed form d(d-1)(5d-19)/6 - 1 for d >= 5. It exceeds
/// coarse_horizon_exact(d) by exactly d - 2, so it is a valid (weaker)
/// horizon. For d = 4 the J-route value -1 is returned: nothing is a gap.
inline Integer coarse_horizon(const Integer& d) {
  if (d < 4) throw std::invalid_argument("coarse_horizon: requires d >= 4");
  if (d == 4) return coarse_horizon_exact(d);
  return d * (d - 1) * (5 * d - 19) / 6 - 1;
}

/// Smallest n >= 1 such that contiguity holds for every m >= n.
///
/// For m < d the slack l_{d,m} - (g_{d,m} - g_{d,m-1} - 1) changes by
/// C(m+3,2) - d from m to m+1, so it decreases up to the first m0 with
/// C(m0+3,2) >= d and is non-decreasing from there on. Failures therefore
/// form an interval ending in [m0, d), found by bisection.
inline Integer first_contiguous_degree(const Integer& d) {
  if (d < 1) throw std::invalid_argument("first_contiguous_degree: requires d >= 1");
  Integer lo = 1, hi = d;
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if ((mid + 3) * (mid + 2) / 2 >= d) hi = mid;
    else lo = mid + 1;
  }
  const Integer m0 = lo;
  if (m0 >= d || contiguity_holds(d, m0)) return 1;
  // contiguity fails at m0 and holds at d: find the last failure.
  lo = m0;
  hi = d;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (contiguity_holds(d, mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

inline Integer refined_horizon(const Integer& d) {
  if (d < 5) throw std::invalid_argument("refined_horizon: requires d >= 5");
  Integer n_star = first_contiguous_degree(d);
  Integer m = n_star - 1;
  return arithmetic_genus(d, m) - linsys_dim(d, m) - 1;
}

/// Smallest n >= 1 with g in J_n(d), together with delta = g_{d,n} - g.
///
/// Both ends of J_n(d) are non-decreasing in n (for d = 4 the lower end is
/// always 0), so the answer is the least n with g_{d,n} >= g if that J
/// contains g, and nothing otherwise. That n is found by bisection, since
/// g_{d,n} >= n makes n = max(g, 1) an upper bracket.
inline std::optional<Certificate> certify_nongap(const Integer& d, const Integer& g) {
  if (d < 4) throw std::invalid_argument("certify_nongap: requires d >= 4");
  if (g < 0) throw std::invalid_argument("certify_nongap: requires g >= 0");
  Integer lo = 1, hi = g > 1 ? g : Integer(1);
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (arithmetic_genus(d, mid) >= g) hi = mid; else lo = mid + 1;
  }
  Integer top = arithmetic_genus(d, lo);
  if (top - linsys_dim(d, lo) <= g) return Certificate{lo, top - g};
  return std::nullopt;
}

inline GapStatus status(const Integer& d, const Integer& g) {
  if (d < 1) throw std::invalid_argument("status: requires d >= 1");
  if (g < 0) throw std::invalid_argument("status: requires g >= 0");
  if (d <= 3) return {Verdict::CertifiedNonGap, Source::LowDegree, std::nullopt};

  if (d >= 5 && g <= initial_gap_end(d)) return {Verdict::ProvedGap, Source::XuInitial, std::nullopt};
  if (d >= 6) {
    if (auto i1 = i_interval(d, 1); i1 && i1->contains(g))
      return {Verdict::ProvedGap, Source::MainTheoremGaps1, std::nullopt};
  }
  if (auto cert = certify_nongap(d, g))
    return {Verdict::CertifiedNonGap, Source::SeveriInterval, std::move(cert)};
  return {};
}

inline GapDecomposition decompose(const Integer& d) {
  if (d < 4) throw std::invalid_argument("decompose: requires d >= 4");
  GapDecomposition out;
  out.d = d;
  if (d == 4) {
    // g_{4,n} = l_{4,n}, so the J-intervals start at 0 and every genus is realized.
    out.horizon = coarse_horizon(d);
    return out;
  }

  out.horizon = refined_horizon(d);
  const Interval window(0, out.horizon);

  std::vector<TaggedInterval> proved;
  proved.push_back({Interval(0, initial_gap_end(d)), Source::XuInitial});
  if (d >= 6) {
    if (auto i1 = i_interval(d, 1)) proved.push_back({*i1, Source::MainTheoremGaps1});
  }
  std::vector<Interval> proved_raw;
  for (const auto& p : proved) {
    IntervalSet clipped = intersect(IntervalSet{p.interval}, IntervalSet{window});
    for (const auto& part : clipped.parts()) {
      out.proved_parts.push_back({part, p.source});
      proved_raw.push_back(part);
    }
  }
  out.proved_gaps = IntervalSet(std::move(proved_raw));

  std::vector<Interval> js;
  for (Integer n = 1;; ++n) {
    Interval j = j_interval(d, n);
    if (j.lo() > out.horizon) {
      if (n >= d) break;
      continue;
    }
    js.push_back(std::move(j));
  }
  out.nongap_certified = intersect(IntervalSet(std::move(js)), IntervalSet{window});
  out.unknown_candidates = complement_within(unite(out.proved_gaps, out.nongap_certified), window);
  return out;
}

}  // namespace gapcert
