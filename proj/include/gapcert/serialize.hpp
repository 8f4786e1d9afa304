#pragma once

// JSON encoding of reports, lattices and the case table.
//
// Output is canonical: objects have sorted keys (nlohmann::json's default
// std::map storage) and no floating-point values appear anywhere. An
// Integer is written as a JSON number when it fits in int64 and as a
// decimal string otherwise; both spellings are accepted on input.

#include "gapcert/cases.hpp"
#include "gapcert/gapmap.hpp"
#include "gapcert/picard.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace gapcert {

inline constexpr const char* schema_version = "gapcert/1";
inline constexpr const char* case_table_schema = "gapcert-cases/1";

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Scalars and intervals

inline json integer_to_json(const Integer& x) {
  if (auto v = to_int64(x)) return *v;
  return to_string(x);
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline json interval_set_to_json(const IntervalSet& s) {
  json a = json::array();
  for (const auto& p : s.parts()) a.push_back(json::array({integer_to_json(p.lo()), integer_to_json(p.hi())}));
  return a;
}

inline Interval interval_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [lo, hi], got " + j.dump());
  return Interval(integer_from_json(j[0]), integer_from_json(j[1]));
}

inline IntervalSet interval_set_from_json(const json& j) {
  std::vector<Interval> parts;
  for (const auto& e : j) parts.push_back(interval_from_json(e));
  return IntervalSet(std::move(parts));
}

inline Verdict verdict_from_string(std::string_view s) {
  for (Verdict v : {Verdict::ProvedGap, Verdict::CertifiedNonGap, Verdict::Unknown})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

inline Source source_from_string(std::string_view s) {
  for (Source v : {Source::XuInitial, Source::MainTheoremGaps1, Source::LowDegree, Source::SeveriInterval, Source::None})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown source '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Reports

struct StatusReport {
  Integer d;
  Integer g;
  GapStatus status;
  friend bool operator==(const StatusReport&, const StatusReport&) = default;
};

struct BoundsReport {
  Integer d;
  Integer coarse;
  Integer coarse_exact;
  Integer refined;
  Integer first_contiguous;
  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

/// Horizons of degree d >= 4. For d = 4 there are no gaps and both
/// horizons are -1.
inline BoundsReport bounds(const Integer& d) {
  BoundsReport r;
  r.d = d;
  r.coarse = coarse_horizon(d);
  r.coarse_exact = coarse_horizon_exact(d);
  r.refined = d == 4 ? r.coarse_exact : refined_horizon(d);
  r.first_contiguous = first_contiguous_degree(d);
  return r;
}

inline json to_json(const StatusReport& r) {
  json j{{"d", integer_to_json(r.d)},
         {"g", integer_to_json(r.g)},
         {"verdict", std::string(to_string(r.status.verdict))},
         {"source", std::string(to_string(r.status.source))}};
  if (r.status.certificate)
    j["certificate"] = {{"n", integer_to_json(r.status.certificate->n)},
                        {"delta", integer_to_json(r.status.certificate->delta)}};
  else
    j["certificate"] = nullptr;
  return j;
}

inline StatusReport status_report_from_json(const json& j) {
  StatusReport r;
  r.d = integer_from_json(j.at("d"));
  r.g = integer_from_json(j.at("g"));
  r.status.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.status.source = source_from_string(j.at("source").get<std::string>());
  if (!j.at("certificate").is_null())
    r.status.certificate = Certificate{integer_from_json(j["certificate"].at("n")),
                                       integer_from_json(j["certificate"].at("delta"))};
  return r;
}

inline json to_json(const GapDecomposition& r) {
  json parts = json::array();
  for (const auto& p : r.proved_parts)
    parts.push_back({{"interval", json::array({integer_to_json(p.interval.lo()), integer_to_json(p.interval.hi())})},
                     {"source", std::string(to_string(p.source))}});
  return {{"d", integer_to_json(r.d)},
          {"horizon", integer_to_json(r.horizon)},
          {"proved", interval_set_to_json(r.proved_gaps)},
          {"proved_parts", std::move(parts)},
          {"unknown", interval_set_to_json(r.unknown_candidates)},
          {"certified", interval_set_to_json(r.nongap_certified)}};
}

inline GapDecomposition decomposition_from_json(const json& j) {
  GapDecomposition r;
  r.d = integer_from_json(j.at("d"));
  r.horizon = integer_from_json(j.at("horizon"));
  r.proved_gaps = interval_set_from_json(j.at("proved"));
  for (const auto& p : j.at("proved_parts"))
    r.proved_parts.push_back({interval_from_json(p.at("interval")), source_from_string(p.at("source").get<std::string>())});
  r.unknown_candidates = interval_set_from_json(j.at("unknown"));
  r.nongap_certified = interval_set_from_json(j.at("certified"));
  return r;
}

inline json to_json(const BoundsReport& r) {
  return {{"d", integer_to_json(r.d)},
          {"coarse", integer_to_json(r.coarse)},
          {"coarse_exact", integer_to_json(r.coarse_exact)},
          {"refined", integer_to_json(r.refined)},
          {"first_contiguous_degree", integer_to_json(r.first_contiguous)}};
}

inline BoundsReport bounds_report_from_json(const json& j) {
  return {integer_from_json(j.at("d")), integer_from_json(j.at("coarse")), integer_from_json(j.at("coarse_exact")),
          integer_from_json(j.at("refined")), integer_from_json(j.at("first_contiguous_degree"))};
}

namespace cases {

inline json to_json(const Triple& t) { return {{"d", t.d}, {"n", t.n}, {"g", t.g}}; }
inline Triple triple_from_json(const json& j) { return {j.at("d").get<Coeff>(), j.at("n").get<Coeff>(), j.at("g").get<Coeff>()}; }

inline json to_json(const EliminationReport& r) {
  json j{{"case", r.case_id},
         {"triple", to_json(r.triple)},
         {"mode", std::string(to_string(r.mode))},
         {"family_dim", r.family_dim},
         {"max_neg_kappa", r.max_neg_kappa},
         {"v0", integer_to_json(r.v0)},
         {"phi", integer_to_json(r.phi)},
         {"lhs", integer_to_json(r.lhs)},
         {"passed", r.passed},
         {"delegated", r.delegated}};
  j["threshold"] = r.threshold ? json(*r.threshold) : json(nullptr);
  return j;
}

inline EliminationReport elimination_from_json(const json& j) {
  EliminationReport r;
  r.case_id = j.at("case").get<std::string>();
  r.triple = triple_from_json(j.at("triple"));
  r.mode = j.at("mode").get<std::string>() == "DirectDim" ? Mode::DirectDim : Mode::CZ1bis;
  r.family_dim = j.at("family_dim").get<Coeff>();
  r.max_neg_kappa = j.at("max_neg_kappa").get<Coeff>();
  r.v0 = integer_from_json(j.at("v0"));
  r.phi = integer_from_json(j.at("phi"));
  r.lhs = integer_from_json(j.at("lhs"));
  if (!j.at("threshold").is_null()) r.threshold = j["threshold"].get<Coeff>();
  r.passed = j.at("passed").get<bool>();
  r.delegated = j.at("delegated").get<bool>();
  return r;
}

inline json to_json(const Check& c) { return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }
inline Check check_from_json(const json& j) {
  return {j.at("name").get<std::string>(), j.at("passed").get<bool>(), j.at("detail").get<std::string>()};
}

inline json to_json(const VerificationReport& r) {
  json triples = json::array(), rows = json::array();
  for (const auto& t : r.triples) triples.push_back(to_json(t));
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  return {{"triples", std::move(triples)}, {"rows", std::move(rows)}, {"passed", r.passed}};
}

inline VerificationReport verification_from_json(const json& j) {
  VerificationReport r;
  for (const auto& t : j.at("triples")) r.triples.push_back(triple_from_json(t));
  for (const auto& row : j.at("rows")) r.rows.push_back(elimination_from_json(row));
  r.passed = j.at("passed").get<bool>();
  return r;
}

// -- case table ------------------------------------------------------------

inline json to_json(const Variant& v) {
  json params = json::array();
  for (const auto& p : v.params)
    params.push_back({{"name", p.name}, {"lo", p.lo}, {"hi", p.hi ? json(*p.hi) : json(nullptr)}});
  json terms = json::array();
  for (const auto& t : v.gamma.terms) terms.push_back({{"param", t.param}, {"class", t.cls}});
  json cons = json::array();
  for (const auto& s : v.constraints) cons.push_back({{"pencil", s.pencil}, {"min_value", s.min_value}});
  json j{{"label", v.label},
         {"lattice", v.lattice},
         {"gamma", {{"h", v.gamma.h_coeff ? json(*v.gamma.h_coeff) : json("d")}, {"minus", std::move(terms)}}},
         {"params", std::move(params)},
         {"constraints", std::move(cons)},
         {"crepant", v.crepant},
         {"rule", std::string(to_string(v.rule))}};
  if (v.rule == BoundRule::NefDominance) {
    j["nef"] = v.nef;
    j["residual"] = v.residual;
  }
  return j;
}

inline Variant variant_from_json(const json& j) {
  Variant v;
  v.label = j.value("label", std::string());
  v.lattice = j.at("lattice").get<std::string>();
  const json& h = j.at("gamma").at("h");
  if (h.is_string()) {
    if (h.get<std::string>() != "d") throw std::invalid_argument("gamma.h must be an integer or \"d\"");
  } else {
    v.gamma.h_coeff = h.get<Coeff>();
  }
  for (const auto& t : j.at("gamma").at("minus")) v.gamma.terms.push_back({t.at("param").get<std::string>(), t.at("class").get<std::string>()});
  for (const auto& p : j.value("params", json::array())) {
    Parameter q{p.at("name").get<std::string>(), p.value("lo", Coeff{0}), std::nullopt};
    if (p.contains("hi") && !p["hi"].is_null()) q.hi = p["hi"].get<Coeff>();
    v.params.push_back(std::move(q));
  }
  for (const auto& s : j.value("constraints", json::array()))
    v.constraints.push_back({s.at("pencil").get<std::string>(), s.at("min_value").get<Coeff>()});
  v.crepant = j.value("crepant", std::vector<std::string>{});
  const std::string rule = j.value("rule", std::string("sweep"));
  if (rule == "sweep") {
    v.rule = BoundRule::Sweep;
  } else if (rule == "nef-dominance") {
    v.rule = BoundRule::NefDominance;
    v.nef = j.at("nef").get<std::string>();
    v.residual = j.at("residual").get<std::vector<std::string>>();
  } else {
    throw std::invalid_argument("unknown bound rule '" + rule + "'");
  }
  return v;
}

inline json to_json(const CaseRecord& c) {
  json variants = json::array();
  for (const auto& v : c.variants) variants.push_back(to_json(v));
  json j{{"id", c.id},
         {"n", c.n},
         {"variants", std::move(variants)},
         {"family_dim", c.family_dim},
         {"mode", std::string(to_string(c.mode))},
         {"expected_neg_kappa",
          {{"slope", c.expected.slope}, {"offset", c.expected.offset}, {"relation", std::string(to_string(c.expected.relation))}}},
         {"delegated", c.delegated},
         {"citation", c.citation}};
  if (c.mode == Mode::DirectDim) j["threshold"] = c.threshold;
  if (c.dim_derivation) {
    json vals = json::object();
    for (const auto& [k, v] : c.dim_derivation->values) vals[k] = v;
    j["family_dim_derivation"] = {{"values", std::move(vals)}, {"offset", c.dim_derivation->offset}};
  }
  return j;
}

inline CaseRecord case_from_json(const json& j) {
  CaseRecord c;
  c.id = j.at("id").get<std::string>();
  c.n = j.at("n").get<Coeff>();
  for (const auto& v : j.at("variants")) c.variants.push_back(variant_from_json(v));
  c.family_dim = j.at("family_dim").get<Coeff>();
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "CZ1bis") {
    c.mode = Mode::CZ1bis;
  } else if (mode == "DirectDim") {
    c.mode = Mode::DirectDim;
    c.threshold = j.at("threshold").get<Coeff>();
  } else {
    throw std::invalid_argument("unknown mode '" + mode + "'");
  }
  const json& e = j.at("expected_neg_kappa");
  c.expected.slope = e.at("slope").get<Coeff>();
  c.expected.offset = e.at("offset").get<Coeff>();
  const std::string rel = e.at("relation").get<std::string>();
  if (rel != "eq" && rel != "le") throw std::invalid_argument("unknown relation '" + rel + "'");
  c.expected.relation = rel == "eq" ? Relation::Equal : Relation::AtMost;
  if (j.contains("family_dim_derivation")) {
    DimDerivation dd;
    for (const auto& [k, v] : j["family_dim_derivation"].at("values").items()) dd.values.emplace_back(k, v.get<Coeff>());
    dd.offset = j["family_dim_derivation"].at("offset").get<Coeff>();
    c.dim_derivation = std::move(dd);
  }
  c.delegated = j.value("delegated", false);
  c.citation = j.value("citation", std::string());
  validate(c);
  return c;
}

inline json case_table_to_json(const std::vector<CaseRecord>& table) {
  json cs = json::array();
  for (const auto& c : table) cs.push_back(to_json(c));
  return {{"schema", case_table_schema}, {"cases", std::move(cs)}};
}

inline std::vector<CaseRecord> case_table_from_json(const json& j) {
  if (j.at("schema").get<std::string>() != case_table_schema)
    throw std::invalid_argument("unsupported case table schema '" + j["schema"].get<std::string>() + "'");
  std::vector<CaseRecord> out;
  for (const auto& c : j.at("cases")) out.push_back(case_from_json(c));
  std::sort(out.begin(), out.end(), [](const CaseRecord& a, const CaseRecord& b) { return a.id < b.id; });
  return out;
}

inline std::vector<CaseRecord> load_case_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open case table '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("case table '" + path + "': " + e.what());
  }
  return case_table_from_json(j);
}

}  // namespace cases

// ---------------------------------------------------------------------------
// Lattices

namespace picard {

inline std::string_view to_string(SurfaceModel m) {
  switch (m) {
    case SurfaceModel::NormalCubic: return "normal-cubic";
    case SurfaceModel::NormalQuartic: return "normal-quartic";
    case SurfaceModel::NonNormal: return "non-normal";
    case SurfaceModel::Other: break;
  }
  return "other";
}

inline json to_json(const PicardLattice& L) {
  json named = json::object();
  for (const auto& [k, v] : L.named()) named[k] = v.coeffs();
  json j{{"name", L.name()},
         {"rank", L.rank()},
         {"basis", L.basis()},
         {"gram", L.gram()},
         {"canonical", L.canonical().coeffs()},
         {"named", std::move(named)},
         {"model", std::string(to_string(L.info().model))},
         {"citation", L.info().citation},
         {"k_squared", self_intersection(L, L.canonical())}};
  return j;
}

}  // namespace picard

// ---------------------------------------------------------------------------
// Envelope

/// {"kind": ..., "payload": ..., "schema_version": ...}
inline json envelope(std::string_view kind, json payload) {
  return {{"schema_version", schema_version}, {"kind", std::string(kind)}, {"payload", std::move(payload)}};
}

}  // namespace gapcert
