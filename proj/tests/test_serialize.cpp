#include "gapcert/serialize.hpp"

#include <gtest/gtest.h>

#include <fstream>

namespace gc = gapcert;
namespace cs = gapcert::cases;
using gc::Integer;
using gc::json;

TEST(Json, IntegerSpelling) {
  EXPECT_EQ(gc::integer_to_json(Integer(42)), json(42));
  EXPECT_EQ(gc::integer_to_json(Integer("9223372036854775807")), json(INT64_MAX));
  EXPECT_EQ(gc::integer_to_json(Integer("9223372036854775808")), json("9223372036854775808"));
  EXPECT_EQ(gc::integer_from_json(json("-123456789012345678901234567890")), Integer("-123456789012345678901234567890"));
  EXPECT_EQ(gc::integer_from_json(json(-5)), -5);
  EXPECT_THROW(gc::integer_from_json(json(1.5)), std::invalid_argument);
  EXPECT_THROW(gc::integer_from_json(json("12x")), std::invalid_argument);
}

TEST(Json, StatusRoundTrip) {
  for (auto [d, g] : std::vector<std::pair<int, int>>{{6, 100}, {6, 3}, {6, 26}, {2, 7}, {7, 40}}) {
    gc::StatusReport r{d, g, gc::status(d, g)};
    auto j = gc::to_json(r);
    EXPECT_EQ(gc::status_report_from_json(json::parse(j.dump())), r) << j.dump();
  }
  gc::StatusReport r{6, 100, gc::status(6, 100)};
  EXPECT_EQ(gc::to_json(r).dump(),
            R"({"certificate":{"delta":6,"n":5},"d":6,"g":100,"source":"SeveriInterval","verdict":"CertifiedNonGap"})");
}

TEST(Json, DecompositionRoundTrip) {
  for (int d = 4; d <= 12; ++d) {
    auto dec = gc::decompose(d);
    EXPECT_EQ(gc::decomposition_from_json(json::parse(gc::to_json(dec).dump())), dec) << d;
  }
  auto j = gc::to_json(gc::decompose(6));
  EXPECT_EQ(j["proved"], json::parse("[[0,6],[11,15]]"));
  EXPECT_EQ(j["unknown"], json::parse("[[26,26]]"));
  EXPECT_EQ(j["horizon"], 26);
}

TEST(Json, HugeDegreeUsesStrings) {
  Integer d("100000000000000000000");
  auto j = gc::to_json(gc::bounds(d));
  EXPECT_TRUE(j["coarse"].is_string());
  EXPECT_EQ(gc::bounds_report_from_json(j), gc::bounds(d));
  auto s = gc::to_json(gc::StatusReport{d, Integer("1000000000000000000000000000000000000000"),
                                        gc::status(d, Integer("1000000000000000000000000000000000000000"))});
  EXPECT_TRUE(s["g"].is_string());
}

TEST(Json, BoundsRoundTrip) {
  for (int d = 4; d <= 30; ++d) {
    auto b = gc::bounds(d);
    EXPECT_EQ(gc::bounds_report_from_json(json::parse(gc::to_json(b).dump())), b);
  }
  EXPECT_EQ(gc::to_json(gc::bounds(5)).dump(),
            R"({"coarse":19,"coarse_exact":16,"d":5,"first_contiguous_degree":2,"refined":2})");
}

TEST(Json, VerificationRoundTrip) {
  auto rep = cs::verify_all();
  EXPECT_EQ(cs::verification_from_json(json::parse(cs::to_json(rep).dump())), rep);
  for (const auto& c : cs::verify_kappa()) EXPECT_EQ(cs::check_from_json(cs::to_json(c)), c);
}

TEST(Json, CaseTableRoundTrip) {
  auto t = cs::builtin_cases();
  auto j = cs::case_table_to_json(t);
  EXPECT_EQ(j["schema"], gc::case_table_schema);
  EXPECT_EQ(cs::case_table_from_json(json::parse(j.dump())), t);
}

TEST(Json, CaseTableRejectsBadInput) {
  auto j = cs::case_table_to_json(cs::builtin_cases());
  auto bad = j;
  bad["schema"] = "other/9";
  EXPECT_THROW(cs::case_table_from_json(bad), std::invalid_argument);
  bad = j;
  bad["cases"][0]["mode"] = "Guess";
  EXPECT_THROW(cs::case_table_from_json(bad), std::invalid_argument);
  bad = j;
  bad["cases"][0]["variants"][0]["lattice"] = "no_such_surface";
  EXPECT_THROW(cs::case_table_from_json(bad), std::invalid_argument);
  bad = j;
  bad["cases"][0]["variants"][0]["rule"] = "magic";
  EXPECT_THROW(cs::case_table_from_json(bad), std::invalid_argument);
  EXPECT_THROW(cs::load_case_table("/nonexistent/cases.json"), std::invalid_argument);
}

TEST(Json, ShippedCaseTableMatchesBuiltin) {
  auto t = cs::load_case_table(GAPCERT_DATA_DIR "/cases.json");
  EXPECT_EQ(t, cs::builtin_cases());
  std::ifstream in(GAPCERT_DATA_DIR "/cases.json");
  json j = json::parse(in);
  EXPECT_EQ(j, cs::case_table_to_json(cs::builtin_cases()));
}

TEST(Json, EnvelopeAndCanonicalKeys) {
  auto e = gc::envelope("bounds", gc::to_json(gc::bounds(6)));
  EXPECT_EQ(e["schema_version"], gc::schema_version);
  EXPECT_EQ(e["kind"], "bounds");
  std::string s = e.dump();
  EXPECT_LT(s.find("\"kind\""), s.find("\"payload\""));
  EXPECT_LT(s.find("\"payload\""), s.find("\"schema_version\""));
  EXPECT_EQ(s.find('.'), std::string::npos);  // no floating point anywhere
}

TEST(Json, LatticeExportHasEveryBuiltin) {
  for (const auto& name : gc::picard::builtin_names()) {
    auto j = gc::picard::to_json(gc::picard::builtin(name));
    EXPECT_EQ(j["name"], name);
    EXPECT_EQ(j["basis"].size(), j["gram"].size());
  }
}
