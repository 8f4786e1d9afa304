#include "gapcert/exactint.hpp"
#include "gapcert/picard.hpp"
#include "gapcert/serialize.hpp"

#include <gtest/gtest.h>

#include <random>

namespace gc = gapcert;
namespace pc = gapcert::picard;
using pc::Coeff;
using pc::DivisorClass;

namespace {

Coeff dot(const pc::PicardLattice& L, const std::string& a, const std::string& b) {
  auto cls = [&](const std::string& x) { return x == "K" ? L.canonical() : L.cls(x); };
  return pc::intersect(L, cls(a), cls(b));
}

}  // namespace

TEST(Intersect, Examples) {
  auto f1 = pc::hirzebruch(1);
  EXPECT_EQ(pc::kappa(f1, f1.cls("H")), -5);
  EXPECT_EQ(pc::intersect(f1, DivisorClass::zero(2), f1.cls("H")), 0);

  auto b9 = pc::blowup_plane(9);
  EXPECT_EQ(pc::kappa(b9, b9.cls("H")), -2);
  EXPECT_EQ(-pc::kappa(b9, 6 * b9.cls("H")), 12);
}

TEST(Intersect, RankMismatch) {
  auto f1 = pc::hirzebruch(1);
  EXPECT_THROW(pc::intersect(f1, DivisorClass({1, 0, 0}), f1.cls("H")), std::invalid_argument);
  EXPECT_THROW(DivisorClass({1}) + DivisorClass({1, 2}), std::invalid_argument);
}

TEST(Intersect, Overflow) {
  auto f1 = pc::hirzebruch(1);
  DivisorClass huge({Coeff{1} << 40, Coeff{1} << 40});
  EXPECT_THROW(pc::intersect(f1, huge, huge), std::overflow_error);
}

TEST(Kappa, Examples) {
  auto cone = pc::elliptic_cone();
  EXPECT_EQ(pc::kappa(cone, 6 * cone.cls("H") - cone.cls("E")), -21);
  auto f3 = pc::hirzebruch(3);
  EXPECT_EQ(pc::kappa(f3, 6 * f3.cls("H") - f3.cls("E")), -31);
  auto g2 = pc::genus2_scroll();
  EXPECT_EQ(pc::kappa(g2, 6 * g2.cls("H") - g2.cls("E")), -18);
}

TEST(Kappa, Linearity) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Coeff> coef(-50, 50);
  for (const auto& name : pc::builtin_names()) {
    auto L = pc::builtin(name);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Coeff> x(L.rank()), y(L.rank());
      for (auto& v : x) v = coef(rng);
      for (auto& v : y) v = coef(rng);
      DivisorClass g1(x), g2(y);
      Coeff a = coef(rng), b = coef(rng);
      EXPECT_EQ(pc::kappa(L, a * g1 + b * g2), a * pc::kappa(L, g1) + b * pc::kappa(L, g2)) << name;
    }
  }
}

// -3d, -3d-3, -5d, -5d-1, -5d for the cubic cases i, ii.a with the vertex,
// ii.b without and with the vertex, and iii.
TEST(Kappa, CubicFormulas) {
  auto b6 = pc::blowup_plane(6);
  auto cone = pc::elliptic_cone();
  auto f3 = pc::hirzebruch(3);
  auto f1 = pc::hirzebruch(1);
  for (Coeff d = 5; d <= 20; ++d) {
    EXPECT_EQ(pc::kappa(b6, d * b6.cls("H")), -3 * d);
    EXPECT_EQ(pc::kappa(cone, d * cone.cls("H")), -3 * d);
    EXPECT_EQ(pc::kappa(cone, d * cone.cls("H") - cone.cls("E")), -3 * d - 3);
    EXPECT_EQ(pc::kappa(f3, d * f3.cls("H")), -5 * d);
    EXPECT_EQ(pc::kappa(f3, d * f3.cls("H") - f3.cls("E")), -5 * d - 1);
    EXPECT_EQ(pc::kappa(f1, d * f1.cls("H")), -5 * d);
  }
}

TEST(V0, Examples) {
  EXPECT_EQ(pc::v0(15, 0), 15);
  EXPECT_EQ(pc::v0(14, -24), 37);
  EXPECT_EQ(pc::v0(11, -18), 28);
  EXPECT_EQ(pc::v0(5, 3), 5);
  EXPECT_THROW(pc::v0(-1, 0), std::invalid_argument);
}

TEST(Builtin, Examples) {
  auto cone = pc::quartic_cone();
  EXPECT_EQ(dot(cone, "E0", "E0"), -4);
  EXPECT_EQ(cone.cls("E"), 2 * cone.cls("E0"));
  // D_E = E0 for the vertex-through curve: -E.D_E = -2 E0^2 = 8.
  EXPECT_EQ(-pc::intersect(cone, cone.cls("E"), cone.cls("E0")), 8);

  EXPECT_EQ(dot(pc::hirzebruch(3), "K", "K"), 8);

  auto segre = pc::segre();
  EXPECT_EQ(dot(segre, "K", "K"), 4);
  EXPECT_EQ(-pc::kappa(segre, -6 * segre.canonical()), 24);
}

TEST(Builtin, EllipticRuledA) {
  auto L = pc::elliptic_ruled_a();
  EXPECT_EQ(dot(L, "Xi1", "Xi1"), -1);
  EXPECT_EQ(dot(L, "Xi2", "Xi2"), -1);
  EXPECT_EQ(dot(L, "H", "Xi1"), 0);
  EXPECT_EQ(dot(L, "H", "Xi2"), 0);
  EXPECT_EQ(dot(L, "H", "F"), 3);
  EXPECT_EQ(L.canonical(), -(L.cls("Xi1") + L.cls("Xi2")));
  EXPECT_EQ(dot(L, "K", "K"), -2);
  EXPECT_EQ(dot(L, "H", "H"), 4);
}

TEST(Builtin, ParsesFamilies) {
  EXPECT_EQ(pc::builtin("hirzebruch(2)").name(), "hirzebruch(2)");
  EXPECT_EQ(pc::builtin("blowup_plane(4)").rank(), 5u);
  EXPECT_EQ(pc::builtin("smooth_surface(5)").gram()[0][0], 5);
  EXPECT_THROW(pc::builtin("hirzebruch(4)"), std::invalid_argument);
  EXPECT_THROW(pc::builtin("hirzebruch(x)"), std::invalid_argument);
  EXPECT_THROW(pc::builtin("blowup_plane(10)"), std::invalid_argument);
  EXPECT_THROW(pc::builtin("no_such_surface"), std::invalid_argument);
  EXPECT_THROW(pc::hirzebruch(1).cls("Q"), std::out_of_range);
}

TEST(Builtin, DocumentedCanonicalSquares) {
  for (const auto& name : pc::builtin_names()) {
    auto L = pc::builtin(name);
    ASSERT_TRUE(L.info().documented_k_squared.has_value()) << name;
    EXPECT_EQ(pc::self_intersection(L, L.canonical()), *L.info().documented_k_squared) << name;
    for (std::size_t i = 0; i < L.rank(); ++i)
      for (std::size_t j = 0; j < L.rank(); ++j) EXPECT_EQ(L.gram()[i][j], L.gram()[j][i]);
  }
}

// Normal quartic models: H^2 = 4, H.K = 0, p_a(dH) = g_{4,d}. Normal cubic
// models: H^2 = 3, K = -H on multiples of H, p_a(dH) = g_{3,d}.
TEST(Builtin, AdjunctionMatchesGenusFormula) {
  int cubic = 0, quartic = 0;
  for (const auto& name : pc::builtin_names()) {
    auto L = pc::builtin(name);
    const auto model = L.info().model;
    if (model != pc::SurfaceModel::NormalCubic && model != pc::SurfaceModel::NormalQuartic) continue;
    const Coeff deg = model == pc::SurfaceModel::NormalCubic ? 3 : 4;
    (deg == 3 ? cubic : quartic)++;
    EXPECT_EQ(dot(L, "H", "H"), deg) << name;
    EXPECT_EQ(dot(L, "H", "K"), deg == 4 ? 0 : -3) << name;
    for (Coeff d = 1; d <= 30; ++d)
      EXPECT_EQ(gc::Integer(pc::adjunction_genus(L, d * L.cls("H"))), gc::arithmetic_genus(deg, d)) << name << " d=" << d;
  }
  EXPECT_EQ(cubic, 2);
  EXPECT_EQ(quartic, 9);
}

TEST(Builtin, QuarticClassRelations) {
  auto dp2 = pc::dp2_sep();
  EXPECT_EQ(dot(dp2, "G", "H"), 4);
  EXPECT_EQ(dp2.cls("G") - dp2.cls("E"), dp2.cls("Delta"));

  auto dp1 = pc::dp1_sep();
  EXPECT_EQ(dot(dp1, "Lambda", "Lambda"), 1);
  EXPECT_EQ(dot(dp1, "Lambda", "H"), 3);
  EXPECT_EQ(dot(dp1, "H", "H"), 4);

  auto monoid = pc::monoid_sep();
  EXPECT_EQ(monoid.cls("E1") + monoid.cls("E2"), monoid.cls("E"));
  EXPECT_EQ(monoid.cls("Lambda"), monoid.cls("H") - monoid.cls("E"));
  EXPECT_EQ(dot(monoid, "Lambda", "H"), 4);

  auto rb = pc::elliptic_ruled_b();
  EXPECT_EQ(dot(rb, "E1", "E1"), -2);
  EXPECT_EQ(dot(rb, "E2", "E2"), -2);
  EXPECT_EQ(dot(rb, "F", "H"), 2);
  for (const char* c : {"F1", "F2"}) {
    EXPECT_EQ(dot(rb, "K", c), 0);
    EXPECT_EQ(dot(rb, c, c), -2);
    EXPECT_EQ(dot(rb, "F", c), 0);
  }

  auto rc = pc::elliptic_ruled_c();
  EXPECT_EQ(dot(rc, "K", "Delta1p"), 0);
  EXPECT_EQ(dot(rc, "Delta1p", "Delta1p"), -2);
  EXPECT_EQ(dot(rc, "Xip", "Xip"), -1);

  auto f1c = pc::f1_double_cover();
  EXPECT_EQ(dot(f1c, "L", "H"), 4);
  EXPECT_EQ(dot(f1c, "Ep", "H"), 0);

  auto b9 = pc::blowup_plane(9);
  for (const char* a : {"A1", "A2"}) {
    EXPECT_EQ(dot(b9, a, a), -3);
    EXPECT_EQ(dot(b9, "K", a), 1);
    EXPECT_EQ(dot(b9, "Lambda", a), 1);
    EXPECT_EQ(dot(b9, "H", a), 0);
  }
  EXPECT_EQ(dot(b9, "H", "H"), 4);
}

TEST(Builtin, ValidatesConstruction) {
  EXPECT_THROW(pc::PicardLattice("bad", {"a", "b"}, {{0, 1}, {2, 0}}, DivisorClass({0, 0}), {}), std::invalid_argument);
  EXPECT_THROW(pc::PicardLattice("bad", {"a"}, {{1}}, DivisorClass({0, 0}), {}), std::invalid_argument);
  EXPECT_THROW(pc::PicardLattice("bad", {}, {}, DivisorClass(), {}), std::invalid_argument);
}

TEST(Builtin, JsonExport) {
  auto j = pc::to_json(pc::hirzebruch(3));
  EXPECT_EQ(j["name"], "hirzebruch(3)");
  EXPECT_EQ(j["gram"], gc::json::parse("[[-3,1],[1,0]]"));
  EXPECT_EQ(j["canonical"], gc::json::parse("[-2,-5]"));
  EXPECT_EQ(j["k_squared"], 8);
  EXPECT_EQ(j["named"]["H"], gc::json::parse("[1,3]"));
}
