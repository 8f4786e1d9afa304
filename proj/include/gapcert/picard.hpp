#pragma once

// Numerical Picard lattices of the desingularized cubic and quartic
// surfaces that can contain the cutting curve, with exact intersection
// numbers. Only numerical data is modelled: a basis, its integer Gram
// matrix, the canonical class and a set of named classes.

#include "gapcert/exactint.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gapcert::picard {

using Coeff = std::int64_t;

namespace detail {

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("picard: intersection overflow");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("picard: intersection overflow");
  return r;
}

}  // namespace detail

class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {}

  static DivisorClass zero(std::size_t rank) { return DivisorClass(std::vector<Coeff>(rank, 0)); }
  static DivisorClass unit(std::size_t rank, std::size_t i) {
    DivisorClass c = zero(rank);
    c.coeffs_.at(i) = 1;
    return c;
  }

  std::size_t rank() const noexcept { return coeffs_.size(); }
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  Coeff operator[](std::size_t i) const { return coeffs_.at(i); }

  DivisorClass& operator+=(const DivisorClass& o) {
    require_same_rank(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = detail::checked_add(coeffs_[i], o.coeffs_[i]);
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& o) { return *this += -o; }
  DivisorClass operator-() const {
    DivisorClass r(*this);
    for (auto& c : r.coeffs_) c = detail::checked_mul(c, -1);
    return r;
  }
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(Coeff k, DivisorClass a) {
    for (auto& c : a.coeffs_) c = detail::checked_mul(c, k);
    return a;
  }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  void require_same_rank(const DivisorClass& o) const {
    if (o.rank() != rank()) throw std::invalid_argument("divisor class: rank mismatch");
  }

  std::vector<Coeff> coeffs_;
};

/// What the lattice models, used to pick the adjunction cross-check.
enum class SurfaceModel {
  Other,
  NormalCubic,    // K = -H numerically on H-curves: p_a(dH) = g_{3,d}
  NormalQuartic,  // H.K = 0: p_a(dH) = g_{4,d}
  NonNormal,      // desingularization of a non-normal surface; no adjunction identity
};

struct LatticeInfo {
  std::string citation;
  std::optional<Coeff> documented_k_squared;
  SurfaceModel model = SurfaceModel::Other;
};

class PicardLattice {
 public:
  PicardLattice(std::string name, std::vector<std::string> basis, std::vector<std::vector<Coeff>> gram,
                DivisorClass canonical, std::map<std::string, DivisorClass> named, LatticeInfo info = {})
      : name_(std::move(name)),
        basis_(std::move(basis)),
        gram_(std::move(gram)),
        canonical_(std::move(canonical)),
        named_(std::move(named)),
        info_(std::move(info)) {
    const std::size_t r = basis_.size();
    if (r == 0) throw std::invalid_argument("lattice " + name_ + ": rank must be positive");
    if (gram_.size() != r) throw std::invalid_argument("lattice " + name_ + ": Gram matrix has wrong size");
    for (std::size_t i = 0; i < r; ++i) {
      if (gram_[i].size() != r) throw std::invalid_argument("lattice " + name_ + ": Gram matrix is not square");
      for (std::size_t j = 0; j < i; ++j)
        if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("lattice " + name_ + ": Gram matrix not symmetric");
    }
    if (canonical_.rank() != r) throw std::invalid_argument("lattice " + name_ + ": canonical class has wrong rank");
    for (const auto& [label, cls] : named_)
      if (cls.rank() != r) throw std::invalid_argument("lattice " + name_ + ": class " + label + " has wrong rank");
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  const std::vector<std::vector<Coeff>>& gram() const noexcept { return gram_; }
  const DivisorClass& canonical() const noexcept { return canonical_; }
  const std::map<std::string, DivisorClass>& named() const noexcept { return named_; }
  const LatticeInfo& info() const noexcept { return info_; }

  bool has(std::string_view label) const { return named_.find(std::string(label)) != named_.end(); }
  const DivisorClass& cls(std::string_view label) const {
    auto it = named_.find(std::string(label));
    if (it == named_.end()) throw std::out_of_range("lattice " + name_ + ": no class named '" + std::string(label) + "'");
    return it->second;
  }

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<std::vector<Coeff>> gram_;
  DivisorClass canonical_;
  std::map<std::string, DivisorClass> named_;
  LatticeInfo info_;
};

/// a^T . Gram . b
inline Coeff intersect(const PicardLattice& L, const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != L.rank() || b.rank() != L.rank())
    throw std::invalid_argument("intersect: class rank does not match lattice " + L.name());
  Coeff total = 0;
  for (std::size_t i = 0; i < L.rank(); ++i) {
    if (a[i] == 0) continue;
    Coeff row = 0;
    for (std::size_t j = 0; j < L.rank(); ++j)
      row = detail::checked_add(row, detail::checked_mul(L.gram()[i][j], b[j]));
    total = detail::checked_add(total, detail::checked_mul(a[i], row));
  }
  return total;
}

inline Coeff self_intersection(const PicardLattice& L, const DivisorClass& a) { return intersect(L, a, a); }

/// kappa = K_S . Gamma
inline Coeff kappa(const PicardLattice& L, const DivisorClass& gamma) { return intersect(L, L.canonical(), gamma); }

/// Bound v <= v_0 = max{g, g - 1 - kappa} on the dimension of a family of
/// irreducible genus-g curves with K.Gamma = kappa.
inline Integer v0(const Integer& g, const Integer& kappa_value) {
  if (g < 0) throw std::invalid_argument("v0: g must be >= 0");
  Integer alt = g - 1 - kappa_value;
  return alt > g ? alt : g;
}

/// Adjunction p_a(C) = (C^2 + K.C)/2 + 1.
inline Coeff adjunction_genus(const PicardLattice& L, const DivisorClass& c) {
  Coeff twice = detail::checked_add(self_intersection(L, c), kappa(L, c));
  if (twice % 2 != 0) throw std::logic_error("adjunction_genus: C^2 + K.C is odd in lattice " + L.name());
  return twice / 2 + 1;
}

namespace detail {

/// Small helper for writing classes as {label, coefficient} lists.
class Basis {
 public:
  explicit Basis(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  DivisorClass operator()(std::initializer_list<std::pair<std::string_view, Coeff>> terms) const {
    DivisorClass c = DivisorClass::zero(labels_.size());
    for (const auto& [label, k] : terms) c += k * DivisorClass::unit(labels_.size(), index(label));
    return c;
  }

  DivisorClass sum(std::string_view prefix, int first, int last) const {
    DivisorClass c = DivisorClass::zero(labels_.size());
    for (int i = first; i <= last; ++i) c += DivisorClass::unit(labels_.size(), index(std::string(prefix) + std::to_string(i)));
    return c;
  }

  std::size_t index(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw std::logic_error("basis has no label " + std::string(label));
  }

 private:
  std::vector<std::string> labels_;
};

inline std::vector<std::string> indexed(std::string_view prefix, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

/// Blowup of P^2 at the points listed in `groups`: Gram diag(1, -1, ..., -1)
/// in the basis (L, total transforms of the exceptional curves).
inline std::pair<Basis, std::vector<std::vector<Coeff>>> plane_blowup(
    std::initializer_list<std::pair<std::string_view, int>> groups) {
  std::vector<std::string> labels{"L"};
  for (const auto& [prefix, count] : groups) {
    if (count == 1) {
      labels.emplace_back(prefix);
    } else {
      auto more = indexed(prefix, count);
      labels.insert(labels.end(), more.begin(), more.end());
    }
  }
  std::vector<std::vector<Coeff>> gram(labels.size(), std::vector<Coeff>(labels.size(), 0));
  gram[0][0] = 1;
  for (std::size_t i = 1; i < labels.size(); ++i) gram[i][i] = -1;
  return {Basis(std::move(labels)), std::move(gram)};
}

/// Ruled surface numerics in the basis (section C0, fibre F), C0^2 = c0sq.
inline std::vector<std::vector<Coeff>> ruled_gram(Coeff c0sq) { return {{c0sq, 1}, {1, 0}}; }

/// Extend a Gram matrix by `count` new mutually orthogonal (-1)-classes.
inline std::vector<std::vector<Coeff>> with_exceptionals(std::vector<std::vector<Coeff>> g, int count) {
  const std::size_t old = g.size();
  for (auto& row : g) row.resize(old + count, 0);
  for (int k = 0; k < count; ++k) {
    std::vector<Coeff> row(old + count, 0);
    row[old + k] = -1;
    g.push_back(std::move(row));
  }
  return g;
}

inline std::optional<int> parse_parameter(std::string_view name, std::string_view family) {
  if (name.size() < family.size() + 3 || name.substr(0, family.size()) != family) return std::nullopt;
  if (name[family.size()] != '(' || name.back() != ')') return std::nullopt;
  std::string_view digits = name.substr(family.size() + 1, name.size() - family.size() - 2);
  if (digits.empty() || digits.size() > 6) return std::nullopt;
  int value = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') return std::nullopt;
    value = value * 10 + (ch - '0');
  }
  return value;
}

}  // namespace detail

/// Hirzebruch surface F_e, e in {0,1,2,3}, basis (E, F) with E^2 = -e.
/// H is the hyperplane class of the surface these model: F_1 with E+2F (cubic
/// scroll), F_3 with E+3F (cone over a nodal cubic), F_0 with E+2F and
/// F_2 with E+3F (projections to P^3 of the quartic scrolls in P^5).
inline PicardLattice hirzebruch(int e) {
  if (e < 0 || e > 3) throw std::invalid_argument("hirzebruch(e): e must be in {0,1,2,3}");
  detail::Basis b({"E", "F"});
  const Coeff h_fibres = (e == 0 || e == 1) ? 2 : 3;
  std::map<std::string, DivisorClass> named{
      {"E", b({{"E", 1}})},
      {"F", b({{"F", 1}})},
      {"H", b({{"E", 1}, {"F", h_fibres}})},
  };
  return PicardLattice("hirzebruch(" + std::to_string(e) + ")", b.labels(), detail::ruled_gram(-e),
                       b({{"E", -2}, {"F", -(e + 2)}}), std::move(named),
                       {"rational ruled surface F_e; cubic cases (ii,b) and (iii), quartic case (c)", 8,
                        SurfaceModel::NonNormal});
}

/// P^2 blown up at r points. H = -K (anticanonical del Pezzo model) for
/// r <= 8; for r = 9, H = 4L - 2E1 - (E2 + ... + E9), the plane model of
/// the non-normal rational quartic with a double line, together with the
/// conic pencil Lambda = L - E1 and two components A1, A2 of rational
/// triple-point cycles (A^2 = -3, K.A = Lambda.A = 1, H.A = 0).
inline PicardLattice blowup_plane(int r) {
  if (r < 0 || r > 9) throw std::invalid_argument("blowup_plane(r): r must be in [0, 9]");
  std::vector<std::string> labels{"L"};
  for (int i = 1; i <= r; ++i) labels.push_back("E" + std::to_string(i));
  detail::Basis b(labels);
  std::vector<std::vector<Coeff>> gram(labels.size(), std::vector<Coeff>(labels.size(), 0));
  gram[0][0] = 1;
  for (int i = 1; i <= r; ++i) gram[i][i] = -1;

  DivisorClass k = b({{"L", -3}});
  if (r > 0) k += b.sum("E", 1, r);

  std::map<std::string, DivisorClass> named{{"L", b({{"L", 1}})}};
  for (int i = 1; i <= r; ++i) named.emplace("E" + std::to_string(i), b({{labels[i], 1}}));
  SurfaceModel model = SurfaceModel::Other;
  if (r == 9) {
    named.emplace("H", b({{"L", 4}, {"E1", -2}}) - b.sum("E", 2, 9));
    named.emplace("Lambda", b({{"L", 1}, {"E1", -1}}));
    named.emplace("A1", b({{"E1", 1}, {"E2", -1}, {"E3", -1}}));
    named.emplace("A2", b({{"L", 1}, {"E4", -1}, {"E5", -1}, {"E6", -1}, {"E7", -1}}));
    model = SurfaceModel::NonNormal;
  } else {
    named.emplace("H", -k);
    if (r == 6) model = SurfaceModel::NormalCubic;
  }
  return PicardLattice("blowup_plane(" + std::to_string(r) + ")", labels, std::move(gram), std::move(k),
                       std::move(named),
                       {r == 9 ? "rational non-normal quartic, case (b): H = 4L - 2E1 - sum E_i"
                               : "P^2 blown up at r points, H = -K (r = 6: cubic with Du Val points)",
                        9 - r, model});
}

/// Cone over a smooth plane cubic: P_Y(O + O(1)) over an elliptic curve,
/// vertex section E with E^2 = -3, H = E + 3F, K = -E - H.
inline PicardLattice elliptic_cone() {
  detail::Basis b({"E", "F"});
  DivisorClass e = b({{"E", 1}}), f = b({{"F", 1}});
  DivisorClass h = e + 3 * f;
  return PicardLattice("elliptic_cone", b.labels(), detail::ruled_gram(-3), -e - h,
                       {{"E", e}, {"F", f}, {"H", h}},
                       {"cubic cone over a smooth plane cubic, case (ii,a)", 0, SurfaceModel::NormalCubic});
}

/// Cone over a smooth plane quartic: P(O + omega_Y) over a genus-3 curve,
/// vertex section E0 with E0^2 = -4, H = E0 + 4F, K = -2 E0.
inline PicardLattice quartic_cone() {
  detail::Basis b({"E0", "F"});
  DivisorClass e0 = b({{"E0", 1}}), f = b({{"F", 1}});
  return PicardLattice("quartic_cone", b.labels(), detail::ruled_gram(-4), -2 * e0,
                       {{"E0", e0}, {"F", f}, {"H", e0 + 4 * f}, {"E", 2 * e0}},
                       {"normal quartic cone over a smooth plane quartic", -16, SurfaceModel::NormalQuartic});
}

/// Quartic with at most rational double points: the desingularization is K3.
inline PicardLattice k3_quartic() {
  return PicardLattice("k3_quartic", {"H"}, {{4}}, DivisorClass({0}), {{"H", DivisorClass({1})}},
                       {"quartic with only Du Val singularities (K3 desingularization)", 0,
                        SurfaceModel::NormalQuartic});
}

/// Smooth degree-d surface in P^3 with Picard group generated by H:
/// H^2 = d, K = (d - 4) H.
inline PicardLattice smooth_surface(int d) {
  if (d < 1) throw std::invalid_argument("smooth_surface(d): d must be >= 1");
  const Coeff k = d - 4;
  return PicardLattice("smooth_surface(" + std::to_string(d) + ")", {"H"}, {{d}}, DivisorClass({k}),
                       {{"H", DivisorClass({1})}},
                       {"smooth surface of degree d in P^3 (Noether-Lefschetz general)", k * k * d,
                        SurfaceModel::Other});
}

/// Separation of (X, -2K_X, G) with X a weak del Pezzo surface of degree 2
/// (P^2 blown up at 7 points) and 4 further blowups D1..D4 on B . G.
/// H = 6L - 2 sum E - sum D, E = G - sum D = -K, G = 3L - sum E nef.
inline PicardLattice dp2_sep() {
  auto [b, gram] = detail::plane_blowup({{"E", 7}, {"D", 4}});
  DivisorClass g = b({{"L", 3}}) - b.sum("E", 1, 7);
  DivisorClass delta = b.sum("D", 1, 4);
  DivisorClass e = g - delta;
  DivisorClass h = 2 * g - delta;
  return PicardLattice("dp2_sep", b.labels(), std::move(gram), -e,
                       {{"H", h}, {"E", e}, {"G", g}, {"Delta", delta}},
                       {"normal rational quartic, case (a): separation of a weak del Pezzo surface of degree 2", -2,
                        SurfaceModel::NormalQuartic});
}

/// Weak del Pezzo surface Z of degree 1 (P^2 blown up at 8 points), blown up
/// at q (Xi) and then at the base point q1' of |3G + Xi| (Delta).
/// Lambda = 3L - sum E (the anticanonical pencil of Z), B = 3G + Xi with
/// G = Lambda - Xi, H = B - Delta, E = Lambda - Xi - Delta = -K.
inline PicardLattice dp1_sep() {
  auto [b, gram] = detail::plane_blowup({{"E", 8}, {"Xi", 1}, {"Delta", 1}});
  DivisorClass lambda = b({{"L", 3}}) - b.sum("E", 1, 8);
  DivisorClass xi = b({{"Xi", 1}}), delta = b({{"Delta", 1}});
  DivisorClass g = lambda - xi;
  DivisorClass h = 3 * g + xi - delta;
  DivisorClass e = lambda - xi - delta;
  return PicardLattice("dp1_sep", b.labels(), std::move(gram), -e,
                       {{"H", h}, {"E", e}, {"Lambda", lambda}, {"Xi", xi}, {"Delta", delta}, {"G", g}},
                       {"normal rational quartic, case (b): separation of a weak del Pezzo surface of degree 1", -1,
                        SurfaceModel::NormalQuartic});
}

/// Normal rational quartic obtained from a double cover of F_1: basis
/// (L, E') with L^2 = 0, L.E' = 2, E'^2 = -1; H = L + 2E', K = -E'.
/// Further components of E are (-2)-curves orthogonal to K and omitted.
inline PicardLattice f1_double_cover() {
  detail::Basis b({"L", "Ep"});
  DivisorClass l = b({{"L", 1}}), ep = b({{"Ep", 1}});
  return PicardLattice("f1_double_cover", b.labels(), {{0, 2}, {2, -1}}, -ep,
                       {{"L", l}, {"Ep", ep}, {"E", ep}, {"H", l + 2 * ep}},
                       {"normal rational quartic, case (c): double cover of F_1, E' the non-(-2) component", -1,
                        SurfaceModel::NormalQuartic});
}

/// Quartic monoid: separation of (P^2, quartic B, cubic G) in the 12 points
/// of B . G. G is taken as line + conic: E1 = L - D1..D4, E2 = 2L - D5..D12.
/// H = 4L - sum D, E = 3L - sum D = -K, Lambda = H - E = L.
inline PicardLattice monoid_sep() {
  auto [b, gram] = detail::plane_blowup({{"D", 12}});
  DivisorClass all = b.sum("D", 1, 12);
  DivisorClass h = b({{"L", 4}}) - all;
  DivisorClass e = b({{"L", 3}}) - all;
  DivisorClass e1 = b({{"L", 1}}) - b.sum("D", 1, 4);
  DivisorClass e2 = b({{"L", 2}}) - b.sum("D", 5, 12);
  return PicardLattice("monoid_sep", b.labels(), std::move(gram), -e,
                       {{"H", h}, {"E", e}, {"Lambda", h - e}, {"E1", e1}, {"E2", e2}},
                       {"quartic monoid (triple point): separation of a plane quartic and cubic", -3,
                        SurfaceModel::NormalQuartic});
}

/// P(O(q1) + O(q2)) over an elliptic curve (sections Xi_i with Xi_i^2 = 0,
/// numerically C0) blown up at x_i in Xi_i. Basis (C0, F, D1, D2).
/// H = 3C0 + F - D1 - D2, Xi'_i = C0 - D_i, E = Xi'_1 + Xi'_2 = -K.
inline PicardLattice elliptic_ruled_a() {
  detail::Basis b({"C0", "F", "D1", "D2"});
  auto gram = detail::with_exceptionals(detail::ruled_gram(0), 2);
  DivisorClass xi1 = b({{"C0", 1}, {"D1", -1}}), xi2 = b({{"C0", 1}, {"D2", -1}});
  DivisorClass e = xi1 + xi2;
  return PicardLattice("elliptic_ruled_a", b.labels(), std::move(gram), -e,
                       {{"H", b({{"C0", 3}, {"F", 1}, {"D1", -1}, {"D2", -1}})},
                        {"E", e},
                        {"Xi1", xi1},
                        {"Xi2", xi2},
                        {"F", b({{"F", 1}})}},
                       {"normal elliptic ruled quartic, case (a): two simple elliptic points", -2,
                        SurfaceModel::NormalQuartic});
}

/// P(O + A), deg A = 2, over an elliptic curve: Xi1^2 = -2, Xi2 in |Xi1 + 2F|,
/// blown up at the 4 points of B . Xi2 (D1..D4). Basis (Xi1, F, D1..D4).
/// E1 = Xi1, E2 = Xi1 + 2F - sum D, H = 2Xi1 + 4F - sum D, K = -(E1 + E2).
/// F1 = F - D1 - D2 and F2 = F - D3 - D4 are the (-2)-curves of the
/// one-point configuration (Xi2 = Xi1 + two fibres).
inline PicardLattice elliptic_ruled_b() {
  detail::Basis b({"Xi1", "F", "D1", "D2", "D3", "D4"});
  auto gram = detail::with_exceptionals(detail::ruled_gram(-2), 4);
  DivisorClass ds = b.sum("D", 1, 4);
  DivisorClass e1 = b({{"Xi1", 1}});
  DivisorClass e2 = b({{"Xi1", 1}, {"F", 2}}) - ds;
  return PicardLattice("elliptic_ruled_b", b.labels(), std::move(gram), -(e1 + e2),
                       {{"H", b({{"Xi1", 2}, {"F", 4}}) - ds},
                        {"E", e1 + e2},
                        {"E1", e1},
                        {"E2", e2},
                        {"F", b({{"F", 1}})},
                        {"F1", b({{"F", 1}, {"D1", -1}, {"D2", -1}})},
                        {"F2", b({{"F", 1}, {"D3", -1}, {"D4", -1}})}},
                       {"normal elliptic ruled quartic, case (b): pencil of conics", -4,
                        SurfaceModel::NormalQuartic});
}

/// P(E_xi) for the non-split self-extension of O(q), Xi0^2 = 0, blown up at
/// b = Xi0 . F_q (e1) and at the infinitely near point b1 on the exceptional
/// curve (e2). Xi' = Xi0 - e1, Delta1' = e1 - e2, H = 3Xi0 + F - e1 - e2,
/// E = 2Xi' + Delta1' = -K.
inline PicardLattice elliptic_ruled_c() {
  detail::Basis b({"Xi0", "F", "e1", "e2"});
  auto gram = detail::with_exceptionals(detail::ruled_gram(0), 2);
  DivisorClass xip = b({{"Xi0", 1}, {"e1", -1}});
  DivisorClass d1p = b({{"e1", 1}, {"e2", -1}});
  DivisorClass e = 2 * xip + d1p;
  return PicardLattice("elliptic_ruled_c", b.labels(), std::move(gram), -e,
                       {{"H", b({{"Xi0", 3}, {"F", 1}, {"e1", -1}, {"e2", -1}})},
                        {"E", e},
                        {"Xip", xip},
                        {"Delta1p", d1p},
                        {"Fq", b({{"F", 1}, {"e1", -1}})},
                        {"F", b({{"F", 1}})}},
                       {"normal elliptic ruled quartic, case (c): one irrational point with p_g = 2", -2,
                        SurfaceModel::NormalQuartic});
}

/// Non-normal quartic cone over a nodal or cuspidal plane quartic:
/// P(O + L) over the genus-2 normalization, E^2 = -4, H = E + 4F,
/// K = -2E - 2F.
inline PicardLattice genus2_scroll() {
  detail::Basis b({"E", "F"});
  DivisorClass e = b({{"E", 1}}), f = b({{"F", 1}});
  return PicardLattice("genus2_scroll", b.labels(), detail::ruled_gram(-4), -2 * e - 2 * f,
                       {{"E", e}, {"F", f}, {"H", e + 4 * f}},
                       {"non-normal genus-2 scroll (cone over a singular plane quartic)", -8,
                        SurfaceModel::NonNormal});
}

namespace detail {

inline PicardLattice elliptic_scroll(std::string name, std::string citation) {
  Basis b({"D1", "F"});
  DivisorClass d1 = b({{"D1", 1}}), f = b({{"F", 1}});
  return PicardLattice(std::move(name), b.labels(), ruled_gram(0), -2 * d1,
                       {{"D1", d1}, {"F", f}, {"H", d1 + 2 * f}}, {std::move(citation), 0, SurfaceModel::NonNormal});
}

}  // namespace detail

/// Non-normal elliptic scroll with two skew double lines: P(O + N), N of degree 0.
inline PicardLattice elliptic_scroll_a() {
  return detail::elliptic_scroll("elliptic_scroll_a", "non-normal elliptic scroll, case (a): two skew double lines");
}

/// Non-normal elliptic scroll with one double line: P(E) for the non-split
/// self-extension of O.
inline PicardLattice elliptic_scroll_b() {
  return detail::elliptic_scroll("elliptic_scroll_b", "non-normal elliptic scroll, case (b): one double line");
}

/// Weak del Pezzo surface of degree 4 (P^2 blown up at 5 points), H = -K,
/// projected from P^4 to the Segre quartic.
inline PicardLattice segre() {
  PicardLattice base = blowup_plane(5);
  return PicardLattice("segre", base.basis(), base.gram(), base.canonical(), base.named(),
                       {"Segre quartic: projection of a degree-4 del Pezzo surface", 4, SurfaceModel::NonNormal});
}

/// P^2 embedded by |2L| (Steiner Roman surface after projection).
inline PicardLattice veronese() {
  return PicardLattice("veronese", {"L"}, {{1}}, DivisorClass({-3}),
                       {{"L", DivisorClass({1})}, {"H", DivisorClass({2})}},
                       {"Veronese surface projected to the Steiner Roman surface", 9, SurfaceModel::NonNormal});
}

inline std::vector<std::string> builtin_names() {
  return {"hirzebruch(0)",    "hirzebruch(1)",    "hirzebruch(2)",     "hirzebruch(3)",
          "elliptic_cone",    "blowup_plane(6)",  "blowup_plane(9)",   "k3_quartic",
          "quartic_cone",     "dp2_sep",          "dp1_sep",           "f1_double_cover",
          "monoid_sep",       "elliptic_ruled_a", "elliptic_ruled_b",  "elliptic_ruled_c",
          "genus2_scroll",    "elliptic_scroll_a", "elliptic_scroll_b", "segre",
          "veronese"};
}

inline PicardLattice builtin(std::string_view name) {
  if (auto e = detail::parse_parameter(name, "hirzebruch")) return hirzebruch(*e);
  if (auto r = detail::parse_parameter(name, "blowup_plane")) return blowup_plane(*r);
  if (auto d = detail::parse_parameter(name, "smooth_surface")) return smooth_surface(*d);
  if (name == "elliptic_cone") return elliptic_cone();
  if (name == "quartic_cone") return quartic_cone();
  if (name == "k3_quartic") return k3_quartic();
  if (name == "dp2_sep") return dp2_sep();
  if (name == "dp1_sep") return dp1_sep();
  if (name == "f1_double_cover") return f1_double_cover();
  if (name == "monoid_sep") return monoid_sep();
  if (name == "elliptic_ruled_a") return elliptic_ruled_a();
  if (name == "elliptic_ruled_b") return elliptic_ruled_b();
  if (name == "elliptic_ruled_c") return elliptic_ruled_c();
  if (name == "genus2_scroll") return genus2_scroll();
  if (name == "elliptic_scroll_a") return elliptic_scroll_a();
  if (name == "elliptic_scroll_b") return elliptic_scroll_b();
  if (name == "segre") return segre();
  if (name == "veronese") return veronese();
  throw std::invalid_argument("unknown lattice '" + std::string(name) + "'");
}

}  // namespace gapcert::picard
