#pragma once

// Closed-form integer invariants of complete-intersection curves on a
// degree-d surface X in P^3:
//
//   N_d     = dim |O_P3(d)|                 = C(d+3, 3) - 1
//   l_{d,n} = dim |O_X(n)|                  = N_n                 (n < d)
//                                           = N_n - N_{n-d} - 1   (n >= d)
//   g_{d,n} = arithmetic genus of X . F_n   = d n (d+n-4) / 2 + 1
//
// Everything is exact; no floating point.

#include "gapcert/integer.hpp"

#include <stdexcept>

namespace gapcert {

/// Surface degree d paired with the degree n of the cutting surface.
struct DegreePair {
  Integer d;
  Integer n;

  DegreePair(Integer d_, Integer n_) : d(std::move(d_)), n(std::move(n_)) {
    if (d < 1) throw std::invalid_argument("DegreePair: d must be >= 1");
    if (n < 0) throw std::invalid_argument("DegreePair: n must be >= 0");
  }

  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

inline Integer ambient_dim(const Integer& d) {
  if (d < 0) throw std::invalid_argument("ambient_dim: d must be >= 0");
  // C(d+3,3) - 1; the triple product of consecutive integers is divisible by 6.
  return (d + 3) * (d + 2) * (d + 1) / 6 - 1;
}

inline Integer linsys_dim(const Integer& d, const Integer& n) {
  if (d < 1) throw std::invalid_argument("linsys_dim: d must be >= 1");
  if (n < 0) throw std::invalid_argument("linsys_dim: n must be >= 0");
  if (n < d) return ambient_dim(n);
  return ambient_dim(n) - ambient_dim(n - d) - 1;
}

inline Integer arithmetic_genus(const Integer& d, const Integer& n) {
  if (d < 1) throw std::invalid_argument("arithmetic_genus: d must be >= 1");
  if (n < 0) throw std::invalid_argument("arithmetic_genus: n must be >= 0");
  Integer twice = d * n * (d + n - 4);
  // d n (d+n-4) is even: if d and n are both odd then d+n-4 is even.
  if (boost::multiprecision::bit_test(twice, 0))
    throw std::logic_error("arithmetic_genus: odd product d n (d+n-4)");
  return twice / 2 + 1;
}

/// Phi(n,d) = N_d - N_{d-n} - 1, the codimension bound used for the
/// incidence-dimension count. Only 1 <= n <= d is meaningful.
inline Integer phi(const Integer& n, const Integer& d) {
  if (n < 1) throw std::invalid_argument("phi: n must be >= 1");
  if (n > d) throw std::invalid_argument("phi: n must not exceed d");
  return ambient_dim(d) - ambient_dim(d - n) - 1;
}

/// Least geometric genus allowed for an irreducible curve in |O_X(n)| on a
/// general X of degree d >= 5: the smallest integer strictly greater than
/// n d (d-5) / 2 + 1.
inline Integer clemens_min_genus(const Integer& d, const Integer& n) {
  if (d < 5) throw std::invalid_argument("clemens_min_genus: requires d >= 5");
  if (n < 1) throw std::invalid_argument("clemens_min_genus: n must be >= 1");
  // bound = x / 2 with x = n d (d-5) + 2 >= 0; least integer > x/2 is floor(x/2) + 1.
  Integer x = n * d * (d - 5) + 2;
  return x / 2 + 1;
}

/// True iff J_{n-1}(d) and J_n(d) union to a single integer interval, i.e.
/// l_{d,n} >= g_{d,n} - g_{d,n-1} - 1.
inline bool contiguity_holds(const Integer& d, const Integer& n) {
  if (d < 1) throw std::invalid_argument("contiguity_holds: d must be >= 1");
  if (n < 1) throw std::invalid_argument("contiguity_holds: n must be >= 1");
  return linsys_dim(d, n) >= arithmetic_genus(d, n) - arithmetic_genus(d, n - 1) - 1;
}

}  // namespace gapcert
