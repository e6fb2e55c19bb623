#pragma once

#include <optional>
#include <set>
#include <vector>

#include "germkit/series.hpp"

namespace germkit {

// Monic polynomial in one distinguished ring variable with series
// coefficients: x_i^p + a_1 x_i^{p-1} + ... + a_p, each a_j free of x_i.
// Tower-produced instances additionally have a_j(0) = 0 (distinguished());
// generic monic carriers (e.g. built from explicit roots) need not.
struct WeierstrassPoly {
  Ring ring;
  int dist_var = 0;
  int degree = 0;
  std::vector<Series> coeffs; // a_1..a_p

  Series as_series() const;
  bool distinguished() const;
};

// Extracts the coefficient list of a series monic of degree p in `var`
// (unit leading coefficient 1); rejects anything else.
WeierstrassPoly weierstrass_from_series(const Series& W, int var);

struct PreparationResult {
  Series unit;          // u with u(0) != 0
  WeierstrassPoly poly; // W with a_j(0) = 0
  int valid_to;         // u*W == input through this total degree
};

// Order of F restricted to the x_var axis: 0 for a unit, the axis order
// otherwise, nullopt (NotRegular) when the restriction vanishes mod trunc.
std::optional<int> regularity_order(const Series& F, int var);

struct TransverseResult {
  std::vector<std::vector<long>> matrix; // integer change, f -> f(Mx)
  std::vector<int> orders;               // achieved regularity orders
};

// Searches integer shears x_j <- x_j + c x_var (j != var, j not frozen)
// by deterministic spiral enumeration until every G_s becomes x_var-regular;
// with require_mult the achieved order must equal mult_0(G_s).
TransverseResult make_transverse(const std::vector<Series>& G, int var,
                                 const std::set<int>& frozen, bool require_mult,
                                 int shear_bound = 16);

// Weierstrass preparation of an x_var-regular series, computed by the
// graded fixed-point division of x_var^p by F at working degree D.
// valid_to = D - p; requires valid_to >= p.
PreparationResult prepare(const Series& F, int var, int D);

} // namespace germkit
