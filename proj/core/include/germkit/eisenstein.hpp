#pragma once

#include <map>

#include "germkit/ratfun.hpp"

namespace germkit {

// Minimal polynomial P(t, x, y) together with the leading Taylor data of one
// algebraic-series root f(x) = sum_alpha f_alpha(t) x^alpha, the f_alpha given
// as rational functions of the parameters t.
//
// Ring layout of `work`: t_1..t_r, then x_1..x_n, then y, then an internal
// homogenization variable. `tring` holds the t variables alone.
struct BranchSeed {
  Ring work;
  Ring tring;
  int num_t = 0;
  int num_x = 0;
  Series P; // exact, no occurrence of the homogenization variable
  std::map<ExpVec, RationalFunction, GradedLexLess> seed; // x-exponents -> f_alpha
  int seed_degree = 0;

  int x_var(int i) const { return num_t + i; }
  int y_var() const { return num_t + num_x; }
  int u_var() const { return num_t + num_x + 1; }
};

// Validates and packages a seed; the seed must be consistent with P through
// x-degree seed_degree (checked; failure reports DivisibilityFailure).
BranchSeed make_branch_seed(Ring work, Ring tring, int num_t, int num_x,
                            Series P,
                            std::map<ExpVec, RationalFunction, GradedLexLess> seed,
                            int seed_degree);

// Convenience: builds the work/t rings with an internal homogenization
// variable appended after y.
std::pair<Ring, Ring> make_eisenstein_rings(const std::vector<std::string>& tvars,
                                            const std::vector<std::string>& xvars,
                                            const std::string& yvar,
                                            const NumberField& field);

struct EisensteinResult {
  int e = 0;
  Series b;     // pre-clearing factor, in tring
  Series Rfull; // R(t, x), in a t+x ring
  Series r;     // content of Rfull in t alone, leading coefficient 1
  std::map<ExpVec, Series, GradedLexLess> numerators; // x-exps -> N_alpha in tring
  int out_degree = 0;
  Ring tring;
  Ring txring;
};

// ord_x of dP/dy evaluated on the seed expansion.
int compute_e(const BranchSeed& bs);

// b = lcm of the seed denominators through degree 2e+1; returns b and the
// seed/minimal-polynomial pair rewritten for b*f. e is unchanged.
std::pair<Series, BranchSeed> clear_denominators(const BranchSeed& bs, int e);

// Full extraction: homogenize, truncate at 2e+1, shift and rescale by R,
// Hensel-solve in the homogenization order, split the content r of R, and
// recover polynomial numerators with f_alpha = N_alpha / r^{2|alpha|-1}
// (exponent -1 at alpha = 0, where the division is performed exactly).
// Every divisibility the construction promises is checked, not assumed.
EisensteinResult eisenstein_extract(const BranchSeed& bs, int out_degree);

struct EisensteinReport {
  bool ok = true;
  int checked_to = 0;
  std::vector<std::string> mismatches;
};

// Independent cross-check: expands f order by order over the rational
// function field (a path disjoint from the extraction pipeline) and compares
// every coefficient with numerators/r-powers, cross-multiplied.
EisensteinReport verify_eisenstein(const EisensteinResult& res, const BranchSeed& bs,
                                   int check_degree);

} // namespace germkit
