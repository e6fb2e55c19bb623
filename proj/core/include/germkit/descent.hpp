#pragma once

#include <optional>

#include "germkit/series.hpp"

namespace germkit {

// Power-basis split of a series over K = Q[v]/(m): f = sum_k v^k f_k with
// the f_k over plain Q (in a parallel ring with the same variables).
struct DescentResult {
  Ring source;                  // ring of the input, over K
  Ring rational_ring;           // same variables over Q
  std::vector<Series> components;
};

DescentResult basis_decompose(const Series& f);

// Reassembles sum_k v^k components[k] over K; used as the exactness oracle.
Series descent_reassemble(const DescentResult& res, const Ring& source);

// Applies the conjugate embeddings v -> a_j coefficient-wise to `f` and
// confirms they match the Vandermonde combinations sum_k a_j^k f_k.
// nullopt (Unsupported) when the conjugates are unavailable (d > 2).
std::optional<bool> vandermonde_verify(const DescentResult& res, const Series& f);

// One branch of P(t, v) = 0 at a rational parameter point q off the
// discriminant locus, rooted at the exact simple root v0 (over K).
struct BranchPoint {
  Ring ring;    // t_1..t_r, v over Q
  int num_t = 0;
  Series P;     // exact polynomial
  std::vector<Rational> q;
  NumberField K; // field of the root
  FieldElement v0;
  int N = 0;    // expansion order
};

// Taylor expansion w(s) with w(0) = v0 and P(q + s, w(s)) = 0 mod s^{N+1},
// by Newton iteration off the simple root. Returned over the t variables
// (reading them as offsets from q) with coefficients in K.
Series branch_taylor(const BranchPoint& bp);

// Taylor expansion of 1/R at q: the unique series with R(q+s)*result = 1
// mod degree N+1. R must be an exact polynomial with R(q) != 0.
Series inverse_taylor(const Series& R, const std::vector<Rational>& q, int N);

// Substitutes t = q coefficient-wise in a family y(t, x); `tvars` lists the
// parameter variable indices. Result lives in the same ring, t-free.
Series specialize_family(const Series& y, const std::vector<int>& tvars,
                         const std::vector<FieldElement>& q);

// Coefficient-wise field transport between rings with identical variables:
// rationals lift into any K; a K-series maps through v -> image.
Series lift_to_field(const Series& f, const Ring& target);
Series conjugate_map(const Series& f, const FieldElement& image);

} // namespace germkit
