#pragma once

#include "germkit/weierstrass.hpp"

namespace germkit {

// How a zero/nonzero verdict on a discriminant is certified: exact for
// polynomial data, otherwise only through a total degree.
struct Certification {
  bool is_exact = true;
  int degree = 0; // meaningful when !is_exact

  bool operator==(const Certification&) const = default;
};

struct DiscriminantRecord {
  int j = 0;                       // first non-vanishing index
  Series delta;                    // Delta_j
  std::vector<int> vanished_below; // 1..j-1, zero under the certification
  Certification certification;
};

// Power sums s_0..s_upto of the roots of W, from the Newton identities on
// the monic coefficient list (s_0 = deg W).
std::vector<Series> newton_sums(const WeierstrassPoly& W, int upto);

// Delta_j = D_{p-j+1}, the (p-j+1)-th principal Hankel minor
// det(s_{m+k})_{0<=m,k<=r-1} of the Newton sums.
Series gen_disc(const WeierstrassPoly& W, int j);

// Smallest j with Delta_j nonzero under the certification policy.
DiscriminantRecord first_nonvanishing(const WeierstrassPoly& W);

// Root-side brute force: sum over (p-j+1)-subsets S of the squared
// Vandermonde products prod_{m<k in S} (t_m - t_k)^2. Guarded to p <= 6.
FieldElement oracle_disc(const std::vector<FieldElement>& roots, int j,
                         const NumberField& F);

// Determinant of a square matrix of series: fraction-free Bareiss when all
// entries are exact, deterministic minor expansion otherwise.
Series det_series(std::vector<std::vector<Series>> M);

// Resultant in `var` of two polynomials given by coefficient vectors
// (low degree first) via the Sylvester determinant.
Series resultant_coeffs(const std::vector<Series>& f, const std::vector<Series>& g,
                        const Ring& ring);

// res(W, dW/dx_i) of the monic carrier, in the non-distinguished variables.
Series resultant_with_derivative(const WeierstrassPoly& W);

} // namespace germkit
