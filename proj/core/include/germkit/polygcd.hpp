#pragma once

#include <optional>

#include "germkit/series.hpp"

namespace germkit {

// Exact polynomial arithmetic helpers. Every input here must be an exact
// Series; truncated values are rejected.

// f scaled so its graded-lex leading coefficient is 1 (zero stays zero).
Series normalize_leading(const Series& f);

// Quotient f/g when g divides f exactly, nullopt otherwise.
std::optional<Series> exact_divide(const Series& f, const Series& g);

// gcd up to units, returned with leading coefficient 1. Univariate inputs
// with constant coefficients run monic Euclid; the general case runs the
// content/primitive-part recursion with a primitive pseudo-remainder chain.
Series poly_gcd(const Series& f, const Series& g);

Series poly_lcm(const Series& f, const Series& g);

// gcd of the coefficients of f viewed as a polynomial in the monomials of
// `vars` (coefficients live in the remaining variables). This is the
// content of f with respect to `vars`, leading coefficient normalized.
Series content_wrt_vars(const Series& f, const std::vector<int>& vars);

} // namespace germkit
