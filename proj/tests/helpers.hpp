#pragma once

#include <random>

#include "germkit/expr.hpp"
#include "germkit/series.hpp"

namespace germkit::testing {

inline Series expr(const std::string& text, const Ring& ring) {
  return parse_expr(text, ring);
}

inline Rational random_rational(std::mt19937& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return rat(num(rng), den(rng));
}

inline FieldElement random_element(std::mt19937& rng, const NumberField& F, int bound = 9) {
  FieldElement e = F.zero();
  for (auto& c : e.coords) c = random_rational(rng, bound);
  return e;
}

inline Series random_poly(std::mt19937& rng, const Ring& ring, int max_degree,
                          int terms, int bound = 5) {
  Series s(ring);
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    ExpVec e(ring.nvars(), 0);
    int budget = deg(rng);
    for (int v = 0; v < ring.nvars() && budget > 0; ++v) {
      std::uniform_int_distribution<int> part(0, budget);
      e[v] = part(rng);
      budget -= e[v];
    }
    s.add_term(e, random_element(rng, ring.field(), bound));
  }
  return s;
}

} // namespace germkit::testing
