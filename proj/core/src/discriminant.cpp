#include "germkit/discriminant.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "germkit/polygcd.hpp"

namespace germkit {

std::vector<Series> newton_sums(const WeierstrassPoly& W, int upto) {
  const Ring& R = W.ring;
  const NumberField& F = R.field();
  const int p = W.degree;

  // e_j = (-1)^j a_j for the monic x^p + a_1 x^{p-1} + ... + a_p.
  std::vector<Series> e(p + 1, Series(R));
  for (int j = 1; j <= p; ++j)
    e[j] = (j % 2 == 1) ? -W.coeffs[j - 1] : W.coeffs[j - 1];

  std::vector<Series> s;
  s.reserve(upto + 1);
  s.push_back(Series::constant(R, Rational(p)));
  for (int k = 1; k <= upto; ++k) {
    Series acc(R);
    for (int i = 1; i <= std::min(k - 1, p); ++i) {
      Series term = e[i] * s[k - i];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    if (k <= p) {
      Series ke = e[k].scaled(F.from_rational(Rational(k)));
      acc = (k % 2 == 1) ? acc + ke : acc - ke;
    }
    s.push_back(std::move(acc));
  }
  return s;
}

namespace {

Series det_bareiss(std::vector<std::vector<Series>>& M, const Ring& R) {
  const int n = static_cast<int>(M.size());
  const NumberField& F = R.field();
  Series prev = Series::constant(R, F.one());
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      int l = k + 1;
      while (l < n && M[l][k].is_zero()) ++l;
      if (l == n) return Series(R);
      std::swap(M[k], M[l]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Series num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        auto q = exact_divide(num, prev);
        if (!q) fail(Errc::Internal, "Bareiss division failed");
        M[i][j] = std::move(*q);
      }
      M[i][k] = Series(R);
    }
    prev = M[k][k];
  }
  Series d = M[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

struct MinorExpander {
  const std::vector<std::vector<Series>>& M;
  const Ring& R;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Series> memo;

  Series det(std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0) return Series::constant(R, R.field().one());
    auto key = std::make_pair(rows, cols);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    // Expand along the active row with the fewest stored terms.
    int best_row = -1;
    std::size_t best_terms = 0;
    for (int i = 0; i < 32; ++i) {
      if (!(rows & (1u << i))) continue;
      std::size_t cnt = 0;
      for (int j = 0; j < 32; ++j)
        if (cols & (1u << j)) cnt += M[i][j].terms().size();
      if (best_row < 0 || cnt < best_terms) {
        best_row = i;
        best_terms = cnt;
      }
    }
    Series acc(R);
    int colpos = 0;
    for (int j = 0; j < 32; ++j) {
      if (!(cols & (1u << j))) continue;
      const Series& entry = M[best_row][j];
      if (!entry.is_zero()) {
        Series sub = det(rows & ~(1u << best_row), cols & ~(1u << j));
        Series term = entry * sub;
        acc = (colpos % 2 == 0) ? acc + term : acc - term;
      }
      ++colpos;
    }
    // Row parity relative to the active row set.
    int rowpos = 0;
    for (int i = 0; i < best_row; ++i)
      if (rows & (1u << i)) ++rowpos;
    if (rowpos % 2 == 1) acc = -acc;
    memo.emplace(key, acc);
    return acc;
  }
};

} // namespace

Series det_series(std::vector<std::vector<Series>> M) {
  if (M.empty()) fail(Errc::Internal, "empty matrix");
  const Ring R = M[0][0].ring();
  const int n = static_cast<int>(M.size());
  if (n > 30) fail(Errc::Internal, "matrix too large");
  bool all_exact = true;
  for (const auto& row : M) {
    if (static_cast<int>(row.size()) != n) fail(Errc::Internal, "matrix is not square");
    for (const auto& s : row)
      if (!s.is_exact()) all_exact = false;
  }
  if (all_exact) return det_bareiss(M, R);
  MinorExpander ex{M, R, {}};
  std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  return ex.det(full, full);
}

Series gen_disc(const WeierstrassPoly& W, int j) {
  const int p = W.degree;
  if (j < 1 || j > p) fail(Errc::Internal, "discriminant index out of range");
  const int r = p - j + 1;
  std::vector<Series> s = newton_sums(W, 2 * r - 2);
  std::vector<std::vector<Series>> H(r, std::vector<Series>(r, Series(W.ring)));
  for (int m = 0; m < r; ++m)
    for (int k = 0; k < r; ++k) H[m][k] = s[m + k];
  return det_series(std::move(H));
}

DiscriminantRecord first_nonvanishing(const WeierstrassPoly& W) {
  const int p = W.degree;
  if (p < 1) fail(Errc::Internal, "first_nonvanishing needs degree >= 1");
  bool exact = true;
  for (const auto& a : W.coeffs)
    if (!a.is_exact()) exact = false;

  std::vector<int> vanished;
  for (int j = 1; j <= p; ++j) {
    Series d = gen_disc(W, j);
    if (!d.is_zero()) {
      Certification cert;
      cert.is_exact = d.is_exact();
      if (!cert.is_exact) cert.degree = d.trunc().degree();
      return DiscriminantRecord{j, std::move(d), std::move(vanished), cert};
    }
    vanished.push_back(j);
  }
  fail(Errc::AllVanish,
       exact ? "all generalized discriminants vanish on exact input"
             : "all generalized discriminants vanish mod truncation (truncation starvation)");
}

FieldElement oracle_disc(const std::vector<FieldElement>& roots, int j,
                         const NumberField& F) {
  const int p = static_cast<int>(roots.size());
  if (p > 6) fail(Errc::TooManyRoots, "oracle_disc limited to 6 roots");
  if (j < 1 || j > p) fail(Errc::Internal, "discriminant index out of range");
  const int r = p - j + 1;

  FieldElement total = F.zero();
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    FieldElement prod = F.one();
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b) {
        FieldElement d = F.sub(roots[pick[a]], roots[pick[b]]);
        prod = F.mul(prod, F.mul(d, d));
      }
    total = F.add(total, prod);
    int i = r - 1;
    while (i >= 0 && pick[i] == p - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < r; ++k) pick[k] = pick[k - 1] + 1;
  }
  return total;
}

Series resultant_coeffs(const std::vector<Series>& f, const std::vector<Series>& g,
                        const Ring& ring) {
  const int m = static_cast<int>(f.size()) - 1;
  const int n = static_cast<int>(g.size()) - 1;
  if (m < 0 || n < 0) fail(Errc::Internal, "resultant of empty polynomial");
  if (m == 0 && n == 0) return Series::constant(ring, ring.field().one());
  const int N = m + n;
  std::vector<std::vector<Series>> S(N, std::vector<Series>(N, Series(ring)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) S[i][i + k] = f[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) S[n + i][i + k] = g[n - k];
  return det_series(std::move(S));
}

Series resultant_with_derivative(const WeierstrassPoly& W) {
  const Ring& R = W.ring;
  const NumberField& F = R.field();
  const int p = W.degree;
  std::vector<Series> f(p + 1, Series(R));
  f[p] = Series::constant(R, F.one());
  for (int j = 1; j <= p; ++j) f[p - j] = W.coeffs[j - 1];
  std::vector<Series> df(p, Series(R));
  for (int k = 1; k <= p; ++k)
    df[k - 1] = f[k].scaled(F.from_rational(Rational(k)));
  return resultant_coeffs(f, df, R);
}

} // namespace germkit
