#include "germkit/series.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace germkit {

namespace {
constexpr int kInf = std::numeric_limits<int>::max() / 4;
}

Ring::Ring(std::vector<std::string> vars, NumberField field) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty()) fail(Errc::ParseError, "empty variable name");
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        fail(Errc::ParseError, "duplicate variable '" + vars[i] + "'");
    if (vars[i] == field.generator() && field.degree() > 1)
      fail(Errc::ParseError,
           "variable '" + vars[i] + "' collides with the field generator");
  }
  data_ = std::make_shared<Data>(Data{std::move(vars), std::move(field)});
}

std::optional<int> Ring::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < data_->vars.size(); ++i)
    if (data_->vars[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

bool Ring::operator==(const Ring& other) const {
  if (data_ == other.data_) return true;
  return data_->vars == other.data_->vars && data_->field == other.data_->field;
}

int total_degree(const ExpVec& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int Trunc::degree() const {
  if (is_exact()) fail(Errc::Internal, "degree() on exact truncation");
  return d_;
}

Trunc Trunc::min(const Trunc& a, const Trunc& b) {
  if (a.is_exact()) return b;
  if (b.is_exact()) return a;
  return Trunc::at(std::min(a.d_, b.d_));
}

Series::Series(Ring ring, Trunc trunc) : ring_(std::move(ring)), trunc_(trunc) {}

Series Series::constant(const Ring& ring, const FieldElement& c, Trunc trunc) {
  Series s(ring, trunc);
  s.add_term(ExpVec(ring.nvars(), 0), c);
  return s;
}

Series Series::constant(const Ring& ring, const Rational& c, Trunc trunc) {
  return constant(ring, ring.field().from_rational(c), trunc);
}

Series Series::monomial(const Ring& ring, const ExpVec& e, const FieldElement& c,
                        Trunc trunc) {
  Series s(ring, trunc);
  s.add_term(e, c);
  return s;
}

Series Series::variable(const Ring& ring, int var) {
  ExpVec e(ring.nvars(), 0);
  e.at(var) = 1;
  return monomial(ring, e, ring.field().one());
}

FieldElement Series::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  if (it == terms_.end()) return ring_.field().zero();
  return it->second;
}

FieldElement Series::constant_term() const {
  return coeff(ExpVec(ring_.nvars(), 0));
}

bool Series::occurs(int var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] > 0) return true;
  return false;
}

int Series::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void Series::add_term(const ExpVec& e, const FieldElement& c) {
  if (static_cast<int>(e.size()) != ring_.nvars())
    fail(Errc::RingMismatch, "exponent vector length mismatch");
  for (int x : e)
    if (x < 0) fail(Errc::Internal, "negative exponent");
  if (!trunc_.allows_degree(total_degree(e))) return;
  if (ring_.field().is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = ring_.field().add(it->second, c);
    if (ring_.field().is_zero(it->second)) terms_.erase(it);
  }
}

void Series::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (!trunc_.allows_degree(total_degree(it->first)) ||
        ring_.field().is_zero(it->second))
      it = terms_.erase(it);
    else
      ++it;
  }
}

Series Series::with_trunc(Trunc t) const {
  if (trunc_ == t) return *this;
  if (!trunc_.is_exact()) {
    if (t.is_exact())
      fail(Errc::Internal, "cannot promote a truncated series to exact");
    if (t.degree() > trunc_.degree())
      fail(Errc::Internal, "cannot loosen a truncation");
  }
  Series r(ring_, t);
  r.terms_ = terms_;
  r.normalize();
  return r;
}

Series Series::operator-() const {
  Series r(ring_, trunc_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_.field().neg(c));
  return r;
}

Series Series::operator+(const Series& g) const {
  if (!(ring_ == g.ring_)) fail(Errc::RingMismatch, "series from different rings");
  Series r(ring_, Trunc::min(trunc_, g.trunc_));
  r.terms_ = terms_;
  for (const auto& [e, c] : g.terms_) {
    auto [it, inserted] = r.terms_.emplace(e, c);
    if (!inserted) it->second = ring_.field().add(it->second, c);
  }
  r.normalize();
  return r;
}

Series Series::operator-(const Series& g) const { return *this + (-g); }

Series Series::operator*(const Series& g) const {
  if (!(ring_ == g.ring_)) fail(Errc::RingMismatch, "series from different rings");
  Trunc t = Trunc::min(trunc_, g.trunc_);
  Series r(ring_, t);
  const NumberField& F = ring_.field();
  const bool clipped = !t.is_exact();
  const int D = clipped ? t.degree() : 0;
  for (const auto& [ea, ca] : terms_) {
    const int da = total_degree(ea);
    if (clipped && da > D) continue;
    for (const auto& [eb, cb] : g.terms_) {
      if (clipped && da + total_degree(eb) > D) continue;
      ExpVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = r.terms_.emplace(std::move(e), F.mul(ca, cb));
      if (!inserted) it->second = F.add(it->second, F.mul(ca, cb));
    }
  }
  r.normalize();
  return r;
}

Series Series::scaled(const FieldElement& c) const {
  const NumberField& F = ring_.field();
  Series r(ring_, trunc_);
  if (F.is_zero(c)) return r;
  for (const auto& [e, a] : terms_) {
    FieldElement p = F.mul(a, c);
    if (!F.is_zero(p)) r.terms_.emplace(e, std::move(p));
  }
  return r;
}

Series Series::pow(int e) const {
  if (e < 0) fail(Errc::Internal, "negative series power");
  Series r = Series::constant(ring_, ring_.field().one(), trunc_);
  if (e == 0) return Series::constant(ring_, ring_.field().one());
  Series base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool Series::operator==(const Series& g) const {
  return ring_ == g.ring_ && trunc_ == g.trunc_ && terms_ == g.terms_;
}

Series series_arith(SeriesOp op, const Series& f, const Series& g) {
  return op == SeriesOp::Add ? f + g : f * g;
}

Order ord(const Series& f) {
  if (f.terms().empty()) {
    if (f.is_exact()) return Order::infinite();
    return Order::at_least(f.trunc().degree() + 1);
  }
  return Order::finite(total_degree(f.terms().begin()->first));
}

Series compose(const Series& f, const std::map<int, Series>& subst) {
  const Ring& R = f.ring();
  for (const auto& [v, g] : subst) {
    if (v < 0 || v >= R.nvars()) fail(Errc::RingMismatch, "substituted variable out of range");
    if (!(g.ring() == R)) fail(Errc::RingMismatch, "substitution image from a different ring");
  }
  const bool f_exact = f.is_exact();
  if (!f_exact) {
    for (const auto& [v, g] : subst)
      if (!R.field().is_zero(g.constant_term()))
        fail(Errc::IllegalSubstitution,
             "nonzero constant term substituted into a proper power series (variable '" +
                 R.var_name(v) + "')");
  }

  // Certified output degree: errors hidden above f's truncation surface at
  // order (Df+1)*O_min, and each truncated image is only known through its
  // own degree.
  int Dp = kInf;
  if (!f_exact) {
    int omin = kInf;
    for (int v = 0; v < R.nvars(); ++v) {
      auto it = subst.find(v);
      if (it == subst.end()) {
        omin = std::min(omin, 1);
      } else {
        Order o = ord(it->second);
        omin = std::min(omin, o.is_finite() ? std::max(o.value, 0) : kInf);
      }
    }
    if (omin < kInf)
      Dp = std::min(Dp, (f.trunc().degree() + 1) * omin - 1);
  }
  for (const auto& [v, g] : subst) {
    if (g.is_exact()) continue;
    if (f_exact && !f.occurs(v)) continue;
    Dp = std::min(Dp, g.trunc().degree());
  }
  Trunc out = (Dp >= kInf) ? Trunc::exact() : Trunc::at(Dp);

  // Images clipped to the output certification, with per-variable power cache.
  std::vector<Series> image;
  image.reserve(R.nvars());
  for (int v = 0; v < R.nvars(); ++v) {
    auto it = subst.find(v);
    Series g = (it == subst.end()) ? Series::variable(R, v) : it->second;
    if (!out.is_exact()) g = g.with_trunc(Trunc::min(g.trunc(), out));
    image.push_back(std::move(g));
  }
  std::vector<std::vector<Series>> powers(R.nvars());

  auto power = [&](int v, int e) -> const Series& {
    auto& cache = powers[v];
    if (cache.empty())
      cache.push_back(Series::constant(R, R.field().one(), out));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * image[v]);
    return cache[e];
  };

  Series result(R, out);
  for (const auto& [e, c] : f.terms()) {
    Series term = Series::constant(R, c, out);
    for (int v = 0; v < R.nvars(); ++v)
      if (e[v] > 0) term = term * power(v, e[v]);
    result = result + term;
  }
  return result;
}

Series derivative(const Series& f, int var) {
  const Ring& R = f.ring();
  if (var < 0 || var >= R.nvars()) fail(Errc::RingMismatch, "variable out of range");
  Trunc t = f.is_exact() ? Trunc::exact() : Trunc::at(f.trunc().degree() - 1);
  Series r(R, t);
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    ExpVec d = e;
    d[var] -= 1;
    r.add_term(d, R.field().mul_rat(c, Rational(e[var])));
  }
  return r;
}

FieldElement evaluate(const Series& f, const Point& p) {
  const Ring& R = f.ring();
  const NumberField& F = R.field();
  if (static_cast<int>(p.coords.size()) != R.nvars())
    fail(Errc::RingMismatch, "point does not assign every ring variable");
  if (!f.is_exact()) {
    for (const auto& c : p.coords)
      if (!F.is_zero(c))
        fail(Errc::TruncatedEvaluation,
             "truncated series can only be evaluated at the origin");
    return f.constant_term();
  }
  FieldElement acc = F.zero();
  for (const auto& [e, c] : f.terms()) {
    FieldElement term = c;
    for (int v = 0; v < R.nvars(); ++v)
      if (e[v] > 0) term = F.mul(term, F.pow(p.coords[v], e[v]));
    acc = F.add(acc, term);
  }
  return acc;
}

namespace {

// det over Q by fraction-full Gaussian elimination; n is tiny here.
bool int_matrix_invertible(const std::vector<std::vector<long>>& M) {
  const std::size_t n = M.size();
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (M[i].size() != n) fail(Errc::SingularMatrix, "matrix is not square");
    for (std::size_t j = 0; j < n; ++j) A[i][j] = Rational(M[i][j]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && rat_is_zero(A[piv][k])) ++piv;
    if (piv == n) return false;
    std::swap(A[piv], A[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (rat_is_zero(A[i][k])) continue;
      Rational c = A[i][k] / A[k][k];
      for (std::size_t j = k; j < n; ++j) A[i][j] -= c * A[k][j];
    }
  }
  return true;
}

} // namespace

Series linear_change(const Series& f, const std::vector<std::vector<long>>& M) {
  const Ring& R = f.ring();
  if (static_cast<int>(M.size()) != R.nvars())
    fail(Errc::SingularMatrix, "matrix size does not match the ring");
  if (!int_matrix_invertible(M)) fail(Errc::SingularMatrix, "coordinate change is singular");
  std::map<int, Series> subst;
  for (int i = 0; i < R.nvars(); ++i) {
    bool identity = true;
    for (int j = 0; j < R.nvars(); ++j)
      if (M[i][j] != (i == j ? 1 : 0)) identity = false;
    if (identity) continue;
    Series img(R);
    for (int j = 0; j < R.nvars(); ++j)
      if (M[i][j] != 0) {
        ExpVec e(R.nvars(), 0);
        e[j] = 1;
        img.add_term(e, R.field().from_rational(Rational(M[i][j])));
      }
    subst.emplace(i, std::move(img));
  }
  return compose(f, subst);
}

Series inverse_unit(const Series& f, int D) {
  const Ring& R = f.ring();
  const NumberField& F = R.field();
  FieldElement c0 = f.constant_term();
  if (F.is_zero(c0)) fail(Errc::DivisionByZero, "inverse of a non-unit series");
  if (f.terms().size() == 1 && f.is_exact())
    return Series::constant(R, F.inv(c0));
  Trunc t = Trunc::min(f.trunc(), Trunc::at(D));
  Series ft = f.with_trunc(t);
  Series g = Series::constant(R, F.inv(c0), t);
  Series two = Series::constant(R, F.from_rational(Rational(2)), t);
  // Newton doubling: g <- g(2 - f g).
  int prec = 1;
  int goal = t.degree() + 1;
  while (prec < goal) {
    g = g * (two - ft * g);
    prec *= 2;
  }
  return g;
}

Series coeff_of_var_power(const Series& f, int var, int k) {
  const Ring& R = f.ring();
  Trunc t = f.is_exact() ? Trunc::exact() : Trunc::at(f.trunc().degree() - k);
  Series r(R, t);
  for (const auto& [e, c] : f.terms()) {
    if (e[var] != k) continue;
    ExpVec d = e;
    d[var] = 0;
    r.add_term(d, c);
  }
  return r;
}

int max_var_power_dividing(const Series& f, int var) {
  int q = -1;
  for (const auto& [e, c] : f.terms())
    q = (q < 0) ? e[var] : std::min(q, e[var]);
  return q < 0 ? 0 : q;
}

Series divide_by_var_power(const Series& f, int var, int q) {
  if (q == 0) return f;
  const Ring& R = f.ring();
  Trunc t = f.is_exact() ? Trunc::exact() : Trunc::at(f.trunc().degree() - q);
  Series r(R, t);
  for (const auto& [e, c] : f.terms()) {
    if (e[var] < q) fail(Errc::Internal, "series not divisible by requested variable power");
    ExpVec d = e;
    d[var] -= q;
    r.add_term(d, c);
  }
  return r;
}

Series mul_by_var_power(const Series& f, int var, int q) {
  if (q == 0) return f;
  const Ring& R = f.ring();
  Trunc t = f.is_exact() ? Trunc::exact() : Trunc::at(f.trunc().degree() + q);
  Series r(R, t);
  for (const auto& [e, c] : f.terms()) {
    ExpVec d = e;
    d[var] += q;
    r.add_term(d, c);
  }
  return r;
}

Series truncate_var_degree(const Series& f, int var, int maxdeg) {
  Series r(f.ring(), f.trunc());
  for (const auto& [e, c] : f.terms())
    if (e[var] <= maxdeg) r.add_term(e, c);
  return r;
}

Series restrict_to_axis(const Series& f, int var) {
  Series r(f.ring(), f.trunc());
  for (const auto& [e, c] : f.terms()) {
    bool pure = true;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (static_cast<int>(v) != var && e[v] != 0) pure = false;
    if (pure) r.add_term(e, c);
  }
  return r;
}

Series map_to_ring(const Series& f, const Ring& target, const std::vector<int>& var_map) {
  if (static_cast<int>(var_map.size()) != f.ring().nvars())
    fail(Errc::RingMismatch, "variable map length mismatch");
  if (!(f.ring().field() == target.field()))
    fail(Errc::RingMismatch, "rings over different fields");
  Series r(target, f.trunc());
  for (const auto& [e, c] : f.terms()) {
    ExpVec d(target.nvars(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (var_map[v] < 0)
        fail(Errc::RingMismatch,
             "series involves variable '" + f.ring().var_name(static_cast<int>(v)) +
                 "' absent from the target ring");
      d[var_map[v]] += e[v];
    }
    r.add_term(d, c);
  }
  return r;
}

bool agree_up_to(const Series& f, const Series& g, int D) {
  if (!(f.ring() == g.ring())) fail(Errc::RingMismatch, "series from different rings");
  Series diff = f - g;
  for (const auto& [e, c] : diff.terms())
    if (total_degree(e) <= D) return false;
  return true;
}

int agreement_degree(const Series& f, const Series& g, int cap) {
  if (!(f.ring() == g.ring())) fail(Errc::RingMismatch, "series from different rings");
  Series diff = f - g;
  Order o = ord(diff);
  if (!o.is_finite()) return cap;
  return std::min(o.value - 1, cap);
}

std::string to_string(const Series& f) {
  const Ring& R = f.ring();
  const NumberField& F = R.field();
  if (f.terms().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) out << " + ";
    first = false;
    if (F.degree() == 1) {
      out << rat_str(c.coords[0]);
    } else {
      out << "(";
      for (int k = 0; k < F.degree(); ++k) {
        if (k) out << ", ";
        out << rat_str(c.coords[k]);
      }
      out << ")";
    }
    for (int v = 0; v < R.nvars(); ++v) {
      if (e[v] == 0) continue;
      out << "*" << R.var_name(v);
      if (e[v] > 1) out << "^" << e[v];
    }
  }
  if (!f.is_exact()) out << " + O(deg " << f.trunc().degree() + 1 << ")";
  return out.str();
}

} // namespace germkit
