#include "socle3/series.hpp"

#include <algorithm>

#include "socle3/error.hpp"

namespace socle3 {

QSeries to_rational(const IntSeries& s) {
  QSeries out;
  out.reserve(s.size());
  for (const auto& c : s) out.emplace_back(c);
  return out;
}

IntSeries to_integer(const QSeries& s) {
  IntSeries out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_integer(s[i]))
      throw PreconditionError("non-integer coefficient " + to_string(s[i]) + " at z^" + std::to_string(i));
    out.push_back(s[i].get_num());
  }
  return out;
}

QSeries series_mul(const QSeries& a, const QSeries& b, std::size_t order) {
  QSeries out(order + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QSeries series_inverse(const QSeries& a, std::size_t order) {
  if (a.empty() || a[0] == 0) throw PreconditionError("series with zero constant term is not invertible");
  QSeries out(order + 1, Rational(0));
  const Rational inv0 = 1 / a[0];
  out[0] = inv0;
  for (std::size_t k = 1; k <= order; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) acc += a[i] * out[k - i];
    out[k] = -acc * inv0;
  }
  return out;
}

QSeries series_div(const QSeries& num, const QSeries& den, std::size_t order) {
  return series_mul(num, series_inverse(den, order), order);
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b (b nonzero, trimmed).
QPoly poly_rem(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

// Quotient of a by b, assuming exact division.
QPoly poly_quot(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  return q;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

RationalFunction::RationalFunction(IntSeries numerator, IntSeries denominator) {
  QPoly n = to_rational(numerator), d = to_rational(denominator);
  trim(n);
  trim(d);
  if (d.empty()) throw PreconditionError("zero denominator");
  if (!n.empty()) {
    QPoly g = poly_gcd(n, d);
    if (g.size() > 1) {
      n = poly_quot(n, g);
      d = poly_quot(d, g);
    }
  }
  if (d.empty() || d[0] == 0) throw PreconditionError("denominator vanishes at z = 0");
  // Clear denominators jointly, then remove the common content.
  Integer l = 1;
  for (const auto& c : n) l = lcm(l, c.get_den());
  for (const auto& c : d) l = lcm(l, c.get_den());
  Integer g = 0;
  IntSeries ni, di;
  for (const auto& c : n) {
    ni.push_back(Integer(c * Rational(l)));
    g = gcd(g, ni.back());
  }
  for (const auto& c : d) {
    di.push_back(Integer(c * Rational(l)));
    g = gcd(g, di.back());
  }
  if (sgn(di[0]) < 0) g = -g;
  for (auto& c : ni) c /= g;
  for (auto& c : di) c /= g;
  if (ni.empty()) {
    ni = {Integer(0)};
    di = {Integer(1)};
  }
  num_ = std::move(ni);
  den_ = std::move(di);
}

std::string poly_to_string(const IntSeries& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    const bool neg = sgn(p[i]) < 0;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    Integer a = abs(p[i]);
    if (i == 0 || a != 1) out += a.get_str();
    if (i >= 1) out += 'z';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

namespace {

// k such that p == (1-z)^k exactly, or 0.
int one_minus_z_power(const IntSeries& p) {
  const int k = static_cast<int>(p.size()) - 1;
  if (k < 2) return 0;
  Integer binom = 1;
  for (int i = 0; i <= k; ++i) {
    Integer expected = (i % 2 ? -binom : binom);
    if (p[i] != expected) return 0;
    binom = binom * (k - i) / (i + 1);
  }
  return k;
}

}  // namespace

std::string RationalFunction::to_string() const {
  std::string num = poly_to_string(num_);
  if (num_.size() > 1) num = "(" + num + ")";
  if (den_.size() == 1 && den_[0] == 1) return num;
  std::string den;
  if (int k = one_minus_z_power(den_)) {
    den = "(1-z)^" + std::to_string(k);
  } else {
    den = "(" + poly_to_string(den_) + ")";
  }
  return num + "/" + den;
}

IntSeries series_expand(const RationalFunction& f, std::size_t order) {
  return to_integer(series_div(to_rational(f.numerator()), to_rational(f.denominator()), order));
}

namespace {

// Solves the square-or-tall system rows * x = rhs exactly; returns nullopt if inconsistent.
// Free unknowns are set to zero.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> rows, std::size_t unknowns) {
  // rows[r] has unknowns + 1 entries; the last one is the right-hand side.
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < unknowns && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const Rational inv = 1 / rows[rank][c];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = c; k <= unknowns; ++k) rows[r][k] -= f * rows[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r][unknowns] != 0) return std::nullopt;
  std::vector<Rational> x(unknowns, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = rows[r][unknowns];
  return x;
}

}  // namespace

std::optional<RationalFunction> fit_rational(const IntSeries& series, int max_degree) {
  if (max_degree < 0) throw PreconditionError("negative degree bound");
  const std::size_t len = series.size();
  if (len < static_cast<std::size_t>(2 * max_degree + 2))
    throw PreconditionError("fit_rational needs at least 2*maxDeg+2 coefficients");
  const std::size_t fit_len = len - 2;  // last two coefficients are held out
  const QSeries s = to_rational(series);
  auto coeff = [&](long i) { return i < 0 ? Rational(0) : s[i]; };
  for (int total = 0; total <= 2 * max_degree; ++total) {
    for (int q = 0; q <= std::min(total, max_degree); ++q) {
      const int p = total - q;
      if (p > max_degree) continue;
      if (static_cast<std::size_t>(p + q + 1) > fit_len) continue;
      // den = 1 + d_1 z + ... + d_q z^q; for j in (p, fit_len): sum_{i=0}^{q} d_i s_{j-i} = 0.
      std::vector<std::vector<Rational>> rows;
      for (long j = p + 1; j < static_cast<long>(fit_len); ++j) {
        std::vector<Rational> row(q + 1);
        for (int i = 1; i <= q; ++i) row[i - 1] = coeff(j - i);
        row[q] = -coeff(j);
        rows.push_back(std::move(row));
      }
      auto d = solve(rows, q);
      if (!d) continue;
      QSeries den(q + 1);
      den[0] = 1;
      for (int i = 1; i <= q; ++i) den[i] = (*d)[i - 1];
      QSeries num = series_mul(den, s, p);
      // The candidate must reproduce every coefficient, held-out ones included.
      QSeries check = series_div(num, den, len - 1);
      if (check != s) continue;
      // Clear denominators before building the integer representation.
      Integer l = 1;
      for (const auto& c : num) l = lcm(l, c.get_den());
      for (const auto& c : den) l = lcm(l, c.get_den());
      IntSeries ni, di;
      for (const auto& c : num) ni.push_back(Integer(c * Rational(l)));
      for (const auto& c : den) di.push_back(Integer(c * Rational(l)));
      return RationalFunction(std::move(ni), std::move(di));
    }
  }
  return std::nullopt;
}

}  // namespace socle3
