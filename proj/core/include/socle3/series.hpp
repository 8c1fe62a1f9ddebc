#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "socle3/rational.hpp"

namespace socle3 {

// Truncated power series / univariate polynomials in z, coefficients ascending.
using IntSeries = std::vector<Integer>;
using QSeries = std::vector<Rational>;

QSeries to_rational(const IntSeries& s);
// Throws PreconditionError if some coefficient is not an integer.
IntSeries to_integer(const QSeries& s);

QSeries series_mul(const QSeries& a, const QSeries& b, std::size_t order);
// 1/a through z^order; a[0] must be nonzero.
QSeries series_inverse(const QSeries& a, std::size_t order);
QSeries series_div(const QSeries& num, const QSeries& den, std::size_t order);

// num/den with integer coefficients, in lowest terms, den(0) > 0.
class RationalFunction {
 public:
  RationalFunction(IntSeries numerator, IntSeries denominator);

  const IntSeries& numerator() const noexcept { return num_; }
  const IntSeries& denominator() const noexcept { return den_; }
  int numerator_degree() const noexcept { return static_cast<int>(num_.size()) - 1; }
  int denominator_degree() const noexcept { return static_cast<int>(den_.size()) - 1; }

  // "1/(1-3z+z^2)", "1/(1-z)^2", "(1+z)/(1-z)".
  std::string to_string() const;

  bool operator==(const RationalFunction&) const = default;

 private:
  IntSeries num_;
  IntSeries den_;
};

std::string poly_to_string(const IntSeries& p);

// First order+1 Taylor coefficients; throws PreconditionError on a non-integer coefficient.
IntSeries series_expand(const RationalFunction& f, std::size_t order);

// Lowest total degree num/den (each of degree <= max_degree, den(0) = 1) reproducing the
// series, determined from all but the last two coefficients and required to predict those two.
// Needs series.size() >= 2 * max_degree + 2.
std::optional<RationalFunction> fit_rational(const IntSeries& series, int max_degree);

}  // namespace socle3
