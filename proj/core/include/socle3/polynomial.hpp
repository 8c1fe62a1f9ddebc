#pragma once

#include <cstddef>
#include <map>

#include "socle3/monomial.hpp"
#include "socle3/rational.hpp"

namespace socle3 {

// Ring elements live in K[x1..xh] (truncations of the power series ring), dual generators
// in K[y1..yh]. The two spaces are never mixed implicitly.
enum class VarSpace { Ring, Dual };

char variable_letter(VarSpace space) noexcept;

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial(VarSpace space, std::size_t num_vars);

  static Polynomial constant(VarSpace space, std::size_t num_vars, const Rational& c);
  static Polynomial variable(VarSpace space, std::size_t num_vars, std::size_t index);
  static Polynomial term(VarSpace space, const Monomial& m, const Rational& c);

  VarSpace space() const noexcept { return space_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept;
  int min_degree() const noexcept;
  bool is_homogeneous() const noexcept;
  Rational coefficient(const Monomial& m) const;

  // Adds c*m in place; a resulting zero coefficient is erased.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial homogeneous_component(int d) const;
  // Same polynomial viewed in more variables (R_n into R_h); `num_vars` must not shrink.
  Polynomial extended_to(std::size_t num_vars) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial& other) const;

 private:
  void check_compatible(const Polynomial& other) const;

  VarSpace space_;
  std::size_t num_vars_;
  TermMap terms_;
};

// ∂/∂y_i (or ∂/∂x_i) of p.
Polynomial partial_derivative(const Polynomial& p, std::size_t index);

// f ∘ F: substitute ∂/∂y_i for x_i in f and apply the operator to F.
Polynomial derivative_action(const Polynomial& f, const Polynomial& F);

// Top-degree homogeneous component of a nonzero polynomial.
Polynomial leading_form(const Polynomial& F);

}  // namespace socle3
