#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "socle3/linalg.hpp"
#include "socle3/monomial.hpp"
#include "socle3/polynomial.hpp"
#include "socle3/subspace.hpp"

namespace socle3 {

// Element of a LocalAlgebra: sparse coordinates with respect to its monomial basis.
using AlgebraElement = RationalVec;

// Finite-dimensional local K-algebra with a monomial basis (1 first) and an exact
// multiplication table. Every basis element other than 1 lies in the maximal ideal.
class LocalAlgebra {
 public:
  // `table[i * d + j]` = basis[i] * basis[j] in coordinates. Validates shape and that
  // basis[0] is the constant monomial.
  LocalAlgebra(std::size_t num_vars, std::vector<Monomial> basis, std::vector<AlgebraElement> table);

  // R_{<=D} / ideal; requires every degree-D monomial to lie in the ideal so that the
  // truncation does not change the quotient.
  static LocalAlgebra quotient_of(const SubspaceBasis& ideal);

  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  // Indices 1..d-1.
  std::vector<std::size_t> max_ideal_basis() const;
  int socle_degree() const noexcept { return socle_degree_; }

  const AlgebraElement& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement basis_element(std::size_t i) const { return {{static_cast<std::uint32_t>(i), Rational(1)}}; }

  // Image of a ring polynomial x^a -> basis coordinates; only meaningful for algebras built
  // by quotient_of (those remember the reduction data).
  AlgebraElement element_of(const Polynomial& p) const;

  // Powers of the maximal ideal, m^0 = A, ..., up to the first zero power.
  std::vector<Subspace<Rational>> max_ideal_powers() const;

  // Positive integer weights on x1..xh making the multiplication homogeneous with respect to
  // the weighted degree of the basis monomials, if such weights exist.
  std::optional<std::vector<int>> find_grading() const;
  int weighted_degree(std::size_t basis_index, const std::vector<int>& weights) const;

 private:
  void compute_socle_degree();

  std::size_t num_vars_;
  std::vector<Monomial> basis_;
  std::vector<AlgebraElement> table_;
  int socle_degree_ = 0;
  // Present for algebras built from an ideal of the truncated polynomial ring.
  std::optional<SubspaceBasis> ideal_;
  std::vector<std::uint32_t> monomial_to_basis_;
};

}  // namespace socle3
