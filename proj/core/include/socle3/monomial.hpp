#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

namespace socle3 {

// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t num_vars, std::size_t index, int power = 1);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  int degree() const noexcept { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const noexcept { return exps_; }

  Monomial operator*(const Monomial& other) const;
  // True iff every exponent of `other` is <= the matching exponent here.
  bool divisible_by(const Monomial& other) const;

  bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }

  // Degree first; within a degree, x1^d precedes x1^(d-1) x2 precedes ... (graded lex with
  // x1 > x2 > ...). This is the canonical order used for bases, echelon pivots and printing.
  std::strong_ordering operator<=>(const Monomial& other) const noexcept;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// All monomials of degree <= max_degree in `num_vars` variables, enumerated in canonical
// order, with the inverse map. Coefficient vectors of truncated polynomials are indexed by it.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t num_vars, int max_degree);

  std::size_t num_vars() const noexcept { return num_vars_; }
  int max_degree() const noexcept { return max_degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }

  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  // Index of m, or npos if m has degree above the bound.
  std::size_t find(const Monomial& m) const;
  std::size_t at(const Monomial& m) const;

  // Half-open index range holding the monomials of exactly degree d.
  std::size_t degree_begin(int d) const { return degree_start_[d]; }
  std::size_t degree_end(int d) const { return degree_start_[d + 1]; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t num_vars_;
  int max_degree_;
  std::vector<Monomial> monomials_;
  std::vector<std::size_t> degree_start_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> lookup_;
};

// Monomials of exactly degree d, canonical order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int d);

}  // namespace socle3
