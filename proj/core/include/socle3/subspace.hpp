#pragma once

#include <memory>
#include <span>
#include <vector>

#include "socle3/linalg.hpp"
#include "socle3/monomial.hpp"
#include "socle3/polynomial.hpp"

namespace socle3 {

using RationalVec = SparseVec<Rational>;

// Shared, immutable monomial enumeration for (num_vars, max_degree).
std::shared_ptr<const MonomialIndex> monomial_index(std::size_t num_vars, int max_degree);

// Coefficient vector of p in the truncation given by `index`; throws if p has larger degree.
RationalVec to_vector(const Polynomial& p, const MonomialIndex& index);
Polynomial from_vector(const RationalVec& v, const MonomialIndex& index, VarSpace space);

// A subspace of the ring polynomials of degree <= max_degree, in canonical reduced form.
// This is how ideals of the truncated ring are represented.
class SubspaceBasis {
 public:
  SubspaceBasis(std::size_t num_vars, int max_degree);
  SubspaceBasis(std::shared_ptr<const MonomialIndex> index, Subspace<Rational> space);

  std::size_t num_vars() const noexcept { return index_->num_vars(); }
  int max_degree() const noexcept { return index_->max_degree(); }
  const MonomialIndex& index() const noexcept { return *index_; }
  const std::shared_ptr<const MonomialIndex>& index_ptr() const noexcept { return index_; }
  const Subspace<Rational>& space() const noexcept { return space_; }

  std::size_t rank() const noexcept { return space_.rank(); }
  // dim of (polynomials of degree <= D) / this.
  std::size_t codim() const noexcept { return index_->size() - space_.rank(); }

  std::vector<Polynomial> basis() const;
  bool contains(const Polynomial& p) const;
  // Normal form of p: only non-pivot monomials survive.
  Polynomial reduce(const Polynomial& p) const;
  // Monomials whose cosets form a basis of the quotient (non-pivot monomials, canonical order).
  std::vector<Monomial> standard_monomials() const;
  // True iff every monomial of degree max_degree lies in the subspace.
  bool contains_top_degree() const;

  bool operator==(const SubspaceBasis& other) const;

 private:
  std::shared_ptr<const MonomialIndex> index_;
  Subspace<Rational> space_;
};

// The degree-<=D part of the ideal generated by `generators`: span of m*g with m a monomial
// and deg(m) + deg(g) <= D.
SubspaceBasis span_to_degree(std::span<const Polynomial> generators, std::size_t num_vars, int max_degree);

// Inner approximation of J ∩ R_{<=D} for the ideal J generated by `generators`: products m*g
// are formed up to degree D + slack, where terms lying in the monomial ideal spanned by the
// monomial generators are discarded first, and the span is then cut back to degree <= D.
// Always contained in J ∩ R_{<=D}; equal to it once the slack covers the cancellations.
SubspaceBasis ideal_truncation(std::span<const Polynomial> generators, std::size_t num_vars, int max_degree,
                               int slack);

// Throws PreconditionError for different truncation parameters.
bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b);

SubspaceBasis intersection(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace socle3
