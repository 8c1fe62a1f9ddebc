#pragma once

#include <optional>
#include <vector>

#include "socle3/local_algebra.hpp"
#include "socle3/polynomial.hpp"
#include "socle3/subspace.hpp"

namespace socle3 {

// Ann_R(F) ∩ {deg <= D}, as a canonical subspace of the truncated ring.
struct AnnihilatorIdeal {
  std::size_t num_vars;
  int truncation_degree;
  SubspaceBasis basis;
  std::optional<Polynomial> source;
};

using HilbertFunction = std::vector<int>;

// Kernel of g -> g∘F on polynomials of degree <= deg(F) + 1.
AnnihilatorIdeal annihilator(const Polynomial& F);
// Same kernel computed at an explicit truncation degree D >= deg(F) + 1.
AnnihilatorIdeal annihilator(const Polynomial& F, int truncation_degree);

// R / Ann_R(F), with the first independent monomials as basis.
LocalAlgebra algebra_from_dual(const Polynomial& F);

// dim m^i / m^(i+1) for i = 0 .. socle degree.
HilbertFunction hilbert_function(const LocalAlgebra& A);

// R / Ann_R(F_s) for the leading form F_s of F.
LocalAlgebra q0(const Polynomial& F);

// The order-(d-1) partials of the degree-d form F span all n linear forms of S_n (and F uses
// no variable beyond y_n).
bool is_nondegenerate(const Polynomial& form, std::size_t n);
// Dimension of the span of the order-(d-1) partial derivatives of a form of degree d.
std::size_t derivative_rank(const Polynomial& form, int order);

// (0 :_A m) as a subspace of A's coordinate space.
Subspace<Rational> socle(const LocalAlgebra& A);

// A / (elements); every element must lie in the maximal ideal.
LocalAlgebra quotient_by(const LocalAlgebra& A, const std::vector<AlgebraElement>& elements);

}  // namespace socle3
