#include "socle3/apolarity.hpp"

#include "socle3/error.hpp"

namespace socle3 {

AnnihilatorIdeal annihilator(const Polynomial& F) {
  if (F.is_zero()) throw PreconditionError("zero dual generator");
  return annihilator(F, F.degree() + 1);
}

AnnihilatorIdeal annihilator(const Polynomial& F, int truncation_degree) {
  if (F.space() != VarSpace::Dual) throw PreconditionError("annihilator expects a dual (y) polynomial");
  if (F.is_zero()) throw PreconditionError("zero dual generator");
  const int s = F.degree();
  if (truncation_degree < s + 1) throw PreconditionError("truncation degree must exceed deg(F)");
  const std::size_t h = F.num_vars();
  auto ring = monomial_index(h, truncation_degree);
  auto dual = monomial_index(h, s);
  std::vector<RationalVec> images;
  images.reserve(ring->size());
  for (const auto& m : ring->monomials()) {
    if (m.degree() > s) {
      images.emplace_back();
      continue;
    }
    images.push_back(to_vector(derivative_action(Polynomial::term(VarSpace::Ring, m, 1), F), *dual));
  }
  return AnnihilatorIdeal{h, truncation_degree, SubspaceBasis(ring, kernel(dual->size(), images)), F};
}

LocalAlgebra algebra_from_dual(const Polynomial& F) { return LocalAlgebra::quotient_of(annihilator(F).basis); }

HilbertFunction hilbert_function(const LocalAlgebra& A) {
  auto powers = A.max_ideal_powers();
  HilbertFunction hf;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    std::size_t next = i + 1 < powers.size() ? powers[i + 1].rank() : 0;
    hf.push_back(static_cast<int>(powers[i].rank() - next));
  }
  return hf;
}

LocalAlgebra q0(const Polynomial& F) {
  if (F.is_zero()) throw PreconditionError("zero dual generator");
  return algebra_from_dual(leading_form(F));
}

std::size_t derivative_rank(const Polynomial& form, int order) {
  const std::size_t h = form.num_vars();
  auto dual = monomial_index(h, std::max(form.degree(), 0));
  Echelon<Rational> ech(dual->size());
  for (const auto& m : monomials_of_degree(h, order))
    ech.insert(to_vector(derivative_action(Polynomial::term(VarSpace::Ring, m, 1), form), *dual));
  return ech.rank();
}

bool is_nondegenerate(const Polynomial& form, std::size_t n) {
  if (form.space() != VarSpace::Dual) throw PreconditionError("non-degeneracy is defined for dual forms");
  if (form.is_zero() || !form.is_homogeneous()) throw PreconditionError("non-degeneracy needs a nonzero homogeneous form");
  if (form.degree() < 1) throw PreconditionError("non-degeneracy needs a form of positive degree");
  if (n == 0 || n > form.num_vars()) throw PreconditionError("variable count out of range");
  for (const auto& [m, c] : form.terms())
    for (std::size_t v = n; v < form.num_vars(); ++v)
      if (m[v] != 0) return false;
  return derivative_rank(form, form.degree() - 1) == n;
}

Subspace<Rational> socle(const LocalAlgebra& A) {
  const std::size_t d = A.dim();
  // Column a: concatenation of a * e_k over the maximal-ideal basis.
  std::vector<RationalVec> cols(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t k = 1; k < d; ++k)
      for (const auto& e : A.product(a, k))
        cols[a].push_back({static_cast<std::uint32_t>((k - 1) * d + e.index), e.value});
  return kernel(d * (d - 1), cols);
}

LocalAlgebra quotient_by(const LocalAlgebra& A, const std::vector<AlgebraElement>& elements) {
  const std::size_t d = A.dim();
  for (const auto& x : elements)
    for (const auto& e : x) {
      if (e.index >= d) throw PreconditionError("element coordinates out of range");
      if (e.index == 0 && e.value != 0)
        throw PreconditionError("element outside the maximal ideal: the quotient would be the zero ring");
    }
  Echelon<Rational> ideal(d);
  for (const auto& x : elements)
    for (std::size_t k = 0; k < d; ++k) ideal.insert(A.multiply(A.basis_element(k), x));
  auto space = Subspace<Rational>::from_echelon(ideal);
  auto keep = space.non_pivots();
  std::vector<std::uint32_t> to_new(d, static_cast<std::uint32_t>(-1));
  std::vector<Monomial> basis;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    to_new[keep[k]] = static_cast<std::uint32_t>(k);
    basis.push_back(A.basis()[keep[k]]);
  }
  auto ech = space.echelon();
  const std::size_t nd = keep.size();
  std::vector<AlgebraElement> table(nd * nd);
  for (std::size_t i = 0; i < nd; ++i)
    for (std::size_t j = i; j < nd; ++j) {
      AlgebraElement e;
      for (auto& entry : ech.reduce(A.product(keep[i], keep[j]))) e.push_back({to_new[entry.index], std::move(entry.value)});
      table[i * nd + j] = e;
      table[j * nd + i] = std::move(e);
    }
  return LocalAlgebra(A.num_vars(), std::move(basis), std::move(table));
}

}  // namespace socle3
