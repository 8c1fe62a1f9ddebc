#include "socle3/structure.hpp"

#include <string>

#include "socle3/error.hpp"

namespace socle3 {

namespace {

Polynomial ring_var(std::size_t h, std::size_t i) { return Polynomial::variable(VarSpace::Ring, h, i); }

}  // namespace

void check_cubic(const Polynomial& cubic, std::size_t n) {
  if (cubic.space() != VarSpace::Dual) throw PreconditionError("cubic must be a dual (y) form");
  if (cubic.is_zero()) throw PreconditionError("zero cubic form");
  if (!cubic.is_homogeneous() || cubic.degree() != 3) throw PreconditionError("F3 must be a homogeneous cubic form");
  if (n == 0 || cubic.num_vars() != n)
    throw PreconditionError("F3 must be written in exactly n = " + std::to_string(n) + " variables");
  if (!is_nondegenerate(cubic, n))
    throw PreconditionError("degenerate cubic: second derivatives span " +
                            std::to_string(derivative_rank(cubic, 2)) + " < n = " + std::to_string(n) +
                            " linear forms");
}

void check_sigma(const Polynomial& cubic, const Polynomial& sigma) {
  if (sigma.space() != VarSpace::Ring || sigma.num_vars() != cubic.num_vars())
    throw PreconditionError("sigma must be a ring form in the variables of F3");
  if (!sigma.is_zero() && (!sigma.is_homogeneous() || sigma.degree() != 3))
    throw PreconditionError("sigma must be a cubic form");
  if (derivative_action(sigma, cubic) != Polynomial::constant(VarSpace::Dual, cubic.num_vars(), 1))
    throw PreconditionError("sigma does not satisfy sigma ∘ F3 = 1");
}

Polynomial solve_sigma(const Polynomial& cubic, std::size_t n) {
  if (cubic.space() != VarSpace::Dual) throw PreconditionError("cubic must be a dual (y) form");
  if (cubic.is_zero()) throw PreconditionError("zero cubic form");
  if (!cubic.is_homogeneous() || cubic.degree() != 3) throw PreconditionError("F3 must be a homogeneous cubic form");
  if (cubic.num_vars() != n) throw PreconditionError("F3 must be written in exactly n variables");
  for (const auto& m : monomials_of_degree(n, 3)) {
    auto x = Polynomial::term(VarSpace::Ring, m, 1);
    auto value = derivative_action(x, cubic);
    if (!value.is_zero()) return x * (Rational(1) / value.coefficient(Monomial(n)));
  }
  throw PreconditionError("no cubic monomial pairs with F3");  // unreachable for nonzero cubics
}

Polynomial normal_form_dual(const Polynomial& cubic, std::size_t n, std::size_t h) {
  if (h < n) throw PreconditionError("need n <= h");
  Polynomial F = cubic.extended_to(h);
  for (std::size_t j = n; j < h; ++j) F.add_term(Monomial::variable(h, j, 2), 1);
  return F;
}

std::vector<Polynomial> homogeneous_generators(const SubspaceBasis& ideal) {
  const auto& index = ideal.index();
  Echelon<Rational> span(index.size());
  std::vector<Polynomial> gens;
  for (const auto& row : ideal.space().rows()) {
    if (span.contains(row)) continue;
    Polynomial g = from_vector(row, index, VarSpace::Ring);
    gens.push_back(g);
    const int room = index.max_degree() - g.degree();
    for (std::size_t i = 0; i < index.degree_end(room); ++i)
      span.insert(to_vector(g * Polynomial::term(VarSpace::Ring, index[i], 1), index));
  }
  return gens;
}

std::vector<Polynomial> structure_generators(const Polynomial& cubic, std::size_t n, std::size_t h,
                                             const Polynomial& sigma) {
  check_cubic(cubic, n);
  check_sigma(cubic, sigma);
  if (h < n) throw PreconditionError("need n <= h");
  std::vector<Polynomial> gens;
  for (const auto& g : homogeneous_generators(annihilator(cubic, kStructureDegree).basis))
    gens.push_back(g.extended_to(h));
  const Polynomial two_sigma = sigma.extended_to(h) * Rational(2);
  for (std::size_t j = n; j < h; ++j) {
    for (std::size_t i = 0; i < j; ++i) gens.push_back(ring_var(h, i) * ring_var(h, j));
    gens.push_back(ring_var(h, j) * ring_var(h, j) - two_sigma);
  }
  return gens;
}

std::vector<Polynomial> with_quartic_monomials(std::vector<Polynomial> generators, std::size_t n, std::size_t h) {
  for (const auto& m : monomials_of_degree(n, kStructureDegree)) {
    std::vector<int> e(h, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = m.exponents()[i];
    generators.push_back(Polynomial::term(VarSpace::Ring, Monomial(std::move(e)), 1));
  }
  return generators;
}

AnnihilatorIdeal structure_ideal(const Polynomial& cubic, std::size_t n, std::size_t h, const Polynomial& sigma) {
  auto gens = with_quartic_monomials(structure_generators(cubic, n, h, sigma), n, h);
  return AnnihilatorIdeal{h, kStructureDegree, ideal_truncation(gens, h, kStructureDegree, kTruncationSlack),
                          std::nullopt};
}

StructureData build_structure(const Polynomial& cubic, std::size_t n, std::size_t h) {
  check_cubic(cubic, n);
  if (h < n) throw PreconditionError("need n <= h");
  Polynomial sigma = solve_sigma(cubic, n);
  auto ideal = structure_ideal(cubic, n, h, sigma);
  return StructureData{n, h, cubic, std::move(sigma), std::move(ideal)};
}

std::vector<Polynomial> socle2_generators(std::size_t h) {
  if (h < 2) throw PreconditionError("socle-2 normal form needs embedding dimension h >= 2");
  std::vector<Polynomial> gens;
  for (std::size_t j = 1; j < h; ++j)
    for (std::size_t i = 0; i < j; ++i) gens.push_back(ring_var(h, i) * ring_var(h, j));
  for (std::size_t u = 1; u < h; ++u) gens.push_back(ring_var(h, u) * ring_var(h, u) - ring_var(h, 0) * ring_var(h, 0));
  return gens;
}

AnnihilatorIdeal socle2_ideal(std::size_t h) {
  auto gens = socle2_generators(h);
  return AnnihilatorIdeal{h, 3, span_to_degree(gens, h, 3), std::nullopt};
}

bool verify_structure_lemma(const Polynomial& cubic, std::size_t n, std::size_t h, const Polynomial& sigma) {
  auto lhs = annihilator(normal_form_dual(cubic, n, h), kStructureDegree);
  auto rhs = structure_ideal(cubic, n, h, sigma);
  return subspace_equal(lhs.basis, rhs.basis);
}

}  // namespace socle3
