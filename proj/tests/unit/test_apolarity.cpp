#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "socle3/apolarity.hpp"
#include "socle3/error.hpp"
#include "socle3/parser.hpp"
#include "socle3/random_cubic.hpp"
#include "socle3/structure.hpp"

using namespace socle3;

namespace {

Polynomial Y(std::string_view s, std::size_t nv) { return parse_poly(s, VarSpace::Dual, nv); }
Polynomial X(std::string_view s, std::size_t nv) { return parse_poly(s, VarSpace::Ring, nv); }

LocalAlgebra square_zero(std::size_t h) {
  std::vector<Polynomial> gens;
  for (const auto& m : monomials_of_degree(h, 2)) gens.push_back(Polynomial::term(VarSpace::Ring, m, 1));
  return LocalAlgebra::quotient_of(span_to_degree(gens, h, 2));
}

}  // namespace

TEST(Annihilator, ChainAlgebra) {
  const auto ann = annihilator(Y("y1^3", 1));
  EXPECT_EQ(ann.truncation_degree, 4);
  EXPECT_EQ(ann.basis.codim(), 4u);
  const std::vector<Polynomial> x4{X("x1^4", 1)};
  EXPECT_TRUE(subspace_equal(ann.basis, span_to_degree(x4, 1, 4)));
}

TEST(Annihilator, QuadricInTwoVariables) {
  const auto ann = annihilator(Y("y1^2+y2^2", 2));
  const std::vector<Polynomial> gens{X("x1*x2", 2), X("x1^2-x2^2", 2)};
  EXPECT_TRUE(subspace_equal(ann.basis, span_to_degree(gens, 2, 3)));
}

TEST(Annihilator, BasisAnnihilatesAndIsAnIdeal) {
  const auto F = Y("y1^3+y2^3+y3^2", 3);
  const auto ann = annihilator(F);
  EXPECT_EQ(ann.basis.codim(), 7u);
  for (const auto& g : ann.basis.basis()) {
    EXPECT_TRUE(derivative_action(g, F).is_zero());
    for (std::size_t i = 0; i < 3; ++i) {
      const auto xg = Polynomial::variable(VarSpace::Ring, 3, i) * g;
      if (xg.degree() <= ann.truncation_degree) EXPECT_TRUE(ann.basis.contains(xg));
    }
  }
}

TEST(Annihilator, ZeroInputThrows) {
  EXPECT_THROW(annihilator(Polynomial(VarSpace::Dual, 2)), PreconditionError);
  EXPECT_THROW(algebra_from_dual(Polynomial(VarSpace::Dual, 2)), PreconditionError);
}

TEST(Annihilator, DimensionDualityRandomized) {
  // dim R/Ann(F) equals the dimension of the span of all derivatives of F.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t h = 1 + rng() % 3;
    auto F = oracle::random_polynomial(rng, VarSpace::Dual, h, 4, 1 + static_cast<int>(rng() % 5));
    if (F.is_zero()) continue;
    EXPECT_EQ(algebra_from_dual(F).dim(), oracle::dual_dimension(F)) << print_poly(F);
    EXPECT_EQ(annihilator(F).basis.codim(), oracle::dual_dimension(F));
  }
}

TEST(AlgebraFromDual, Examples) {
  const auto A = algebra_from_dual(Y("y1^3", 1));
  ASSERT_EQ(A.dim(), 4u);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(A.basis()[k], Monomial(std::vector<int>{k}));

  const auto B = algebra_from_dual(Y("y1^3+y2^3+y3^2", 3));
  EXPECT_EQ(B.dim(), 7u);
  EXPECT_EQ(B.socle_degree(), 3);

  const auto C = algebra_from_dual(Y("y1*y2*y3", 3));
  ASSERT_EQ(C.dim(), 8u);
  const std::vector<std::vector<int>> expected{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                               {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(C.basis()[i], Monomial(expected[i]));
}

TEST(AlgebraFromDual, MultiplicationIsCommutativeAssociativeUnital) {
  const auto A = algebra_from_dual(Y("y1^3+2*y1*y2^2-y3^3+y4^2+y2", 4));
  const std::size_t d = A.dim();
  for (std::size_t i = 0; i < d; ++i) {
    EXPECT_EQ(A.product(0, i), A.basis_element(i));
    for (std::size_t j = 0; j < d; ++j) {
      EXPECT_EQ(A.product(i, j), A.product(j, i));
      for (std::size_t k = 0; k < d; ++k)
        EXPECT_EQ(A.multiply(A.product(i, j), A.basis_element(k)), A.multiply(A.basis_element(i), A.product(j, k)));
    }
  }
}

TEST(HilbertFunction, Examples) {
  EXPECT_EQ(hilbert_function(algebra_from_dual(Y("y1^3", 1))), (HilbertFunction{1, 1, 1, 1}));
  EXPECT_EQ(hilbert_function(algebra_from_dual(Y("y1^3+y2^3+y3^2", 3))), (HilbertFunction{1, 3, 2, 1}));
  EXPECT_EQ(hilbert_function(algebra_from_dual(Y("y1*y2*y3", 3))), (HilbertFunction{1, 3, 3, 1}));
}

TEST(HilbertFunction, MatchesDerivativeOracleRandomized) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t h = 1 + rng() % 3;
    auto F = oracle::random_polynomial(rng, VarSpace::Dual, h, 4, 2 + static_cast<int>(rng() % 4));
    if (F.is_zero()) continue;
    const auto hf = hilbert_function(algebra_from_dual(F));
    EXPECT_EQ(hf, oracle::hilbert_function(F)) << print_poly(F);
    int total = 0;
    for (int v : hf) total += v;
    EXPECT_EQ(static_cast<std::size_t>(total), algebra_from_dual(F).dim());
    EXPECT_EQ(hf.front(), 1);
  }
}

TEST(HilbertFunction, SocleThreeShapeRandomized) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const std::size_t h = n + rng() % (6 - n);
    const auto F3 = random_cubic(n, rng);
    const auto F = normal_form_dual(F3, n, h);
    EXPECT_EQ(hilbert_function(algebra_from_dual(F)),
              (HilbertFunction{1, static_cast<int>(h), static_cast<int>(n), 1}));
    EXPECT_EQ(hilbert_function(q0(F)), (HilbertFunction{1, static_cast<int>(n), static_cast<int>(n), 1}));
  }
}

TEST(Q0, Examples) {
  const auto B = q0(Y("y1^3+y2^3+y3^2", 3));
  EXPECT_EQ(B.dim(), 6u);
  EXPECT_EQ(hilbert_function(B), (HilbertFunction{1, 2, 2, 1}));
  const auto F = Y("y1^2*y2 - y2^3", 2);
  EXPECT_EQ(q0(F).basis(), algebra_from_dual(F).basis());
  const auto G = Y("y1^2+y2^2", 2);
  EXPECT_EQ(hilbert_function(q0(G)), hilbert_function(algebra_from_dual(G)));
}

TEST(Nondegenerate, Examples) {
  EXPECT_FALSE(is_nondegenerate(Y("y1^3", 2), 2));
  EXPECT_TRUE(is_nondegenerate(Y("y1^3+y2^3", 2), 2));
  EXPECT_TRUE(is_nondegenerate(Y("y1^2*y2", 2), 2));
  EXPECT_THROW(is_nondegenerate(Y("y1^3+y2", 2), 2), PreconditionError);
}

TEST(Socle, Examples) {
  const auto A = algebra_from_dual(Y("y1^3", 1));
  const auto s = socle(A);
  ASSERT_EQ(s.rank(), 1u);
  EXPECT_EQ(s.rows()[0], A.element_of(X("x1^3", 1)));
  EXPECT_EQ(socle(algebra_from_dual(Y("y1^3+y2^3+y3^2", 3))).rank(), 1u);
  EXPECT_EQ(socle(square_zero(2)).rank(), 2u);
}

TEST(Socle, GorensteinForEveryPrincipalSystem) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t h = 1 + rng() % 3;
    auto F = oracle::random_polynomial(rng, VarSpace::Dual, h, 4, 1 + static_cast<int>(rng() % 5));
    if (F.is_zero()) continue;
    EXPECT_EQ(socle(algebra_from_dual(F)).rank(), 1u) << print_poly(F);
  }
}

TEST(QuotientBy, Examples) {
  const auto A = algebra_from_dual(Y("y1^3", 1));
  const auto Q = quotient_by(A, {A.element_of(X("x1^3", 1))});
  EXPECT_EQ(Q.dim(), 3u);
  EXPECT_EQ(hilbert_function(Q), (HilbertFunction{1, 1, 1}));

  const auto G = algebra_from_dual(Y("y1^3+y2^3+y3^2", 3));
  EXPECT_EQ(quotient_by(G, {socle(G).rows()[0]}).dim(), 6u);

  const auto S = square_zero(2);
  const auto T = quotient_by(S, {S.element_of(X("x1", 2))});
  EXPECT_EQ(T.dim(), 2u);
  EXPECT_EQ(hilbert_function(T), (HilbertFunction{1, 1}));

  EXPECT_THROW(quotient_by(A, {A.element_of(X("1+x1", 1))}), PreconditionError);
}
