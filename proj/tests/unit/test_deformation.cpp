#include <gtest/gtest.h>

#include <random>

#include "socle3/apolarity.hpp"
#include "socle3/deformation.hpp"
#include "socle3/error.hpp"
#include "socle3/parser.hpp"
#include "socle3/random_cubic.hpp"
#include "socle3/structure.hpp"

using namespace socle3;

namespace {

Polynomial Y(std::string_view s, std::size_t nv) { return parse_poly(s, VarSpace::Dual, nv); }
Polynomial X(std::string_view s, std::size_t nv) { return parse_poly(s, VarSpace::Ring, nv); }

FamilySpec running_spec() { return FamilySpec{2, 3, Y("y1^3+y2^3", 2), X("1/6*x1^3", 2)}; }

}  // namespace

TEST(FamilyIdeal, SpecialFiberIsTheAnnihilator) {
  const auto spec = running_spec();
  const auto F = Y("y1^3+y2^3+y3^2", 3);
  EXPECT_TRUE(subspace_equal(family_ideal(spec, 0, 5), annihilator(F, 5).basis));
  EXPECT_TRUE(subspace_equal(family_ideal(spec, 0, 4), annihilator(F, 4).basis));
}

TEST(FamilyIdeal, Generators) {
  const auto spec = running_spec();
  const auto gens = family_generators(spec, 1);
  bool found = false;
  for (const auto& g : gens) found = found || g == X("x3^2 - x3 - 1/3*x1^3", 3);
  EXPECT_TRUE(found);
  const auto half = family_ideal(spec, Rational(1, 2), 5);
  EXPECT_TRUE(half.contains(X("x3^2 - 1/2*x3 - 1/3*x1^3", 3)));
}

TEST(FamilyIdeal, Preconditions) {
  auto spec = running_spec();
  EXPECT_THROW(family_ideal(spec, 0, 3), PreconditionError);
  spec.h = 2;
  try {
    family_ideal(spec, 0, 4);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("family requires n < h"), std::string::npos);
  }
  FamilySpec degenerate{2, 3, Y("y1^3", 2), X("1/6*x1^3", 2)};
  EXPECT_THROW(check_flat_family(degenerate), PreconditionError);
}

TEST(FiberDimension, Examples) {
  const std::vector<Polynomial> x4{X("x1^4", 1)};
  const auto a = fiber_dimension(x4, 1, 6);
  EXPECT_EQ(a.dimension, 4u);
  EXPECT_TRUE(a.stabilized);

  const auto spec = running_spec();
  const auto b0 = fiber_dimension(family_generators(spec, 0), 3, 5);
  EXPECT_EQ(b0.dimension, 7u);
  EXPECT_TRUE(b0.stabilized);
  const auto b1 = fiber_dimension(family_generators(spec, 1), 3, 7);
  EXPECT_EQ(b1.dimension, 7u);
  EXPECT_TRUE(b1.stabilized);
}

TEST(FiberDimension, CountsPointsAwayFromTheOrigin) {
  // x1^2 - x1 cuts out the two reduced points 0 and 1.
  const std::vector<Polynomial> gens{X("x1^2 - x1", 1)};
  const auto f = fiber_dimension(gens, 1, 4);
  EXPECT_EQ(f.dimension, 2u);
  EXPECT_TRUE(f.stabilized);
}

TEST(Decomposition, RunningSpec) {
  const auto spec = running_spec();
  for (const Rational& b : {Rational(1), Rational(-2)}) {
    const auto r = check_decomposition(spec, b, 6);
    EXPECT_TRUE(r.coprime);
    EXPECT_TRUE(r.intersection_verified);
    EXPECT_TRUE(r.split_dimension_check);
    EXPECT_EQ(r.fiber_dimension, 7u);
    EXPECT_EQ(r.residual_dimension, 6u);
  }
  EXPECT_THROW(check_decomposition(spec, 0, 6), PreconditionError);
}

TEST(Decomposition, ChainWithOneTailVariable) {
  FamilySpec spec{1, 2, Y("y1^3", 1), X("1/6*x1^3", 1)};
  const auto r = check_decomposition(spec, 1, 6);
  EXPECT_EQ(r.fiber_dimension, 5u);
  EXPECT_EQ(r.residual_dimension, 4u);
  EXPECT_TRUE(r.split_dimension_check);
}

TEST(FlatFamily, RunningSpecAllFibersSeven) {
  const auto rep = check_flat_family(running_spec());
  ASSERT_EQ(rep.fibers.size(), 5u);
  for (const auto& f : rep.fibers) {
    EXPECT_EQ(f.fiber_dimension, 7u);
    EXPECT_TRUE(f.stabilized);
  }
  EXPECT_TRUE(rep.constant_length);
  EXPECT_TRUE(rep.special_fiber_matches);
  EXPECT_TRUE(rep.all_checks_pass);
}

TEST(FlatFamily, RandomizedSpecsHaveLengthTwoPlusHPlusN) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const std::size_t h = n + 1 + rng() % 2;
    const auto F3 = random_cubic(n, rng);
    FamilySpec spec{n, h, F3, solve_sigma(F3, n)};
    const auto rep = check_flat_family(spec);
    for (const auto& f : rep.fibers) EXPECT_EQ(f.fiber_dimension, 2 + h + n) << print_poly(F3);
    EXPECT_TRUE(rep.all_checks_pass) << print_poly(F3);
  }
}
