#pragma once

#include <cstddef>
#include <vector>

#include "socle3/polynomial.hpp"
#include "socle3/rational.hpp"
#include "socle3/subspace.hpp"

namespace socle3 {

// Truncation schedule for fiber lengths: start at D = 6, accept once D, D+1, D+2 agree,
// never go beyond D = 10.
inline constexpr int kFiberStartDegree = 6;
inline constexpr int kFiberMaxDegree = 10;

// Data of the one-parameter family J_b over the affine line.
struct FamilySpec {
  std::size_t n;
  std::size_t h;
  Polynomial cubic;  // F3 in n dual variables, non-degenerate
  Polynomial sigma;  // ring cubic in n variables, sigma ∘ F3 = 1
  std::vector<Rational> samples{0, 1, -1, 2, Rational(1, 2)};
};

// Throws PreconditionError unless the spec describes a family (n < h, valid F3 and sigma).
void validate(const FamilySpec& spec);

// Generators of J_b = Ann_{R_n}(F3)R + (x_i x_j)_{i<j, n<j} + (x_k^2 - 2 sigma)_{n<k<h}
//                    + (x_h^2 - b x_h - 2 sigma).
std::vector<Polynomial> family_generators(const FamilySpec& spec, const Rational& b);
SubspaceBasis family_ideal(const FamilySpec& spec, const Rational& b, int truncation_degree);

struct FiberDimension {
  std::size_t dimension = 0;
  int truncation = 0;
  bool stabilized = false;
};

// dim R_{<=D} / span_D(generators), with stabilized = (same value at D+1 and D+2).
FiberDimension fiber_dimension(const std::vector<Polynomial>& generators, std::size_t num_vars, int truncation_degree);
// Smallest D >= kFiberStartDegree at which the dimension stabilizes; ResourceError past the cap.
FiberDimension stable_fiber_dimension(const std::vector<Polynomial>& generators, std::size_t num_vars);

struct FiberReport {
  Rational b;
  std::size_t fiber_dimension = 0;
  int truncation_used = 0;
  bool stabilized = false;
  // Checks below only run for b != 0.
  bool coprime = false;
  bool intersection_verified = false;
  bool split_dimension_check = false;
  std::size_t residual_dimension = 0;  // dim A' of the (h-1)-variable algebra
};

// For b != 0: the point ideal (x_1..x_{h-1}, x_h - b) and J_b + (x_h^2) are coprime, their
// intersection is J_b, and dim R/J_b = 1 + dim A'.
FiberReport check_decomposition(const FamilySpec& spec, const Rational& b, int truncation_degree);

struct FlatFamilyReport {
  std::vector<FiberReport> fibers;
  bool constant_length = false;  // all fibers stabilized with equal dimension
  bool special_fiber_matches = false;  // J_0 == Ann_R(F3 + tail) at truncation 4
  bool all_checks_pass = false;
};

FlatFamilyReport check_flat_family(const FamilySpec& spec);

}  // namespace socle3
