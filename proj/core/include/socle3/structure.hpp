#pragma once

#include <cstddef>
#include <vector>

#include "socle3/apolarity.hpp"

namespace socle3 {

// Truncation used for all socle-degree-3 ideal comparisons: both sides contain n^4.
inline constexpr int kStructureDegree = 4;
// Extra working degree used when truncating ideals with non-homogeneous generators.
inline constexpr int kTruncationSlack = 2;

struct StructureData {
  std::size_t n;
  std::size_t h;
  Polynomial cubic;  // F3, dual form in n variables
  Polynomial sigma;  // ring cubic form in n variables with sigma ∘ F3 = 1
  AnnihilatorIdeal ideal;
};

// Degree-3 ring form sigma with sigma ∘ F3 = 1: the first cubic monomial (canonical order)
// pairing nontrivially with F3, scaled.
Polynomial solve_sigma(const Polynomial& cubic, std::size_t n);

// F3 + y_{n+1}^2 + ... + y_h^2 in h dual variables.
Polynomial normal_form_dual(const Polynomial& cubic, std::size_t n, std::size_t h);

// Generators of Ann_{R_n}(F3) R + (x_i x_j, x_j^2 - 2 sigma)_{i<j, n<j<=h}: a homogeneous
// generating set of Ann_{R_n}(F3) followed by the tail generators, all in h variables.
std::vector<Polynomial> structure_generators(const Polynomial& cubic, std::size_t n, std::size_t h,
                                             const Polynomial& sigma);

// The ideal above at truncation degree 4; for n = h it is Ann_R(F3).
AnnihilatorIdeal structure_ideal(const Polynomial& cubic, std::size_t n, std::size_t h, const Polynomial& sigma);

StructureData build_structure(const Polynomial& cubic, std::size_t n, std::size_t h);

// (x_i x_j, x_u^2 - x_1^2)_{i<j, u>=2} at truncation degree 3.
AnnihilatorIdeal socle2_ideal(std::size_t h);
std::vector<Polynomial> socle2_generators(std::size_t h);

// structure_ideal(...) == annihilator(F3 + tail) at truncation degree 4.
bool verify_structure_lemma(const Polynomial& cubic, std::size_t n, std::size_t h, const Polynomial& sigma);

// Generating set of a homogeneous ideal given by its truncated subspace, chosen greedily by
// degree from the canonical basis.
std::vector<Polynomial> homogeneous_generators(const SubspaceBasis& ideal);

// Appends every degree-4 monomial in x1..xn (they annihilate any cubic in y1..yn). The ideal
// is unchanged; truncated spans get much smaller.
std::vector<Polynomial> with_quartic_monomials(std::vector<Polynomial> generators, std::size_t n, std::size_t h);

// Validates the hypotheses shared by the structure and deformation constructions: a nonzero
// non-degenerate cubic form in n dual variables, and sigma a ring cubic with sigma ∘ F3 = 1.
void check_cubic(const Polynomial& cubic, std::size_t n);
void check_sigma(const Polynomial& cubic, const Polynomial& sigma);

}  // namespace socle3
