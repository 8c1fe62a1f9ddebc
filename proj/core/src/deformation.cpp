#include "socle3/deformation.hpp"

#include <string>

#include "socle3/apolarity.hpp"
#include "socle3/error.hpp"
#include "socle3/parser.hpp"
#include "socle3/structure.hpp"

namespace socle3 {

namespace {

Polynomial ring_var(std::size_t h, std::size_t i) { return Polynomial::variable(VarSpace::Ring, h, i); }

std::vector<Polynomial> point_ideal(std::size_t h, const Rational& b) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i + 1 < h; ++i) gens.push_back(ring_var(h, i));
  gens.push_back(ring_var(h, h - 1) - Polynomial::constant(VarSpace::Ring, h, b));
  return gens;
}

}  // namespace

void validate(const FamilySpec& spec) {
  check_cubic(spec.cubic, spec.n);
  check_sigma(spec.cubic, spec.sigma);
  if (spec.n >= spec.h) throw PreconditionError("family requires n < h");
}

std::vector<Polynomial> family_generators(const FamilySpec& spec, const Rational& b) {
  validate(spec);
  const std::size_t h = spec.h;
  std::vector<Polynomial> gens;
  for (const auto& g : homogeneous_generators(annihilator(spec.cubic, kStructureDegree).basis))
    gens.push_back(g.extended_to(h));
  const Polynomial two_sigma = spec.sigma.extended_to(h) * Rational(2);
  for (std::size_t j = spec.n; j < h; ++j) {
    for (std::size_t i = 0; i < j; ++i) gens.push_back(ring_var(h, i) * ring_var(h, j));
    Polynomial sq = ring_var(h, j) * ring_var(h, j) - two_sigma;
    if (j + 1 == h) sq -= ring_var(h, j) * b;
    gens.push_back(std::move(sq));
  }
  return with_quartic_monomials(std::move(gens), spec.n, h);
}

SubspaceBasis family_ideal(const FamilySpec& spec, const Rational& b, int truncation_degree) {
  if (truncation_degree < kStructureDegree) throw PreconditionError("family truncation degree must be at least 4");
  return ideal_truncation(family_generators(spec, b), spec.h, truncation_degree, kTruncationSlack);
}

FiberDimension fiber_dimension(const std::vector<Polynomial>& generators, std::size_t num_vars, int truncation_degree) {
  if (truncation_degree < kStructureDegree) throw PreconditionError("fiber truncation degree must be at least 4");
  FiberDimension out;
  out.truncation = truncation_degree;
  out.dimension = ideal_truncation(generators, num_vars, truncation_degree, kTruncationSlack).codim();
  const auto d1 = ideal_truncation(generators, num_vars, truncation_degree + 1, kTruncationSlack).codim();
  const auto d2 = ideal_truncation(generators, num_vars, truncation_degree + 2, kTruncationSlack).codim();
  out.stabilized = out.dimension == d1 && d1 == d2;
  return out;
}

FiberDimension stable_fiber_dimension(const std::vector<Polynomial>& generators, std::size_t num_vars) {
  std::vector<std::size_t> dims;
  for (int D = kFiberStartDegree; D <= kFiberMaxDegree; ++D) {
    dims.push_back(ideal_truncation(generators, num_vars, D, kTruncationSlack).codim());
    const std::size_t k = dims.size();
    if (k >= 3 && dims[k - 1] == dims[k - 2] && dims[k - 2] == dims[k - 3])
      return FiberDimension{dims[k - 3], D - 2, true};
  }
  throw ResourceError("fiber length did not stabilize up to truncation degree " + std::to_string(kFiberMaxDegree));
}

namespace {

FiberReport decomposition_report(const FamilySpec& spec, const Rational& b, int truncation_degree,
                                 const std::vector<Polynomial>& gens, const FiberDimension& fiber) {
  const std::size_t h = spec.h;
  const int D = truncation_degree;
  FiberReport r;
  r.b = b;
  r.fiber_dimension = fiber.dimension;
  r.truncation_used = fiber.truncation;
  r.stabilized = fiber.stabilized;

  const SubspaceBasis J = ideal_truncation(gens, h, D, kTruncationSlack);
  const SubspaceBasis L = span_to_degree(point_ideal(h, b), h, D);
  auto with_square = gens;
  with_square.push_back(ring_var(h, h - 1) * ring_var(h, h - 1));
  const SubspaceBasis Jsq = ideal_truncation(with_square, h, D, kTruncationSlack);

  r.coprime = sum(L, Jsq).contains(Polynomial::constant(VarSpace::Ring, h, 1));
  r.intersection_verified = subspace_equal(intersection(L, Jsq), J);

  auto residual = with_quartic_monomials(structure_generators(spec.cubic, spec.n, h - 1, spec.sigma), spec.n, h - 1);
  r.residual_dimension = stable_fiber_dimension(residual, h - 1).dimension;
  r.split_dimension_check = r.fiber_dimension == 1 + r.residual_dimension;
  return r;
}

}  // namespace

FiberReport check_decomposition(const FamilySpec& spec, const Rational& b, int truncation_degree) {
  if (b == 0) throw PreconditionError("decomposition check needs b != 0");
  validate(spec);
  auto gens = family_generators(spec, b);
  return decomposition_report(spec, b, truncation_degree, gens, stable_fiber_dimension(gens, spec.h));
}

FlatFamilyReport check_flat_family(const FamilySpec& spec) {
  validate(spec);
  FlatFamilyReport report;
  for (const auto& b : spec.samples) {
    if (b == 0) {
      FiberReport r;
      r.b = b;
      auto fiber = stable_fiber_dimension(family_generators(spec, b), spec.h);
      r.fiber_dimension = fiber.dimension;
      r.truncation_used = fiber.truncation;
      r.stabilized = fiber.stabilized;
      report.fibers.push_back(std::move(r));
    } else {
      // Work at the stabilized truncation of this fiber.
      auto gens = family_generators(spec, b);
      auto fiber = stable_fiber_dimension(gens, spec.h);
      report.fibers.push_back(decomposition_report(spec, b, fiber.truncation, gens, fiber));
    }
  }
  report.constant_length = !report.fibers.empty();
  for (const auto& f : report.fibers)
    report.constant_length = report.constant_length && f.stabilized &&
                             f.fiber_dimension == report.fibers.front().fiber_dimension;
  report.special_fiber_matches =
      subspace_equal(family_ideal(spec, 0, kStructureDegree),
                     annihilator(normal_form_dual(spec.cubic, spec.n, spec.h), kStructureDegree).basis);
  report.all_checks_pass = report.constant_length && report.special_fiber_matches;
  for (const auto& f : report.fibers)
    if (f.b != 0)
      report.all_checks_pass =
          report.all_checks_pass && f.coprime && f.intersection_verified && f.split_dimension_check;
  return report;
}

}  // namespace socle3
