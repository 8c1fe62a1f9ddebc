#include "socle3/local_algebra.hpp"

#include <numeric>

#include "socle3/error.hpp"

namespace socle3 {

LocalAlgebra::LocalAlgebra(std::size_t num_vars, std::vector<Monomial> basis, std::vector<AlgebraElement> table)
    : num_vars_(num_vars), basis_(std::move(basis)), table_(std::move(table)) {
  if (basis_.empty()) throw PreconditionError("zero ring: the algebra has no basis");
  if (basis_[0].degree() != 0) throw PreconditionError("first basis element must be 1");
  if (table_.size() != basis_.size() * basis_.size()) throw PreconditionError("multiplication table has wrong size");
  for (const auto& m : basis_)
    if (m.num_vars() != num_vars_) throw PreconditionError("basis monomial has wrong number of variables");
  compute_socle_degree();
}

LocalAlgebra LocalAlgebra::quotient_of(const SubspaceBasis& ideal) {
  if (!ideal.contains_top_degree())
    throw PreconditionError("truncation too small: not all top-degree monomials lie in the ideal");
  const MonomialIndex& index = ideal.index();
  const auto non_pivots = ideal.space().non_pivots();
  if (non_pivots.empty() || non_pivots[0] != 0) throw PreconditionError("ideal contains a unit");

  std::vector<std::uint32_t> to_basis(index.size(), static_cast<std::uint32_t>(-1));
  std::vector<Monomial> basis;
  for (std::size_t k = 0; k < non_pivots.size(); ++k) {
    to_basis[non_pivots[k]] = static_cast<std::uint32_t>(k);
    basis.push_back(index[non_pivots[k]]);
  }
  const std::size_t d = basis.size();
  auto ech = ideal.space().echelon();
  std::vector<AlgebraElement> table(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Monomial prod = basis[i] * basis[j];
      AlgebraElement e;
      if (prod.degree() <= index.max_degree()) {
        RationalVec r = ech.reduce({{static_cast<std::uint32_t>(index.at(prod)), Rational(1)}});
        for (auto& entry : r) e.push_back({to_basis[entry.index], std::move(entry.value)});
      }
      table[i * d + j] = e;
      table[j * d + i] = std::move(e);
    }
  }
  LocalAlgebra A(index.num_vars(), std::move(basis), std::move(table));
  A.ideal_ = ideal;
  A.monomial_to_basis_ = std::move(to_basis);
  return A;
}

std::vector<std::size_t> LocalAlgebra::max_ideal_basis() const {
  std::vector<std::size_t> out(dim() - 1);
  std::iota(out.begin(), out.end(), std::size_t{1});
  return out;
}

AlgebraElement LocalAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  Accumulator<Rational> acc(dim());
  for (const auto& x : a)
    for (const auto& y : b) {
      const Rational c = x.value * y.value;
      for (const auto& z : product(x.index, y.index)) acc.add(z.index, c * z.value);
    }
  return acc.drain();
}

AlgebraElement LocalAlgebra::element_of(const Polynomial& p) const {
  if (!ideal_) throw PreconditionError("algebra was not built from a polynomial ideal");
  if (p.space() != VarSpace::Ring || p.num_vars() != num_vars_)
    throw PreconditionError("element_of expects a ring polynomial in the algebra's variables");
  const MonomialIndex& index = ideal_->index();
  Polynomial truncated(VarSpace::Ring, num_vars_);
  for (const auto& [m, c] : p.terms())
    if (m.degree() <= index.max_degree()) truncated.add_term(m, c);
  auto ech = ideal_->space().echelon();
  AlgebraElement e;
  for (auto& entry : ech.reduce(to_vector(truncated, index)))
    e.push_back({monomial_to_basis_[entry.index], std::move(entry.value)});
  return e;
}

std::vector<Subspace<Rational>> LocalAlgebra::max_ideal_powers() const {
  std::vector<Subspace<Rational>> powers;
  powers.push_back(Subspace<Rational>::whole(dim()));
  std::vector<AlgebraElement> gens;
  for (std::size_t i = 1; i < dim(); ++i) gens.push_back(basis_element(i));
  Subspace<Rational> cur = Subspace<Rational>::span(dim(), gens);
  while (!cur.empty()) {
    powers.push_back(cur);
    Echelon<Rational> next(dim());
    for (const auto& row : cur.rows())
      for (std::size_t k = 1; k < dim(); ++k) next.insert(multiply(row, basis_element(k)));
    cur = Subspace<Rational>::from_echelon(next);
  }
  return powers;
}

void LocalAlgebra::compute_socle_degree() {
  socle_degree_ = static_cast<int>(max_ideal_powers().size()) - 1;
}

int LocalAlgebra::weighted_degree(std::size_t basis_index, const std::vector<int>& weights) const {
  int w = 0;
  const Monomial& m = basis_[basis_index];
  for (std::size_t v = 0; v < num_vars_; ++v) w += m[v] * weights[v];
  return w;
}

std::optional<std::vector<int>> LocalAlgebra::find_grading() const {
  // Each nonzero structure constant c_ij^k imposes w . (a_i + a_j - a_k) = 0.
  const std::size_t h = num_vars_;
  Echelon<Rational> constraints(h);
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (const auto& e : product(i, j)) {
        RationalVec row;
        for (std::size_t v = 0; v < h; ++v) {
          int c = basis_[i][v] + basis_[j][v] - basis_[e.index][v];
          if (c != 0) row.push_back({static_cast<std::uint32_t>(v), Rational(c)});
        }
        if (!row.empty()) constraints.insert(row);
      }
  // Null space of the constraint rows, as columns of the transposed system.
  std::vector<RationalVec> cols(h);
  const auto rows = constraints.canonical_rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& e : rows[r]) cols[e.index].push_back({static_cast<std::uint32_t>(r), e.value});
  Subspace<Rational> null = kernel(rows.size(), cols);
  if (null.empty()) return std::nullopt;
  // Try small nonnegative combinations of the null-space basis, in a fixed order, until every
  // variable gets a positive weight.
  const auto& basis = null.rows();
  const std::size_t k = basis.size();
  std::vector<int> coeff(k, 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rational> w(h, Rational(0));
    for (std::size_t b = 0; b < k; ++b)
      for (const auto& e : basis[b]) w[e.index] += coeff[b] * e.value;
    bool positive = true, negative = true;
    for (const auto& x : w) {
      positive = positive && sgn(x) > 0;
      negative = negative && sgn(x) < 0;
    }
    if (positive || negative) {
      Integer l = 1;
      for (const auto& x : w) l = lcm(l, x.get_den());
      std::vector<Integer> iw(h);
      Integer g = 0;
      for (std::size_t v = 0; v < h; ++v) {
        iw[v] = abs(Integer(w[v] * Rational(l)));
        g = gcd(g, iw[v]);
      }
      std::vector<int> out(h);
      for (std::size_t v = 0; v < h; ++v) {
        Integer q = iw[v] / g;
        if (!q.fits_sint_p() || q > 1000) return std::nullopt;
        out[v] = static_cast<int>(q.get_si());
      }
      return out;
    }
    // Deterministic next combination: cycle coefficients through 1..4 with alternating signs.
    for (std::size_t b = 0; b < k; ++b) coeff[b] = 1 + static_cast<int>((attempt * 7 + b * 3) % 4) * ((attempt + b) % 2 ? -1 : 1);
  }
  return std::nullopt;
}

}  // namespace socle3
