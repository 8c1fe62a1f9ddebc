#include "socle3/subspace.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "socle3/error.hpp"

namespace socle3 {

std::shared_ptr<const MonomialIndex> monomial_index(std::size_t num_vars, int max_degree) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, int>, std::shared_ptr<const MonomialIndex>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{num_vars, max_degree}];
  if (!slot) slot = std::make_shared<const MonomialIndex>(num_vars, max_degree);
  return slot;
}

RationalVec to_vector(const Polynomial& p, const MonomialIndex& index) {
  if (p.num_vars() != index.num_vars()) throw PreconditionError("polynomial has wrong number of variables");
  RationalVec v;
  v.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    std::size_t i = index.find(m);
    if (i == MonomialIndex::npos) throw PreconditionError("polynomial degree exceeds truncation");
    v.push_back({static_cast<std::uint32_t>(i), c});
  }
  // Term order and index order agree, but keep the invariant explicit.
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  return v;
}

Polynomial from_vector(const RationalVec& v, const MonomialIndex& index, VarSpace space) {
  Polynomial p(space, index.num_vars());
  for (const auto& e : v) p.add_term(index[e.index], e.value);
  return p;
}

SubspaceBasis::SubspaceBasis(std::size_t num_vars, int max_degree)
    : index_(monomial_index(num_vars, max_degree)), space_(index_->size()) {}

SubspaceBasis::SubspaceBasis(std::shared_ptr<const MonomialIndex> index, Subspace<Rational> space)
    : index_(std::move(index)), space_(std::move(space)) {
  if (space_.ambient_dim() != index_->size()) throw PreconditionError("subspace does not match truncation");
}

std::vector<Polynomial> SubspaceBasis::basis() const {
  std::vector<Polynomial> out;
  out.reserve(space_.rank());
  for (const auto& r : space_.rows()) out.push_back(from_vector(r, *index_, VarSpace::Ring));
  return out;
}

bool SubspaceBasis::contains(const Polynomial& p) const { return reduce(p).is_zero(); }

Polynomial SubspaceBasis::reduce(const Polynomial& p) const {
  if (p.degree() > max_degree()) throw PreconditionError("polynomial degree exceeds truncation");
  auto ech = space_.echelon();
  return from_vector(ech.reduce(to_vector(p, *index_)), *index_, p.space());
}

std::vector<Monomial> SubspaceBasis::standard_monomials() const {
  std::vector<Monomial> out;
  for (auto i : space_.non_pivots()) out.push_back((*index_)[i]);
  return out;
}

bool SubspaceBasis::contains_top_degree() const {
  auto np = space_.non_pivots();
  const auto top = index_->degree_begin(max_degree());
  return np.empty() || np.back() < top;
}

bool SubspaceBasis::operator==(const SubspaceBasis& other) const {
  return num_vars() == other.num_vars() && max_degree() == other.max_degree() && space_ == other.space_;
}

namespace {

// Span of products m*g with g ranging over the non-monomial generators and m over monomials
// outside the monomial ideal M generated by the monomial generators; terms in M are dropped
// and M itself is added back as unit rows. With `reduced_degree`, a product qualifies when its
// surviving terms have degree <= work (instead of the full product). The result is cut back
// to degree <= max_degree.
SubspaceBasis span_impl(std::span<const Polynomial> generators, std::size_t num_vars, int max_degree, int work,
                        bool reduced_degree) {
  for (const auto& g : generators) {
    if (g.space() != VarSpace::Ring || g.num_vars() != num_vars)
      throw PreconditionError("generator must be a ring polynomial in the ambient variables");
    if (!reduced_degree && g.degree() > max_degree) throw PreconditionError("truncation degree below generator degree");
  }
  auto index = monomial_index(num_vars, max_degree);
  auto windex = monomial_index(num_vars, work);

  std::vector<Monomial> monomial_gens;
  std::vector<const Polynomial*> others;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.terms().size() == 1) {
      monomial_gens.push_back(g.terms().begin()->first);
    } else {
      others.push_back(&g);
    }
  }
  // Columns: standard monomials of M up to the working degree.
  const std::size_t wsize = windex->size();
  std::vector<std::uint32_t> local(wsize, static_cast<std::uint32_t>(-1));
  std::vector<std::uint32_t> columns;
  for (std::size_t i = 0; i < wsize; ++i) {
    const Monomial& m = (*windex)[i];
    bool in_m = false;
    for (const auto& mg : monomial_gens)
      if (m.divisible_by(mg)) {
        in_m = true;
        break;
      }
    if (!in_m) {
      local[i] = static_cast<std::uint32_t>(columns.size());
      columns.push_back(static_cast<std::uint32_t>(i));
    }
  }
  // Sparse generators first, so dense ones reduce against a larger pivot set.
  std::stable_sort(others.begin(), others.end(),
                   [](const Polynomial* a, const Polynomial* b) { return a->terms().size() < b->terms().size(); });
  Echelon<Rational> ech(columns.size());
  for (const Polynomial* g : others) {
    const int max_mult = reduced_degree ? work : work - g->degree();
    if (max_mult < 0) continue;
    for (std::uint32_t col : columns) {
      const Monomial& m = (*windex)[col];
      if (m.degree() > max_mult) break;
      RationalVec v;
      bool too_high = false;
      for (const auto& [gm, c] : g->terms()) {
        Monomial prod = gm * m;
        if (prod.degree() > work) {
          // Only possible with reduced_degree; such a term must lie in M.
          bool in_m = false;
          for (const auto& mg : monomial_gens)
            if (prod.divisible_by(mg)) {
              in_m = true;
              break;
            }
          if (!in_m) {
            too_high = true;
            break;
          }
          continue;
        }
        const std::uint32_t l = local[windex->at(prod)];
        if (l != static_cast<std::uint32_t>(-1)) v.push_back({l, c});
      }
      if (too_high || v.empty()) continue;
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
      ech.insert(v);
    }
  }
  // Canonical rows, mapped back and restricted to degree <= max_degree, plus the unit rows of M.
  const std::size_t size = index->size();
  std::vector<RationalVec> rows;
  for (auto& r : ech.canonical_rows()) {
    if (columns[r.back().index] >= size) continue;
    for (auto& e : r) e.index = columns[e.index];
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < size; ++i)
    if (local[i] == static_cast<std::uint32_t>(-1)) rows.push_back({{static_cast<std::uint32_t>(i), Rational(1)}});
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.back().index < b.back().index; });
  Echelon<Rational> out(size);
  for (const auto& r : rows) out.insert(r);
  return SubspaceBasis(index, Subspace<Rational>::from_echelon(out));
}

}  // namespace

SubspaceBasis span_to_degree(std::span<const Polynomial> generators, std::size_t num_vars, int max_degree) {
  return span_impl(generators, num_vars, max_degree, max_degree, false);
}

SubspaceBasis ideal_truncation(std::span<const Polynomial> generators, std::size_t num_vars, int max_degree,
                               int slack) {
  if (slack < 0) throw PreconditionError("negative truncation slack");
  return span_impl(generators, num_vars, max_degree, max_degree + slack, true);
}

namespace {

void check_comparable(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.num_vars() != b.num_vars() || a.max_degree() != b.max_degree())
    throw PreconditionError("subspaces have different truncation parameters");
}

}  // namespace

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
  check_comparable(a, b);
  return a.space() == b.space();
}

SubspaceBasis intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
  check_comparable(a, b);
  return SubspaceBasis(a.index_ptr(), subspace_intersection(a.space(), b.space()));
}

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  check_comparable(a, b);
  return SubspaceBasis(a.index_ptr(), subspace_sum(a.space(), b.space()));
}

}  // namespace socle3
