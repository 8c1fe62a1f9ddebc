#include "socle3/resolution.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "socle3/apolarity.hpp"
#include "socle3/error.hpp"
#include "socle3/prime_field.hpp"

namespace socle3 {

std::size_t effective_max_ambient(const ResolutionOptions& options) {
  if (options.max_ambient != 0) return options.max_ambient;
  if (const char* env = std::getenv("SOCLE3_MAX_DIM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxAmbient;
}

namespace {

template <class F>
F convert(const Rational& q);
template <>
Rational convert<Rational>(const Rational& q) {
  return q;
}
template <>
PrimeField convert<PrimeField>(const Rational& q) {
  return PrimeField::from_rational(q);
}

// Algebra data in the working field, plus the internal degree of each basis element.
template <class F>
struct AlgebraView {
  std::size_t d = 0;
  std::vector<SparseVec<F>> table;
  std::vector<int> degree;
  std::vector<std::size_t> generators;  // basis indices generating m as an ideal

  const SparseVec<F>& mul(std::size_t i, std::size_t j) const { return table[i * d + j]; }
};

template <class F>
AlgebraView<F> make_view(const LocalAlgebra& A, const std::optional<std::vector<int>>& grading) {
  AlgebraView<F> v;
  v.d = A.dim();
  v.table.resize(v.d * v.d);
  for (std::size_t i = 0; i < v.d; ++i)
    for (std::size_t j = 0; j < v.d; ++j)
      for (const auto& e : A.product(i, j)) v.table[i * v.d + j].push_back({e.index, convert<F>(e.value)});
  v.degree.assign(v.d, 0);
  if (grading)
    for (std::size_t i = 0; i < v.d; ++i) v.degree[i] = A.weighted_degree(i, *grading);
  // The degree-one basis monomials generate m; verify and otherwise fall back to all of m.
  for (std::size_t i = 1; i < v.d; ++i)
    if (A.basis()[i].degree() == 1) v.generators.push_back(i);
  Echelon<Rational> span(v.d);
  for (std::size_t g : v.generators)
    for (std::size_t k = 0; k < v.d; ++k) span.insert(A.product(g, k));
  if (span.rank() != v.d - 1) {
    v.generators.clear();
    for (std::size_t i = 1; i < v.d; ++i) v.generators.push_back(i);
  }
  return v;
}

// Free A-module with homogeneous generators. Global coordinate of (generator k, basis l) is
// k * d + l; coordinates are grouped into blocks of equal internal degree.
template <class F>
class FreeModule {
 public:
  FreeModule(const AlgebraView<F>& A, std::vector<int> gen_degrees) : A_(&A), gen_degrees_(std::move(gen_degrees)) {
    const std::size_t d = A.d;
    local_.resize(dim());
    for (std::size_t k = 0; k < rank(); ++k)
      for (std::size_t l = 0; l < d; ++l) {
        auto& members = blocks_[gen_degrees_[k] + A.degree[l]];
        local_[k * d + l] = static_cast<std::uint32_t>(members.size());
        members.push_back(static_cast<std::uint32_t>(k * d + l));
      }
  }

  std::size_t rank() const noexcept { return gen_degrees_.size(); }
  std::size_t dim() const noexcept { return rank() * A_->d; }
  const std::vector<int>& gen_degrees() const noexcept { return gen_degrees_; }
  const std::map<int, std::vector<std::uint32_t>>& blocks() const noexcept { return blocks_; }
  std::size_t block_size(int t) const {
    auto it = blocks_.find(t);
    return it == blocks_.end() ? 0 : it->second.size();
  }
  int degree_of(std::uint32_t global) const { return gen_degrees_[global / A_->d] + A_->degree[global % A_->d]; }

  SparseVec<F> to_local(const SparseVec<F>& v) const {
    SparseVec<F> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back({local_[e.index], e.value});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    return out;
  }

  SparseVec<F> to_global(const SparseVec<F>& v, int t) const {
    const auto& members = blocks_.at(t);
    SparseVec<F> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back({members[e.index], e.value});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    return out;
  }

  // basis element a of A times a module element.
  SparseVec<F> times(std::size_t a, const SparseVec<F>& v) const {
    const std::size_t d = A_->d;
    SparseVec<F> out;
    for (const auto& e : v) {
      const std::size_t k = e.index / d, l = e.index % d;
      for (const auto& p : A_->mul(a, l)) out.push_back({static_cast<std::uint32_t>(k * d + p.index), e.value * p.value});
    }
    return normalize(std::move(out));
  }

  static SparseVec<F> normalize(SparseVec<F> v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    SparseVec<F> out;
    out.reserve(v.size());
    for (auto& e : v) {
      if (!out.empty() && out.back().index == e.index) {
        out.back().value += e.value;
        if (out.back().value == 0) out.pop_back();
      } else if (!(e.value == 0)) {
        out.push_back(std::move(e));
      }
    }
    return out;
  }

 private:
  const AlgebraView<F>* A_;
  std::vector<int> gen_degrees_;
  std::vector<std::uint32_t> local_;
  std::map<int, std::vector<std::uint32_t>> blocks_;
};

// A submodule given by a K-basis, grouped by internal degree (global coordinates).
template <class F>
using GradedBasis = std::map<int, std::vector<SparseVec<F>>>;

template <class F>
struct GeneratorChoice {
  std::vector<int> degrees;
  std::vector<SparseVec<F>> vectors;
  std::size_t max_ideal_times_dim = 0;  // dim of m * Z
};

// Minimal generators of Z: in each degree, a complement of (m Z)_t in Z_t.
template <class F>
GeneratorChoice<F> minimal_generators(const AlgebraView<F>& A, const FreeModule<F>& M, const GradedBasis<F>& Z) {
  GeneratorChoice<F> out;
  for (const auto& [t, basis] : Z) {
    Echelon<F> ech(M.block_size(t));
    for (std::size_t g : A.generators) {
      auto it = Z.find(t - A.degree[g]);
      if (it == Z.end()) continue;
      for (const auto& z : it->second) {
        auto prod = M.times(g, z);
        if (!prod.empty()) ech.insert(M.to_local(prod));
      }
    }
    out.max_ideal_times_dim += ech.rank();
    for (const auto& z : basis) {
      if (ech.insert(M.to_local(z))) {
        out.degrees.push_back(t);
        out.vectors.push_back(z);
      }
    }
  }
  return out;
}

// Kernel of F_i -> F_{i-1}, e_k -> images[k], restricted to m F_i (which contains it).
template <class F>
GradedBasis<F> syzygies(const AlgebraView<F>& A, const FreeModule<F>& source, const FreeModule<F>& target,
                        const std::vector<SparseVec<F>>& images) {
  GradedBasis<F> Z;
  const std::size_t d = A.d;
  for (const auto& [t, members] : source.blocks()) {
    std::vector<std::uint32_t> cols;
    std::vector<SparseVec<F>> col_images;
    for (std::uint32_t g : members) {
      const std::size_t k = g / d, l = g % d;
      if (l == 0) continue;
      cols.push_back(g);
      auto img = target.times(l, images[k]);
      col_images.push_back(target.to_local(img));
    }
    if (cols.empty()) continue;
    Subspace<F> ker = kernel(target.block_size(t), col_images);
    auto& bucket = Z[t];
    for (const auto& row : ker.rows()) {
      SparseVec<F> v;
      v.reserve(row.size());
      for (const auto& e : row) v.push_back({cols[e.index], e.value});
      bucket.push_back(std::move(v));
    }
    if (bucket.empty()) Z.erase(t);
  }
  return Z;
}

template <class F>
RationalVec to_rational_vec(const SparseVec<F>& v) {
  if constexpr (std::is_same_v<F, Rational>) {
    return v;
  } else {
    return {};
  }
}

template <class F>
Resolution resolve_impl(const LocalAlgebra& A, std::size_t N, const ResolutionOptions& options,
                        std::optional<std::vector<int>> forced_grading = std::nullopt) {
  const std::size_t max_ambient = effective_max_ambient(options);
  Resolution res;
  if (forced_grading) res.grading = std::move(forced_grading);
  else if (options.use_grading) res.grading = A.find_grading();
  const AlgebraView<F> view = make_view<F>(A, res.grading);
  const std::size_t d = view.d;

  res.betti.algebra_dim = d;
  res.betti.source = BettiSource::DirectResolution;
  res.betti.values.push_back(1);
  res.steps.push_back(ResolutionStep{0, 1, {0}, {}});

  FreeModule<F> prev(view, {0});
  GradedBasis<F> Z;  // Z_0 = m inside F_0 = A
  for (std::size_t l = 1; l < d; ++l) Z[view.degree[l]].push_back({{static_cast<std::uint32_t>(l), F(1)}});
  std::size_t z_dim = d - 1;

  for (std::size_t i = 1; i <= N; ++i) {
    if (prev.dim() > max_ambient)
      throw ResourceError("resolution step " + std::to_string(i) + " needs syzygies in dimension " +
                          std::to_string(prev.dim()) + " > limit " + std::to_string(max_ambient) +
                          " (set SOCLE3_MAX_DIM to raise it)");
    GeneratorChoice<F> gens = minimal_generators(view, prev, Z);
    if (gens.vectors.size() + gens.max_ideal_times_dim != z_dim)
      throw std::logic_error("resolution: generator count inconsistent with syzygy dimension");
    const std::size_t b = gens.vectors.size();
    res.betti.values.push_back(b);
    ResolutionStep step{i, b, gens.degrees, {}};
    if (options.keep_matrices)
      for (const auto& v : gens.vectors) step.images.push_back(to_rational_vec(v));
    res.steps.push_back(std::move(step));
    if (i == N || b == 0) break;

    FreeModule<F> cur(view, gens.degrees);
    if (cur.dim() > max_ambient)
      throw ResourceError("resolution step " + std::to_string(i + 1) + " needs syzygies in dimension " +
                          std::to_string(cur.dim()) + " > limit " + std::to_string(max_ambient) +
                          " (set SOCLE3_MAX_DIM to raise it)");
    GradedBasis<F> next = syzygies(view, cur, prev, gens.vectors);
    std::size_t next_dim = 0;
    for (const auto& [t, basis] : next) next_dim += basis.size();
    // Exactness: Z_i = ker(m F_i -> m Z_{i-1}), and that map is onto.
    if (next_dim != (d - 1) * b - gens.max_ideal_times_dim)
      throw std::logic_error("resolution: syzygy dimension violates exactness");
    Z = std::move(next);
    z_dim = next_dim;
    prev = std::move(cur);
  }
  while (res.betti.values.size() < N + 1) res.betti.values.push_back(0);
  const auto hf = hilbert_function(A);
  if (N >= 1 && hf.size() > 1 && res.betti.values[1] != hf[1])
    throw std::logic_error("resolution: b_1 differs from the embedding dimension");
  return res;
}

}  // namespace

Resolution resolve(const LocalAlgebra& A, std::size_t N, const ResolutionOptions& options) {
  if (N > kMaxBettiOrder)
    throw ResourceError("Betti order " + std::to_string(N) + " exceeds the cap " + std::to_string(kMaxBettiOrder));
  if (options.field == FieldMode::PrimeHeuristic) {
    if (options.keep_matrices) throw PreconditionError("presentation matrices are only kept in exact mode");
    return resolve_impl<PrimeField>(A, N, options);
  }
  return resolve_impl<Rational>(A, N, options);
}

BettiSequence betti_numbers(const LocalAlgebra& A, std::size_t N, const ResolutionOptions& options) {
  return resolve(A, N, options).betti;
}

std::optional<BettiSequence> linear_betti_certificate(const LocalAlgebra& A, std::size_t N,
                                                      const ResolutionOptions& options) {
  if (N > kMaxBettiOrder)
    throw ResourceError("Betti order " + std::to_string(N) + " exceeds the cap " + std::to_string(kMaxBettiOrder));
  const std::size_t d = A.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& e : A.product(i, j))
        if (A.basis()[i].degree() + A.basis()[j].degree() != A.basis()[e.index].degree()) return std::nullopt;
  Resolution res;
  try {
    res = resolve_impl<PrimeField>(A, N, options, std::vector<int>(A.num_vars(), 1));
  } catch (const PreconditionError&) {
    return std::nullopt;  // a denominator vanishes mod p
  }
  for (std::size_t i = 0; i < res.steps.size(); ++i)
    for (int t : res.steps[i].generator_degrees)
      if (t != static_cast<int>(i)) return std::nullopt;
  // A linear resolution satisfies P_A(z) H_A(-z) = 1.
  const auto hf = hilbert_function(A);
  QSeries h_minus(hf.size());
  for (std::size_t i = 0; i < hf.size(); ++i) h_minus[i] = Rational(i % 2 ? -hf[i] : hf[i]);
  if (to_rational(res.betti.values) != series_inverse(h_minus, N))
    throw std::logic_error("linear resolution violates the Hilbert series identity");
  res.betti.source = BettiSource::LinearCertificate;
  return res.betti;
}

bool check_resolution(const LocalAlgebra& A, const Resolution& res) {
  const std::size_t d = A.dim();
  // Presentation entries in m: no coordinate on basis element 0.
  for (std::size_t i = 1; i < res.steps.size(); ++i) {
    const auto& step = res.steps[i];
    if (step.images.size() != step.rank) return false;
    for (const auto& v : step.images)
      for (const auto& e : v)
        if (e.index % d == 0) return false;
  }
  // phi_{i-1}(phi_i(e_k)) = 0, and phi_1 lands in m = kernel of the augmentation.
  for (std::size_t i = 2; i < res.steps.size(); ++i) {
    const auto& lower = res.steps[i - 1].images;
    for (const auto& v : res.steps[i].images) {
      Accumulator<Rational> acc(d * std::max<std::size_t>(res.steps[i - 2].rank, 1));
      for (const auto& e : v) {
        const std::size_t k = e.index / d, l = e.index % d;
        for (const auto& w : lower[k]) {
          const std::size_t k2 = w.index / d, l2 = w.index % d;
          for (const auto& p : A.product(l, l2)) acc.add(static_cast<std::uint32_t>(k2 * d + p.index), e.value * w.value * p.value);
        }
      }
      if (!acc.drain().empty()) return false;
    }
  }
  return true;
}

std::optional<QSeries> main_theorem_prediction(const IntSeries& betti_q0, std::size_t h, std::size_t n,
                                               std::size_t N, FormulaVariant variant) {
  if (h < n) throw PreconditionError("main theorem needs n <= h");
  if (betti_q0.size() < N + 1) throw PreconditionError("Betti numbers of Q(0) do not reach the requested order");
  QSeries pb = to_rational(IntSeries(betti_q0.begin(), betti_q0.begin() + N + 1));
  const Rational c = Rational(static_cast<long>(h - n));
  QSeries den(N + 1, Rational(0));
  if (variant == FormulaVariant::ProofConsistent) {
    // 1 - c z P_B
    den[0] = 1;
    for (std::size_t k = 1; k <= N; ++k) den[k] = -c * pb[k - 1];
  } else {
    // 1 - c P_B
    for (std::size_t k = 0; k <= N; ++k) den[k] = -c * pb[k];
    den[0] += 1;
    if (den[0] == 0) return std::nullopt;
  }
  return series_div(pb, den, N);
}

RationalFunction koszul_formula(std::size_t h, std::size_t n, FormulaVariant variant) {
  if (n < 1 || n > h) throw PreconditionError("Koszul formula needs 1 <= n <= h");
  const long hl = static_cast<long>(h), nl = static_cast<long>(n);
  if (variant == FormulaVariant::ProofConsistent)
    return RationalFunction({Integer(1)}, {Integer(1), Integer(-hl), Integer(nl), Integer(-1)});
  if (nl - hl + 1 == 0) throw PreconditionError("as-displayed Koszul formula has a pole at z = 0 when h = n + 1");
  return RationalFunction({Integer(1)}, {Integer(nl - hl + 1), Integer(-nl), Integer(nl), Integer(-1)});
}

bool is_koszul_numerically(const LocalAlgebra& B, std::size_t N, const ResolutionOptions& options) {
  const auto betti = betti_numbers(B, N, options);
  const auto hf = hilbert_function(B);
  QSeries h_minus(hf.size());
  for (std::size_t i = 0; i < hf.size(); ++i) h_minus[i] = Rational(i % 2 ? -hf[i] : hf[i]);
  QSeries prod = series_mul(to_rational(betti.values), h_minus, N);
  QSeries one(N + 1, Rational(0));
  one[0] = 1;
  return prod == one;
}

namespace {

QSeries predict_from_quotient(const IntSeries& quotient, std::size_t N, int shift, int sign) {
  // P / (1 + sign * z^shift * P)
  QSeries p = to_rational(quotient);
  QSeries den(N + 1, Rational(0));
  den[0] = 1;
  for (std::size_t k = shift; k <= N; ++k) den[k] += sign * p[k - shift];
  return series_div(p, den, N);
}

}  // namespace

SocleFormulaReport verify_socle_formulas(const LocalAlgebra& A, std::size_t N, const ResolutionOptions& options) {
  SocleFormulaReport report;
  const IntSeries direct = betti_numbers(A, N, options).values;
  const auto soc = socle(A);
  const auto powers = A.max_ideal_powers();

  auto& lin = report.linear_socle;
  lin.direct = direct;
  if (A.dim() == 1) {
    lin.reason = "A is the residue field";
  } else {
    Echelon<Rational> m2 = powers.size() > 2 ? powers[2].echelon() : Echelon<Rational>(A.dim());
    for (const auto& row : soc.rows()) {
      if (!m2.contains(row)) {
        lin.element = row;
        break;
      }
    }
    if (!lin.element) {
      lin.reason = "socle is contained in m^2";
    } else {
      lin.applicable = true;
      lin.quotient = betti_numbers(quotient_by(A, {*lin.element}), N, options).values;
      lin.predicted = predict_from_quotient(lin.quotient, N, 1, -1);
      lin.holds = lin.predicted == to_rational(direct);
    }
  }

  auto& gor = report.gorenstein;
  gor.direct = direct;
  if (soc.rank() != 1) {
    gor.reason = "A is not Gorenstein (socle dimension " + std::to_string(soc.rank()) + ")";
  } else if (A.dim() == 1) {
    gor.reason = "A is the residue field";
  } else {
    // The socle-quotient formula needs embedding dimension at least 2; K[x]/(x^k) violates it.
    // Both sides are still computed so the failure can be inspected.
    gor.applicable = powers[1].rank() - (powers.size() > 2 ? powers[2].rank() : 0) >= 2;
    if (!gor.applicable) gor.reason = "A is a hypersurface of embedding dimension 1";
    gor.element = soc.rows()[0];
    gor.quotient = betti_numbers(quotient_by(A, {*gor.element}), N, options).values;
    gor.predicted = predict_from_quotient(gor.quotient, N, 2, +1);
    gor.holds = gor.predicted == to_rational(direct);
  }
  return report;
}

}  // namespace socle3
