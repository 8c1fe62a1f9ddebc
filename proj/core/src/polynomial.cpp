#include "socle3/polynomial.hpp"

#include <algorithm>

#include "socle3/error.hpp"

namespace socle3 {

char variable_letter(VarSpace space) noexcept { return space == VarSpace::Ring ? 'x' : 'y'; }

Polynomial::Polynomial(VarSpace space, std::size_t num_vars) : space_(space), num_vars_(num_vars) {
  if (num_vars == 0) throw PreconditionError("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(VarSpace space, std::size_t num_vars, const Rational& c) {
  Polynomial p(space, num_vars);
  p.add_term(Monomial(num_vars), c);
  return p;
}

Polynomial Polynomial::variable(VarSpace space, std::size_t num_vars, std::size_t index) {
  Polynomial p(space, num_vars);
  p.add_term(Monomial::variable(num_vars, index), 1);
  return p;
}

Polynomial Polynomial::term(VarSpace space, const Monomial& m, const Rational& c) {
  Polynomial p(space, m.num_vars());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const noexcept {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

int Polynomial::min_degree() const noexcept {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const noexcept { return degree() == min_degree(); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.num_vars() != num_vars_) throw PreconditionError("monomial has wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial out(space_, num_vars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Polynomial Polynomial::extended_to(std::size_t num_vars) const {
  if (num_vars < num_vars_) throw PreconditionError("cannot drop variables when extending");
  Polynomial out(space_, num_vars);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(m.exponents().begin(), m.exponents().end());
    e.resize(num_vars, 0);
    out.terms_.emplace(Monomial(std::move(e)), c);
  }
  return out;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (space_ != other.space_) throw PreconditionError("polynomials live in different variable spaces");
  if (num_vars_ != other.num_vars_) throw PreconditionError("polynomials have different variable counts");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Polynomial Polynomial::operator-() const { return Polynomial(*this) *= Rational(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.space_, a.num_vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return space_ == other.space_ && num_vars_ == other.num_vars_ && terms_ == other.terms_;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t index) {
  if (index >= p.num_vars()) throw PreconditionError("derivative variable out of range");
  Polynomial out(p.space(), p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    int e = m[index];
    if (e == 0) continue;
    std::vector<int> exps(m.exponents().begin(), m.exponents().end());
    --exps[index];
    out.add_term(Monomial(std::move(exps)), c * e);
  }
  return out;
}

namespace {

// x^a ∘ y^b = (prod b_i! / (b_i - a_i)!) y^(b-a) when a <= b, else 0.
bool contract_monomial(const Monomial& a, const Monomial& b, Monomial& out, Integer& factor) {
  if (!b.divisible_by(a)) return false;
  std::vector<int> e(b.num_vars());
  factor = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = b[i] - a[i];
    for (int k = b[i]; k > e[i]; --k) factor *= k;
  }
  out = Monomial(std::move(e));
  return true;
}

}  // namespace

Polynomial derivative_action(const Polynomial& f, const Polynomial& F) {
  if (f.space() != VarSpace::Ring || F.space() != VarSpace::Dual)
    throw PreconditionError("derivative action needs a ring element acting on a dual polynomial");
  if (f.num_vars() != F.num_vars()) throw PreconditionError("derivative action: variable count mismatch");
  Polynomial out(VarSpace::Dual, F.num_vars());
  Monomial m;
  Integer factor;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : F.terms())
      if (contract_monomial(a, b, m, factor)) out.add_term(m, ca * cb * Rational(factor));
  return out;
}

Polynomial leading_form(const Polynomial& F) {
  if (F.is_zero()) throw PreconditionError("leading form of the zero polynomial");
  return F.homogeneous_component(F.degree());
}

}  // namespace socle3
