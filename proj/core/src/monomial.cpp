#include "socle3/monomial.hpp"

#include <numeric>
#include <stdexcept>

#include "socle3/error.hpp"

namespace socle3 {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw PreconditionError("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, int power) {
  std::vector<int> e(num_vars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.num_vars() != num_vars()) throw PreconditionError("monomial variable count mismatch");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] < other.exps_[i]) return false;
  return true;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const noexcept {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  // Larger leading exponent comes first within a degree.
  for (std::size_t i = 0; i < exps_.size() && i < other.exps_.size(); ++i) {
    if (exps_[i] != other.exps_[i])
      return exps_[i] > other.exps_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return exps_.size() <=> other.exps_.size();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
  return h;
}

namespace {

void enumerate(std::size_t var, int remaining, std::vector<int>& cur, std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    enumerate(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int d) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (d == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> cur(num_vars, 0);
  enumerate(0, d, cur, out);
  return out;
}

MonomialIndex::MonomialIndex(std::size_t num_vars, int max_degree)
    : num_vars_(num_vars), max_degree_(max_degree) {
  if (max_degree < 0) throw PreconditionError("negative truncation degree");
  degree_start_.push_back(0);
  for (int d = 0; d <= max_degree; ++d) {
    for (auto& m : monomials_of_degree(num_vars, d)) monomials_.push_back(std::move(m));
    degree_start_.push_back(monomials_.size());
  }
  lookup_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) lookup_.emplace(monomials_[i], i);
}

std::size_t MonomialIndex::find(const Monomial& m) const {
  auto it = lookup_.find(m);
  return it == lookup_.end() ? npos : it->second;
}

std::size_t MonomialIndex::at(const Monomial& m) const {
  auto i = find(m);
  if (i == npos) throw std::out_of_range("monomial outside truncation");
  return i;
}

}  // namespace socle3
