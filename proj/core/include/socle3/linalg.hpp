#pragma once

// Exact sparse linear algebra over a field: incremental echelon forms with pivots at the
// largest index of each row, canonical reduced subspaces, kernels and intersections.
//
// The scalar type only needs field arithmetic and comparison with 0; it is instantiated with
// Rational and with the word-size prime field PrimeField.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "socle3/error.hpp"
#include "socle3/rational.hpp"

namespace socle3 {

template <class F>
struct Entry {
  std::uint32_t index;
  F value;
  bool operator==(const Entry&) const = default;
};

// Entries sorted by ascending index, no zero values.
template <class F>
using SparseVec = std::vector<Entry<F>>;

template <class F>
SparseVec<F> scaled(const SparseVec<F>& v, const F& c) {
  SparseVec<F> out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back({e.index, e.value * c});
  return out;
}

// Dense scratch buffer for repeated sparse reductions in a space of fixed dimension.
// Touched positions are tracked so clearing is proportional to the work done.
template <class F>
class Accumulator {
 public:
  explicit Accumulator(std::size_t dim) : values_(dim), touched_(dim, 0) {}

  std::size_t dim() const noexcept { return values_.size(); }

  void load(const SparseVec<F>& v) {
    for (const auto& e : v) add(e.index, e.value);
  }

  void add(std::uint32_t i, const F& c) {
    if (!touched_[i]) {
      touched_[i] = 1;
      values_[i] = c;
      heap_.push(i);
    } else {
      values_[i] += c;
    }
  }

  void sub_scaled(const SparseVec<F>& v, const F& c) {
    for (const auto& e : v) add(e.index, -(c * e.value));
  }

  // Largest index holding a nonzero value; removes zero entries on the way. Returns false
  // if the accumulator is zero.
  bool top(std::uint32_t& index) {
    while (!heap_.empty()) {
      std::uint32_t i = heap_.top();
      if (values_[i] != 0) {
        index = i;
        return true;
      }
      heap_.pop();
      touched_[i] = 0;
    }
    return false;
  }

  // Removes the current top entry (its value must have been consumed).
  void pop_top(F& value) {
    std::uint32_t i = heap_.top();
    heap_.pop();
    value = values_[i];
    values_[i] = 0;
    touched_[i] = 0;
  }

  const F& operator[](std::uint32_t i) const { return values_[i]; }

  // Extracts all nonzero entries (ascending) and resets.
  SparseVec<F> drain() {
    SparseVec<F> out;
    while (!heap_.empty()) {
      std::uint32_t i = heap_.top();
      heap_.pop();
      if (touched_[i] && values_[i] != 0) out.push_back({i, values_[i]});
      values_[i] = 0;
      touched_[i] = 0;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  void clear() { drain(); }

 private:
  std::vector<F> values_;
  std::vector<std::uint8_t> touched_;
  std::priority_queue<std::uint32_t> heap_;
};

// Incrementally built echelon basis. Each stored row is monic at its largest index (its pivot)
// and no two rows share a pivot. Rows are not inter-reduced until canonical_rows() is called.
template <class F>
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim), pivot_row_(dim, -1), acc_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<SparseVec<F>>& rows() const noexcept { return rows_; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

  // Adds v to the span. Returns true iff v was independent of the current rows.
  bool insert(const SparseVec<F>& v) {
    acc_.load(v);
    SparseVec<F> rem = reduce_loaded(false);
    if (rem.empty()) return false;
    push_row(std::move(rem));
    return true;
  }

  // Full normal form of v modulo the span (no remaining entry sits on a pivot column).
  SparseVec<F> reduce(const SparseVec<F>& v) {
    acc_.load(v);
    return reduce_loaded(true);
  }

  bool contains(const SparseVec<F>& v) { return reduce(v).empty(); }

  // Reduced echelon form: rows sorted by ascending pivot, each pivot column zero elsewhere.
  std::vector<SparseVec<F>> canonical_rows() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].back().index < rows_[b].back().index; });
    for (std::size_t r : order) {
      // Rows with smaller pivots are already fully reduced; reduce the tail of this row.
      SparseVec<F>& row = rows_[r];
      if (row.size() == 1) continue;
      bool needs = false;
      for (std::size_t k = 0; k + 1 < row.size(); ++k)
        if (pivot_row_[row[k].index] >= 0) {
          needs = true;
          break;
        }
      if (!needs) continue;
      Entry<F> lead = row.back();
      row.pop_back();
      acc_.load(row);
      SparseVec<F> tail = reduce_loaded(true);
      tail.push_back(lead);
      row = std::move(tail);
    }
    std::vector<SparseVec<F>> out;
    out.reserve(rows_.size());
    for (std::size_t r : order) out.push_back(rows_[r]);
    return out;
  }

 private:
  SparseVec<F> reduce_loaded(bool full) {
    SparseVec<F> rem;  // collected in descending index order
    std::uint32_t i;
    while (acc_.top(i)) {
      int r = pivot_row_[i];
      if (r < 0) {
        if (!full) {
          return acc_.drain();
        }
        F c;
        acc_.pop_top(c);
        rem.push_back({i, std::move(c)});
        continue;
      }
      F c = acc_[i];
      acc_.sub_scaled(rows_[r], c);
    }
    std::reverse(rem.begin(), rem.end());
    return rem;
  }

  void push_row(SparseVec<F> v) {
    F inv = F(1) / v.back().value;
    if (inv != 1)
      for (auto& e : v) e.value *= inv;
    v.back().value = 1;
    pivot_row_[v.back().index] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
  }

  std::size_t dim_;
  std::vector<SparseVec<F>> rows_;
  std::vector<int> pivot_row_;
  Accumulator<F> acc_;
};

// A linear subspace of F^dim in canonical reduced echelon form; two subspaces are equal iff
// their representations are equal.
template <class F>
class Subspace {
 public:
  explicit Subspace(std::size_t dim = 0) : dim_(dim) {}

  template <class Range>
  static Subspace span(std::size_t dim, const Range& vectors) {
    Echelon<F> ech(dim);
    for (const auto& v : vectors) ech.insert(v);
    return from_echelon(ech);
  }

  static Subspace from_echelon(Echelon<F>& ech) {
    Subspace s(ech.dim());
    s.rows_ = ech.canonical_rows();
    return s;
  }

  static Subspace whole(std::size_t dim) {
    Subspace s(dim);
    for (std::uint32_t i = 0; i < dim; ++i) s.rows_.push_back({{i, F(1)}});
    return s;
  }

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  const std::vector<SparseVec<F>>& rows() const noexcept { return rows_; }

  std::vector<std::uint32_t> pivots() const {
    std::vector<std::uint32_t> p;
    p.reserve(rows_.size());
    for (const auto& r : rows_) p.push_back(r.back().index);
    return p;
  }

  // Indices that are not pivots: a basis of the quotient F^dim / this.
  std::vector<std::uint32_t> non_pivots() const {
    std::vector<std::uint8_t> is_p(dim_, 0);
    for (const auto& r : rows_) is_p[r.back().index] = 1;
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < dim_; ++i)
      if (!is_p[i]) out.push_back(i);
    return out;
  }

  Echelon<F> echelon() const {
    Echelon<F> ech(dim_);
    for (const auto& r : rows_) ech.insert(r);
    return ech;
  }

  bool operator==(const Subspace& other) const { return dim_ == other.dim_ && rows_ == other.rows_; }

 private:
  std::size_t dim_;
  std::vector<SparseVec<F>> rows_;
};

// Kernel of the linear map F^columns.size() -> F^target_dim sending e_j to columns[j].
// Works in the augmented space [coordinates | image] so that rows whose image part vanished
// record kernel vectors.
template <class F>
Subspace<F> kernel(std::size_t target_dim, const std::vector<SparseVec<F>>& columns) {
  const std::size_t m = columns.size();
  Echelon<F> ech(m + target_dim);
  Echelon<F> ker(m);
  for (std::size_t j = 0; j < m; ++j) {
    SparseVec<F> v;
    v.reserve(columns[j].size() + 1);
    v.push_back({static_cast<std::uint32_t>(j), F(1)});
    for (const auto& e : columns[j]) v.push_back({static_cast<std::uint32_t>(e.index + m), e.value});
    SparseVec<F> rem = ech.reduce(v);
    // rem is fully reduced; its image part is zero iff v's image lies in the span so far.
    if (!rem.empty() && rem.back().index < m) {
      ker.insert(rem);
    } else if (!rem.empty()) {
      ech.insert(rem);
    }
  }
  return Subspace<F>::from_echelon(ker);
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionError("subspace sum: dimension mismatch");
  Echelon<F> ech = a.echelon();
  for (const auto& r : b.rows()) ech.insert(r);
  return Subspace<F>::from_echelon(ech);
}

// Zassenhaus: rows (u | u) for u in a and (w | 0) for w in b, with the "left" copy placed at
// the high indices. Rows whose high part cancels span a ∩ b.
template <class F>
Subspace<F> subspace_intersection(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw PreconditionError("subspace intersection: dimension mismatch");
  const std::size_t n = a.ambient_dim();
  Echelon<F> ech(2 * n);
  Echelon<F> inter(n);
  auto push = [&](const SparseVec<F>& v, bool duplicate) {
    SparseVec<F> w;
    if (duplicate) w = v;
    for (const auto& e : v) w.push_back({static_cast<std::uint32_t>(e.index + n), e.value});
    SparseVec<F> rem = ech.reduce(w);
    if (rem.empty()) return;
    if (rem.back().index < n) {
      inter.insert(rem);
    } else {
      ech.insert(rem);
    }
  };
  for (const auto& r : a.rows()) push(r, true);
  for (const auto& r : b.rows()) push(r, false);
  return Subspace<F>::from_echelon(inter);
}

}  // namespace socle3
