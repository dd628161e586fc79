// Copyright 2026 The drwitt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense matrices over a principal ideal ring, the Howell normal form, kernels,
// and Smith-style invariant factors. Vectors are rows; a matrix A acts on the
// right, x -> x A.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "drwitt/rings.hpp"

namespace drw {

template <class Ring>
class Mat {
 public:
  using Elem = typename Ring::Elem;

  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const Elem& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Mat zeros(const Ring& ring, std::size_t rows, std::size_t cols) {
    return Mat(rows, cols, ring.zero());
  }
  static Mat identity(const Ring& ring, std::size_t n) {
    Mat m = zeros(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Elem> row(std::size_t i) const {
    return std::vector<Elem>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  void append_row(const std::vector<Elem>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }
  /// Appends all rows of `other` (same column count).
  void append_rows(const Mat& other) {
    if (rows_ == 0) cols_ = other.cols_;
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

using ModMat = Mat<ModRing>;
using IntMat = Mat<IntRing>;

template <class Ring>
Mat<Ring> matmul(const Ring& ring, const Mat<Ring>& a, const Mat<Ring>& b) {
  Mat<Ring> c = Mat<Ring>::zeros(ring, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ring.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = ring.add(c(i, j), ring.mul(a(i, k), b(k, j)));
    }
  return c;
}

template <class Ring>
Mat<Ring> matadd(const Ring& ring, const Mat<Ring>& a, const Mat<Ring>& b) {
  Mat<Ring> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.add(a(i, j), b(i, j));
  return c;
}

template <class Ring>
Mat<Ring> matscale(const Ring& ring, const typename Ring::Elem& s, const Mat<Ring>& a) {
  Mat<Ring> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.mul(s, a(i, j));
  return c;
}

template <class Ring>
bool is_zero_matrix(const Ring& ring, const Mat<Ring>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!ring.is_zero(a(i, j))) return false;
  return true;
}

/// Horizontal concatenation [a | b].
template <class Ring>
Mat<Ring> hcat(const Ring& ring, const Mat<Ring>& a, const Mat<Ring>& b) {
  Mat<Ring> c = Mat<Ring>::zeros(ring, a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

/// Vertical concatenation; an empty operand may have mismatched column count.
template <class Ring>
Mat<Ring> vcat(const Ring& ring, const Mat<Ring>& a, const Mat<Ring>& b, std::size_t cols) {
  Mat<Ring> c = Mat<Ring>::zeros(ring, 0, cols);
  if (a.rows() > 0) c.append_rows(a);
  if (b.rows() > 0) c.append_rows(b);
  return c;
}

template <class Ring>
Mat<Ring> slice_cols(const Ring& ring, const Mat<Ring>& a, std::size_t from, std::size_t to) {
  Mat<Ring> c = Mat<Ring>::zeros(ring, a.rows(), to - from);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = from; j < to; ++j) c(i, j - from) = a(i, j);
  return c;
}

namespace detail {

template <class Ring>
void combine_rows(const Ring& ring, std::vector<std::vector<typename Ring::Elem>>& m, std::size_t r,
                  std::size_t i, const Xgcd<typename Ring::Elem>& x, std::size_t from) {
  for (std::size_t j = from; j < m[r].size(); ++j) {
    auto a = m[r][j];
    auto b = m[i][j];
    m[r][j] = ring.add(ring.mul(x.s, a), ring.mul(x.t, b));
    m[i][j] = ring.add(ring.mul(x.u, a), ring.mul(x.v, b));
  }
}

template <class Row, class Ring>
bool row_is_zero(const Ring& ring, const Row& row, std::size_t upto) {
  for (std::size_t j = 0; j < upto; ++j)
    if (!ring.is_zero(row[j])) return false;
  return true;
}

}  // namespace detail

/// Howell normal form: canonical generators of the row module. Over Z this is
/// the Hermite normal form. Zero rows are dropped; an empty matrix is its own
/// normal form.
template <class Ring>
Mat<Ring> howell_form(const Ring& ring, const Mat<Ring>& a) {
  using Row = std::vector<typename Ring::Elem>;
  const std::size_t n = a.cols();
  std::vector<Row> m;
  m.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Row row = a.row(i);
    if (!detail::row_is_zero(ring, row, n)) m.push_back(std::move(row));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (ring.is_zero(m[i][c])) continue;
      auto x = ring.xgcd(m[r][c], m[i][c]);
      detail::combine_rows(ring, m, r, i, x, c);
    }
    if (ring.is_zero(m[r][c])) {
      // Find any lower row with a nonzero entry here (can happen after annihilator rows).
      std::size_t k = r + 1;
      while (k < m.size() && ring.is_zero(m[k][c])) ++k;
      if (k == m.size()) continue;
      std::swap(m[r], m[k]);
      --c;
      continue;
    }
    auto unit = ring.normalizing_unit(m[r][c]);
    for (std::size_t j = c; j < n; ++j) m[r][j] = ring.mul(unit, m[r][j]);
    const auto pivot = m[r][c];
    for (std::size_t k = 0; k < r; ++k) {
      typename Ring::Elem q, rem;
      ring.divrem(m[k][c], pivot, q, rem);
      if (ring.is_zero(q)) continue;
      for (std::size_t j = c; j < n; ++j) m[k][j] = ring.sub(m[k][j], ring.mul(q, m[r][j]));
    }
    auto an = ring.ann(pivot);
    if (!ring.is_zero(an)) {
      Row extra(n, ring.zero());
      bool nonzero = false;
      for (std::size_t j = c + 1; j < n; ++j) {
        extra[j] = ring.mul(an, m[r][j]);
        nonzero = nonzero || !ring.is_zero(extra[j]);
      }
      if (nonzero) m.push_back(std::move(extra));
    }
    ++r;
  }
  Mat<Ring> out = Mat<Ring>::zeros(ring, 0, n);
  for (std::size_t i = 0; i < r && i < m.size(); ++i)
    if (!detail::row_is_zero(ring, m[i], n)) out.append_row(m[i]);
  return out;
}

/// Reduces v against a Howell-form basis; returns the canonical remainder
/// (zero iff v lies in the row module).
template <class Ring>
std::vector<typename Ring::Elem> reduce_row(const Ring& ring, const Mat<Ring>& howell,
                                            std::vector<typename Ring::Elem> v) {
  for (std::size_t i = 0; i < howell.rows(); ++i) {
    std::size_t c = 0;
    while (c < howell.cols() && ring.is_zero(howell(i, c))) ++c;
    if (c == howell.cols()) continue;
    typename Ring::Elem q, rem;
    ring.divrem(v[c], howell(i, c), q, rem);
    if (ring.is_zero(q)) continue;
    for (std::size_t j = c; j < v.size(); ++j) v[j] = ring.sub(v[j], ring.mul(q, howell(i, j)));
  }
  return v;
}

template <class Ring>
bool in_row_module(const Ring& ring, const Mat<Ring>& howell, const std::vector<typename Ring::Elem>& v) {
  auto r = reduce_row(ring, howell, v);
  return detail::row_is_zero(ring, r, r.size());
}

/// Generators of the left kernel {x : x A = 0}.
template <class Ring>
Mat<Ring> left_kernel(const Ring& ring, const Mat<Ring>& a) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m == 0) return Mat<Ring>::zeros(ring, 0, 0);
  Mat<Ring> aug = hcat(ring, a, Mat<Ring>::identity(ring, m));
  Mat<Ring> h = howell_form(ring, aug);
  Mat<Ring> ker = Mat<Ring>::zeros(ring, 0, m);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero_left = true;
    for (std::size_t j = 0; j < n && zero_left; ++j) zero_left = ring.is_zero(h(i, j));
    if (!zero_left) continue;
    auto full = h.row(i);
    ker.append_row(std::vector<typename Ring::Elem>(full.begin() + static_cast<std::ptrdiff_t>(n), full.end()));
  }
  return ker;
}

/// Finite p-primary abelian group plus a free part, in canonical form.
struct InvariantFactors {
  std::int64_t p = 2;
  std::vector<int> torsion;  // exponents e of Z/p^e summands, ascending, all >= 1
  int free_rank = 0;

  bool operator==(const InvariantFactors& o) const {
    return p == o.p && torsion == o.torsion && free_rank == o.free_rank;
  }
  bool is_zero() const { return torsion.empty() && free_rank == 0; }
  /// log_p of the order of the torsion part.
  int log_order() const {
    int s = 0;
    for (int e : torsion) s += e;
    return s;
  }
  std::string to_string() const;
  void normalize() { std::sort(torsion.begin(), torsion.end()); }
};

bool invariants_isomorphic(const InvariantFactors& a, const InvariantFactors& b);
InvariantFactors direct_sum(const InvariantFactors& a, const InvariantFactors& b);

/// Invariant factors of R^gens / rowspan(relations) at the prime p.
/// Over Z/p^R an unrelated generator contributes Z/p^R; over Z it is free.
template <class Ring>
InvariantFactors cokernel_invariants(const Ring& ring, const Mat<Ring>& relations, std::size_t gens,
                                     std::int64_t p);

template <class Ring>
struct Subquotient {
  Mat<Ring> numerator;    // generators of A, rows in the ambient module
  Mat<Ring> denominator;  // generators of B, with B contained in A
};

/// Invariant factors of A/B where B is contained in A (both given by generators).
template <class Ring>
InvariantFactors subquotient_invariants(const Ring& ring, const Mat<Ring>& a, const Mat<Ring>& b,
                                        std::int64_t p);

/// Generators of A ∩ B for submodules of a common free module.
template <class Ring>
Mat<Ring> intersect(const Ring& ring, const Mat<Ring>& a, const Mat<Ring>& b);

/// Generators of {x : x D ∈ rowspan(target)} (preimage of a submodule).
template <class Ring>
Mat<Ring> preimage(const Ring& ring, const Mat<Ring>& d, const Mat<Ring>& target);

/// True if every row of `sub` lies in rowspan(`super`).
template <class Ring>
bool contains(const Ring& ring, const Mat<Ring>& super, const Mat<Ring>& sub) {
  Mat<Ring> h = howell_form(ring, super);
  for (std::size_t i = 0; i < sub.rows(); ++i)
    if (!in_row_module(ring, h, sub.row(i))) return false;
  return true;
}

/// Solves x G = v; returns nullopt when v is outside rowspan(G).
template <class Ring>
std::optional<std::vector<typename Ring::Elem>> solve_row(const Ring& ring, const Mat<Ring>& g,
                                                          const std::vector<typename Ring::Elem>& v);

ModMat to_mod(const ModRing& ring, const IntMat& m);

}  // namespace drw

#include "drwitt/linalg_impl.hpp"
