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

#pragma once

// Template definitions for linalg.hpp. Not meant to be included directly.

namespace drw {

namespace detail {

inline int diag_exponent(const ModRing& ring, std::int64_t d, std::int64_t) { return ring.val(d); }
inline int diag_exponent(const IntRing&, const Int& d, std::int64_t p) {
  return sgn(d) == 0 ? -1 : valuation(d, p);
}
inline bool diag_is_free(const ModRing&, std::int64_t) { return false; }
inline bool diag_is_free(const IntRing&, const Int& d) { return sgn(d) == 0; }

/// Diagonalizes a copy of `a` by unimodular row and column operations and
/// returns the diagonal entries (length min(rows, cols)).
template <class Ring>
std::vector<typename Ring::Elem> diagonalize(const Ring& ring, Mat<Ring> a) {
  using Elem = typename Ring::Elem;
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<Elem> diag;
  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    for (;;) {
      std::size_t bi = m, bj = n;
      Int best;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j) {
          if (ring.is_zero(a(i, j))) continue;
          Int s = ring.size(a(i, j));
          if (bi == m || s < best) {
            best = s;
            bi = i;
            bj = j;
          }
        }
      if (bi == m) {
        diag.push_back(ring.zero());
        break;
      }
      if (bi != k)
        for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(bi, j));
      if (bj != k)
        for (std::size_t i = 0; i < m; ++i) std::swap(a(i, k), a(i, bj));
      Elem unit = ring.normalizing_unit(a(k, k));
      for (std::size_t j = k; j < n; ++j) a(k, j) = ring.mul(unit, a(k, j));
      const Elem piv = a(k, k);
      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (ring.is_zero(a(i, k))) continue;
        Elem q, r;
        ring.divrem(a(i, k), piv, q, r);
        for (std::size_t j = k; j < n; ++j) a(i, j) = ring.sub(a(i, j), ring.mul(q, a(k, j)));
        if (!ring.is_zero(a(i, k))) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (ring.is_zero(a(k, j))) continue;
        Elem q, r;
        ring.divrem(a(k, j), piv, q, r);
        for (std::size_t i = k; i < m; ++i) a(i, j) = ring.sub(a(i, j), ring.mul(q, a(i, k)));
        if (!ring.is_zero(a(k, j))) clean = false;
      }
      if (clean) {
        diag.push_back(piv);
        break;
      }
    }
  }
  return diag;
}

}  // namespace detail

template <class Ring>
InvariantFactors cokernel_invariants(const Ring& ring, const Mat<Ring>& relations, std::size_t gens,
                                     std::int64_t p) {
  InvariantFactors out;
  out.p = p;
  std::size_t nontrivial = 0;
  if (relations.rows() > 0) {
    if (relations.cols() != gens)
      throw Error(ErrorKind::InvalidArgument, "relation width does not match generator count");
    auto diag = detail::diagonalize(ring, relations);
    for (const auto& d : diag) {
      ++nontrivial;
      if (detail::diag_is_free(ring, d)) {
        ++out.free_rank;
        continue;
      }
      int e = detail::diag_exponent(ring, d, p);
      if (e > 0) out.torsion.push_back(e);
    }
  }
  for (std::size_t g = nontrivial; g < gens; ++g) {
    if constexpr (std::is_same_v<Ring, ModRing>) {
      out.torsion.push_back(ring.R);
    } else {
      ++out.free_rank;
    }
  }
  out.normalize();
  return out;
}

template <class Ring>
Mat<Ring> preimage(const Ring& ring, const Mat<Ring>& d, const Mat<Ring>& target) {
  const std::size_t m = d.rows();
  if (m == 0) return Mat<Ring>::zeros(ring, 0, 0);
  Mat<Ring> stacked = vcat(ring, d, target, d.cols());
  Mat<Ring> ker = left_kernel(ring, stacked);
  Mat<Ring> out = slice_cols(ring, ker, 0, m);
  return howell_form(ring, out);
}

template <class Ring>
Mat<Ring> intersect(const Ring& ring, const Mat<Ring>& a, const Mat<Ring>& b) {
  if (a.rows() == 0 || b.rows() == 0) return Mat<Ring>::zeros(ring, 0, a.cols());
  Mat<Ring> x = preimage(ring, a, b);
  if (x.rows() == 0) return Mat<Ring>::zeros(ring, 0, a.cols());
  return howell_form(ring, matmul(ring, x, a));
}

template <class Ring>
InvariantFactors subquotient_invariants(const Ring& ring, const Mat<Ring>& a, const Mat<Ring>& b,
                                        std::int64_t p) {
  if (a.rows() == 0) {
    InvariantFactors z;
    z.p = p;
    return z;
  }
  Mat<Ring> rels = preimage(ring, a, b);
  return cokernel_invariants(ring, rels, a.rows(), p);
}

template <class Ring>
std::optional<std::vector<typename Ring::Elem>> solve_row(const Ring& ring, const Mat<Ring>& g,
                                                          const std::vector<typename Ring::Elem>& v) {
  using Elem = typename Ring::Elem;
  const std::size_t m = g.rows(), n = g.cols();
  if (m == 0) {
    for (const auto& e : v)
      if (!ring.is_zero(e)) return std::nullopt;
    return std::vector<Elem>{};
  }
  Mat<Ring> h = howell_form(ring, hcat(ring, g, Mat<Ring>::identity(ring, m)));
  std::vector<Elem> w(n + m, ring.zero());
  for (std::size_t j = 0; j < n; ++j) w[j] = v[j];
  w = reduce_row(ring, h, w);
  for (std::size_t j = 0; j < n; ++j)
    if (!ring.is_zero(w[j])) return std::nullopt;
  std::vector<Elem> x(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = ring.neg(w[n + i]);
  return x;
}

}  // namespace drw
