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

// Finitely presented modules and homology of finite cochain complexes.

#pragma once

#include <string>
#include <vector>

#include "drwitt/linalg.hpp"

namespace drw {

/// R^gens / rowspan(relations).
template <class Ring>
struct Presentation {
  std::size_t gens = 0;
  Mat<Ring> relations;

  static Presentation free(const Ring& ring, std::size_t n) {
    return Presentation{n, Mat<Ring>::zeros(ring, 0, n)};
  }
};

/// Returns the presentation with its relation matrix in normal form.
template <class Ring>
Presentation<Ring> normalize(const Ring& ring, const Presentation<Ring>& m) {
  return Presentation<Ring>{m.gens, howell_form(ring, m.relations)};
}

/// Cochain complex M^lo -> M^{lo+1} -> ... ; diffs[k] maps modules[k] to
/// modules[k+1] and is a gens[k] x gens[k+1] matrix acting on rows.
template <class Ring>
struct Complex {
  int lo = 0;
  std::vector<Presentation<Ring>> modules;
  std::vector<Mat<Ring>> diffs;

  int hi() const { return lo + static_cast<int>(modules.size()) - 1; }
};

/// Throws NonComplex unless every d_{k+1} d_k lands in the relations and
/// every differential respects the relations.
template <class Ring>
void check_complex(const Ring& ring, const Complex<Ring>& c) {
  if (c.diffs.size() + 1 != c.modules.size() && !(c.modules.empty() && c.diffs.empty()))
    throw Error(ErrorKind::InvalidArgument, "complex needs one differential between consecutive modules");
  for (std::size_t k = 0; k < c.diffs.size(); ++k) {
    const auto& d = c.diffs[k];
    if (d.rows() != c.modules[k].gens || d.cols() != c.modules[k + 1].gens)
      throw Error(ErrorKind::InvalidArgument, "differential has the wrong shape");
    const auto& rel = c.modules[k].relations;
    if (rel.rows() > 0 && !contains(ring, c.modules[k + 1].relations, matmul(ring, rel, d)))
      throw Error(ErrorKind::NonComplex, "differential is not well defined on the quotient");
  }
  for (std::size_t k = 0; k + 1 < c.diffs.size(); ++k) {
    Mat<Ring> dd = matmul(ring, c.diffs[k], c.diffs[k + 1]);
    if (!contains(ring, c.modules[k + 2].relations, dd))
      throw Error(ErrorKind::NonComplex, "d o d != 0 at degree " + std::to_string(c.lo + static_cast<int>(k)));
  }
}

/// Generators of cycles and boundaries at degree n, as rows in R^{gens_n}.
/// Boundaries include the relations of M^n.
template <class Ring>
Subquotient<Ring> homology_subquotient(const Ring& ring, const Complex<Ring>& c, int n) {
  const std::size_t k = static_cast<std::size_t>(n - c.lo);
  const auto& mod = c.modules[k];
  Subquotient<Ring> sq;
  if (k < c.diffs.size()) {
    sq.numerator = preimage(ring, c.diffs[k], c.modules[k + 1].relations);
  } else {
    sq.numerator = Mat<Ring>::identity(ring, mod.gens);
  }
  Mat<Ring> bnd = Mat<Ring>::zeros(ring, 0, mod.gens);
  if (k > 0) bnd = c.diffs[k - 1];
  sq.denominator = howell_form(ring, vcat(ring, bnd, mod.relations, mod.gens));
  if (sq.numerator.rows() == 0) sq.numerator = Mat<Ring>::zeros(ring, 0, mod.gens);
  return sq;
}

/// Invariant factors of H^n; zero outside the support of the complex.
template <class Ring>
InvariantFactors homology(const Ring& ring, const Complex<Ring>& c, int n, std::int64_t p) {
  check_complex(ring, c);
  if (n < c.lo || n > c.hi() || c.modules.empty()) {
    InvariantFactors z;
    z.p = p;
    return z;
  }
  auto sq = homology_subquotient(ring, c, n);
  return subquotient_invariants(ring, sq.numerator, sq.denominator, p);
}

/// Invariant factors of a presented module.
template <class Ring>
InvariantFactors module_invariants(const Ring& ring, const Presentation<Ring>& m, std::int64_t p) {
  return cokernel_invariants(ring, m.relations, m.gens, p);
}

}  // namespace drw
