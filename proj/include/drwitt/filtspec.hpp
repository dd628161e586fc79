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

// Filtered and graded cochain complexes of finitely presented modules, the
// gr -| t adjunction and the spectral sequence of a filtration.
//
// A filtered complex on the window [lo, hi] has levels F^{>=n} for n in the
// window, with F^{>=n} = F^{>=lo} below and 0 above. Pages use the bigrading
// E_2^{k,l} = H^{k+l}(gr^{-l}), so d_r has bidegree (r, 1 - r). In the usual
// filtration index s = -l the page E_r is the (r-1)-th page of the exact
// couple and d_r raises s by r - 1.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "drwitt/exactcore.hpp"

namespace drw {

/// All levels share the complex degree range; transitions[k] is the chain
/// map levels[k+1] -> levels[k], one matrix per complex degree.
template <class Ring>
struct FilteredComplex {
  int lo = 0;
  int hi = 0;
  std::vector<Complex<Ring>> levels;
  std::vector<std::vector<Mat<Ring>>> transitions;

  const Complex<Ring>& level(int n) const { return levels[static_cast<std::size_t>(n < lo ? 0 : n - lo)]; }
};

template <class Ring>
struct GradedComplex {
  int lo = 0;
  std::vector<Complex<Ring>> pieces;

  int hi() const { return lo + static_cast<int>(pieces.size()) - 1; }
};

/// Checks shapes, that every level is a complex and that transitions are chain maps.
template <class Ring>
void check_filtered(const Ring& ring, const FilteredComplex<Ring>& f);

/// Degreewise injectivity of all transitions (as maps of presented modules).
template <class Ring>
bool has_injective_transitions(const Ring& ring, const FilteredComplex<Ring>& f);

enum class GrMode {
  Cokernel,  // degreewise cokernel, no injectivity check
  Strict,    // cokernel; NonInjectiveTransitions unless transitions are injective
  Cone,      // mapping cone, degrees shifted: cone^m = F^{>=n+1,m+1} + F^{>=n,m}
};

template <class Ring>
GradedComplex<Ring> gr(const Ring& ring, const FilteredComplex<Ring>& f, GrMode mode = GrMode::Strict);

/// t(X)^{>=n} = X^n with zero transitions.
template <class Ring>
FilteredComplex<Ring> t_embed(const Ring& ring, const GradedComplex<Ring>& x);

/// c_n(Y): Y at level n and 0 at levels lo .. n-1 (lo <= n).
template <class Ring>
FilteredComplex<Ring> c_embed(const Ring& ring, const Complex<Ring>& y, int n, int lo);

template <class Ring>
struct SSEntry {
  Mat<Ring> generators;  // rows in the ambient free module of F^{>=lo} in degree k + l
  Presentation<Ring> module;
  InvariantFactors invariants;
};

template <class Ring>
struct SSPage {
  int r = 2;
  std::map<std::pair<int, int>, SSEntry<Ring>> entries;  // keyed by (k, l)
  std::map<std::pair<int, int>, Mat<Ring>> differentials;  // d_r out of (k, l), in generator coordinates

  InvariantFactors at(int k, int l, std::int64_t p) const;
};

/// Pages r = 2 .. r_max (r_max <= 0 means until r exceeds the window width + 2).
/// Requires injective transitions.
template <class Ring>
std::vector<SSPage<Ring>> spectral_sequence(const Ring& ring, const FilteredComplex<Ring>& f, int r_max,
                                            std::int64_t p);

/// d_r o d_r = 0 on every page and each page is the homology of the previous one.
template <class Ring>
bool pages_consistent(const Ring& ring, const std::vector<SSPage<Ring>>& pages, std::int64_t p);

/// Presentation (Z/p^e summands and free rank) realizing given invariants.
template <class Ring>
Presentation<Ring> presentation_of(const Ring& ring, const InvariantFactors& inv);

struct ShortExact {
  int degree = 0;           // total degree k + l
  InvariantFactors left;    // the deeper filtration step (sub)
  InvariantFactors right;   // the quotient
  int middle_log_order = 0; // log_p of the middle order; -1 if a term is infinite
};

/// Reads 0 -> left -> H -> right -> 0 off a page sequence supported in two
/// adjacent columns or rows; DegenerationFailed unless it degenerates at E_2.
template <class Ring>
std::vector<ShortExact> two_column_extract(const Ring& ring, const std::vector<SSPage<Ring>>& pages,
                                           std::int64_t p);

/// Hom(gr F, X) = Hom(F, t X) by exhaustive enumeration, with the triangle identities.
/// HomSetTooLarge when a hom-set enumeration would exceed `budget` candidates.
bool adjunction_check(const ModRing& ring, const FilteredComplex<ModRing>& f, const GradedComplex<ModRing>& x,
                      std::int64_t p, long budget = 1 << 16);

/// Number of chain maps between two complexes over Z/p^R (same degree range).
long count_chain_maps(const ModRing& ring, const Complex<ModRing>& a, const Complex<ModRing>& b, long budget);

}  // namespace drw
