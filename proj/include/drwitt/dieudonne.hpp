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

// Dieudonne complexes of the standard lifts, their saturation and strict
// truncations (the de Rham-Witt complexes W_r Omega of the curated rings).
//
// Everything is graded by multidegree a in Z[1/p]^n and written in the dlog
// basis x^a dlog x_J, in which the Frobenius is the identity on coordinates
// (grade a -> grade pa), V is multiplication by p (grade a -> a/p) and d has
// coefficients a_j. A lattice at (a, n) is a full-rank sublattice of the
// integral span of the allowed x^a dlog x_J.
//
// Coefficients W(F_q) = Z_p^f are kept implicit: lattices are computed for
// f = 1 and tensored with Z^f, on which F acts by the cyclic shift of a
// normal basis.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "drwitt/derham.hpp"
#include "drwitt/lattice.hpp"

namespace drw {

/// Exponent e with p^e the common denominator of the entries.
int denominator_exponent(const Grade& a, std::int64_t p);

/// Top form degree of the lift (0 for fields and perfections).
int dieudonne_top(const RingSpec& s);

/// Allowed J (bitmasks, |J| = n) at grade a, in increasing order.
std::vector<unsigned> dlog_subsets(const RingSpec& s, const Grade& a, int n);

/// d : (a, n) -> (a, n+1) in dlog coordinates.
ScaledMat dlog_differential(const RingSpec& s, const Grade& a, int n);

/// Grades of weight <= cap with denominators up to p^denominator_exp.
std::vector<Grade> dieudonne_grades(const RingSpec& s, long cap, int denominator_exp);

struct DieudonneGrade {
  Grade grade;
  std::vector<std::vector<unsigned>> subsets;  // per degree
  std::vector<IntMat> lattice;                 // per degree, row basis in dlog coordinates
};

struct DieudonneComplex {
  RingSpec spec;
  long weight_cap = 0;
  int denominator_exp = 0;
  bool saturated = false;
  std::map<Grade, DieudonneGrade> grades;

  int top() const { return dieudonne_top(spec); }
  int coefficient_rank() const { return spec.f; }
  const DieudonneGrade& at(const Grade& a) const;
};

/// de Rham complex of the torsion-free lift with x_j -> x_j^p; integral grades only.
DieudonneComplex lift_with_frobenius(const RingSpec& s, long weight_cap);

/// eta_p on one graded piece: {x in p^n M^n : dx in p^{n+1} M^{n+1}}.
std::vector<IntMat> eta_p_lattices(std::int64_t p, const std::vector<IntMat>& lattices,
                                   const std::vector<ScaledMat>& d);
DieudonneComplex eta_p(const DieudonneComplex& M);

/// The colimit of M -> eta_p M -> eta_p^2 M -> ... along alpha_F, per grade
/// with denominators up to p^{r-1}. Each grade is iterated until two
/// consecutive stages agree; PrecisionExhausted after max_stages.
DieudonneComplex saturate(const DieudonneComplex& M, int r, int max_stages = 12);

/// Closed form of the saturated lattice: {w in L_a : dw in L_a}.
IntMat saturated_lattice(const RingSpec& s, const Grade& a, int n);

/// The saturation criterion at one grade: F maps Sat_a onto {y in Sat_{pa} : dy in p Sat_{pa}}.
bool saturation_criterion(const RingSpec& s, const Grade& a);

struct StrictPiece {
  IntMat numerator;    // Sat^n_a
  IntMat denominator;  // V^r Sat^n_{p^r a} + d V^r Sat^{n-1}_{p^r a}
  InvariantFactors invariants;  // already multiplied out over W(F_q)
};

struct StrictLevel {
  RingSpec spec;
  int r = 1;
  long weight_cap = 0;
  std::map<Grade, std::vector<StrictPiece>> pieces;  // per grade, per degree

  InvariantFactors invariants(const Grade& a, int n) const;
  /// Direct sum over all grades in the window.
  InvariantFactors total(int n) const;
};

/// W_r Omega^n_a = Sat^n_a / (V^r Sat^n_{p^r a} + d V^r Sat^{n-1}_{p^r a}).
StrictPiece strict_piece(const RingSpec& s, const Grade& a, int n, int r);
StrictLevel strict_truncate(const DieudonneComplex& sat, int r);
/// Convenience: lift, saturate and truncate.
StrictLevel de_rham_witt(const RingSpec& s, int r, long weight_cap);

/// Repeats each torsion exponent and the free rank f times.
InvariantFactors tensor_coefficients(const InvariantFactors& inv, int f);

/// d of Sat_a in the Sat bases (integral).
IntMat saturated_differential(const RingSpec& s, const Grade& a, int n);

/// H^n(Sat_a / p^r) and H^n(W_r Omega_a) per grade.
struct ModPEntry {
  Grade grade;
  int degree = 0;
  InvariantFactors reduced;
  InvariantFactors strict;
};

struct ModPReport {
  std::vector<ModPEntry> entries;
  bool ok = true;
};

/// Compares both sides on grades with denominators up to p^{r+1}; grades
/// with deeper denominators than p^{r-1} must be acyclic on both sides.
ModPReport mod_p_compatibility(const RingSpec& s, int r, long weight_cap);

/// Elements sum c * x^a dlog x_J (coefficients in Q, f = 1).
struct DlogKey {
  Grade a;
  unsigned J = 0;

  auto operator<=>(const DlogKey&) const = default;
};
using DlogForm = std::map<DlogKey, Rat>;

DlogForm dlog_d(const DlogForm& w);
DlogForm dlog_frobenius(const DlogForm& w, std::int64_t p);
DlogForm dlog_verschiebung(const DlogForm& w, std::int64_t p);
DlogForm dlog_wedge(const DlogForm& a, const DlogForm& b);
DlogForm dlog_add(const DlogForm& a, const DlogForm& b, const Rat& c = 1);
/// The Teichmuller lift [x_j] (nvars variables).
DlogForm teichmuller_variable(std::size_t nvars, std::size_t j);
std::string dlog_to_string(const RingSpec& s, const DlogForm& w);

}  // namespace drw
