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

// Kaehler differentials and de Rham cohomology of graded F_p-algebras, one
// grade at a time, together with the inverse Cartier map.
//
// Grades are multidegrees for poly, laurent and perfection kinds (rational
// for perfections) and a single total weight for quotients. Over F_q the
// modules are F_p-modules with basis t^k * (monomial form), k < f.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "drwitt/exactcore.hpp"
#include "drwitt/ringspec.hpp"

namespace drw {

using Grade = std::vector<Rat>;

std::string grade_to_string(const Grade& g);
/// Weight used against the cap: sum of w_j |a_j| (or the total weight).
Rat grade_weight(const RingSpec& s, const Grade& g);
Grade scale_grade(const Grade& g, const Rat& c);

/// The form t^k * x^b * dx_J with J a bitmask of variable indices.
struct FormKey {
  Exponent b;
  unsigned J = 0;
  int k = 0;

  auto operator<=>(const FormKey&) const = default;
};

std::string form_to_string(const RingSpec& s, const FormKey& key);

/// F_p-linear combination of forms.
using Form = std::map<FormKey, std::int64_t>;

/// Omega^i at one grade: generators and relations over F_p.
struct DeRhamPiece {
  std::vector<FormKey> basis;
  std::map<FormKey, std::size_t> index;
  ModMat relations;

  std::size_t gens() const { return basis.size(); }
  /// Coordinates of a form supported on this piece's generators.
  std::vector<std::int64_t> coordinates(const ModRing& field, const Form& f) const;
};

struct GradeComplex {
  Grade grade;
  std::vector<DeRhamPiece> omega;  // degrees 0..top
  std::vector<ModMat> d;           // d[i] : omega[i] -> omega[i+1]

  Complex<ModRing> as_complex() const;
};

struct DeRhamComplex {
  RingSpec spec;
  int i_max = 0;
  long weight_cap = 0;
  ModRing field;
  std::map<Grade, GradeComplex> grades;
};

/// Grades of weight <= cap. Perfections use denominators up to p^denominator_exp.
std::vector<Grade> enumerate_grades(const RingSpec& s, long cap, int denominator_exp = 1);

/// Omega^0..Omega^{i_max+1} per grade up to the weight cap.
DeRhamComplex kaehler(const RingSpec& s, int i_max, long weight_cap);
GradeComplex grade_complex(const RingSpec& s, const Grade& g, int top);

/// H^i per grade.
std::map<Grade, InvariantFactors> derham_cohomology(const RingSpec& s, int i, long weight_cap);

/// Exterior derivative of a form (fiber variables only).
Form exterior_d(const RingSpec& s, const Form& f);
/// Chain-level inverse Cartier image of a generator.
Form inverse_cartier_form(const RingSpec& s, const FormKey& key);
/// Reduces t-powers >= f using the constant-field modulus.
void add_form_term(const RingSpec& s, Form& f, FormKey key, std::int64_t c);

struct CartierBlock {
  Grade source;
  Grade target;
  ModMat matrix;  // rows: source generators; columns: target generators (chain level)
};

/// C^{-1}: Omega^i at grade g -> Omega^i at grade p*g (landing in cycles),
/// for every g whose target lies within the cap.
std::vector<CartierBlock> inverse_cartier(const RingSpec& s, int i, long weight_cap);

struct CartierEntry {
  int degree = 0;
  Grade source;  // empty with has_source == false for targets outside p * grades
  bool has_source = true;
  Grade target;
  int source_dim = 0;
  int image_dim = 0;
  int target_dim = 0;
  bool lands_in_cycles = true;
  bool iso = true;
};

struct CartierReport {
  std::vector<CartierEntry> entries;
  std::vector<CartierEntry> witnesses;
  bool consistent = true;
  std::string verdict;
  /// The flatness clause of Cartier smoothness is never certified.
  std::string flatness = "not checked";
};

CartierReport cartier_smooth_check(const RingSpec& s, int i_max, long weight_cap);

/// B over A: A's variables are the base, the rest are differentiated.
RingSpec relative_spec(const RingSpec& A, const RingSpec& B);
CartierReport relative_cartier_check(const RingSpec& A, const RingSpec& B, int i_max, long weight_cap);

struct BaseChangeReport {
  std::string kind;  // "field_extension" or "localization"
  bool before_ok = false;
  bool after_ok = false;
  bool square_commutes = false;
  int blocks_compared = 0;
};

/// Compares C^{-1} of B with C^{-1} of its base change B' (F_p -> F_q, or
/// poly -> laurent). Throws UnsupportedBaseChange otherwise.
BaseChangeReport base_change_check(const RingSpec& B, const RingSpec& Bprime, int i_max, long weight_cap);

}  // namespace drw
