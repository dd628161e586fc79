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

// Descriptions of the graded F_p-algebras the library computes with.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drwitt/coeffring.hpp"

namespace drw {

enum class RingKind { FiniteField, Poly, Laurent, Quotient, Perfection };

const char* ring_kind_name(RingKind k);

struct RingSpec {
  std::int64_t p = 2;
  RingKind kind = RingKind::Poly;
  /// For perfections, the kind being perfected (Poly, Laurent or FiniteField).
  RingKind inner = RingKind::Poly;
  std::vector<std::string> vars;
  std::vector<int> weights;
  std::vector<std::string> relation_text;
  /// Relations over F_p in the variables (plus t when f > 1).
  std::vector<ZPoly> relations;
  /// Degree of the constant field F_q over F_p.
  int f = 1;
  /// Variables that are differentiated; empty means all. Others belong to the base.
  std::vector<bool> fiber;

  std::size_t nvars() const { return vars.size(); }
  bool is_fiber(std::size_t j) const { return fiber.empty() || fiber[j]; }
  /// Kind whose monomials and grading are used (the inner kind for perfections).
  RingKind base_kind() const { return kind == RingKind::Perfection ? inner : kind; }
  /// Coefficient ring F_q[vars] (t is appended when f > 1).
  CoeffRing coefficient_ring() const;
  std::string describe() const;
};

RingSpec make_finite_field(std::int64_t p, int f = 1);
RingSpec make_poly(std::int64_t p, std::vector<std::string> vars, std::vector<int> weights = {}, int f = 1);
RingSpec make_laurent(std::int64_t p, std::vector<std::string> vars, std::vector<int> weights = {}, int f = 1);
/// Throws NonQuasiHomogeneous if a relation is not weighted-homogeneous.
RingSpec make_quotient(std::int64_t p, std::vector<std::string> vars, std::vector<int> weights,
                       std::vector<std::string> relations, int f = 1);
RingSpec make_perfection(const RingSpec& inner);

/// Parses the line-oriented ring-spec format:
///   p = 3
///   kind = quotient
///   vars = x:1, y:1
///   rels = x^2
///   f = 1
/// Perfections name the wrapped kind with `of = poly`.
RingSpec parse_ring_spec(const std::string& text);
std::string ring_spec_to_text(const RingSpec& s);

/// Weighted degree of a relation; -1 if not weighted-homogeneous.
long homogeneous_weight(const ZPoly& f, const std::vector<int>& weights);

}  // namespace drw
