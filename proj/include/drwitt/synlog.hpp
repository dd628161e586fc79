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

// Nygaard filtration, divided Frobenius, logarithmic forms and the syntomic
// complexes Z/p^r(i) = fib(phi/p^i - can : N^{>=i} W Omega -> W Omega) / p^r.
//
// The divided Frobenius moves grade a to grade pa, so the fiber splits over
// Frobenius orbits {m p^k : k in Z}. Each orbit is cut to a finite window
// k in [-depth, K + 1 + extra]. A window W_K (sources up to K, targets up to
// K + 1) is a subcomplex of the larger one, and the reported group is the
// image of H(W_K) in H(W_{K + 1 + extra}). K starts at the last index inside
// the weight cap and is raised until W_K and W_{K+1} have the same image, so
// an orbit's group does not depend on the cap once the orbit is included.

#pragma once

#include <string>
#include <vector>

#include "drwitt/dieudonne.hpp"

namespace drw {

/// N^{>=i} in degree n at grade a. For n < i the lattice is p^{i-1-n} V
/// Sat^n_{pa}, parametrized by Sat^n_{pa}; for n >= i it is Sat^n_a.
struct NygaardPiece {
  Grade grade;
  int degree = 0;
  IntMat lattice;            // basis in dlog coordinates at `grade`
  Grade parameter_grade;     // pa for n < i, a otherwise
  IntMat parameter;          // parameter basis; row j maps to row j of `lattice`
  IntMat inclusion;          // lattice basis -> Sat^n_a basis
  IntMat divided_frobenius;  // lattice basis -> Sat^n_{pa} basis (phi / p^i)
};

NygaardPiece nygaard_piece(const RingSpec& s, const Grade& a, int n, int i);
/// d : N^{>=i,n}_a -> N^{>=i,n+1}_a in the lattice bases.
IntMat nygaard_differential(const RingSpec& s, const Grade& a, int n, int i);

struct NygaardModel {
  RingSpec spec;
  int i = 0;
  long weight_cap = 0;
  std::map<Grade, std::vector<NygaardPiece>> pieces;
};

NygaardModel nygaard(const RingSpec& s, int i, long weight_cap, int denominator_exp = 0);

struct SyntomicOptions {
  int depth = 2;   // orbit indices below 0 kept (denominators up to p^depth)
  int extra = -1;  // survival window; -1 means r + nvars + 2
};

struct OrbitCohomology {
  Grade representative;
  std::vector<InvariantFactors> h;  // degrees 0 .. top + 1
};

struct SyntomicComplex {
  RingSpec spec;
  int i = 0;
  int r = 1;
  long weight_cap = 0;
  SyntomicOptions options;
  int top = 0;  // highest fiber degree
  std::vector<OrbitCohomology> orbits;
  std::vector<InvariantFactors> total;

  InvariantFactors cohomology(int n) const;
};

/// Orbit representatives: 0 and the grades of weight <= cap that are not p times an integral grade.
std::vector<Grade> orbit_representatives(const RingSpec& s, long weight_cap);

SyntomicComplex syntomic(const RingSpec& s, int i, int r, long weight_cap, SyntomicOptions opt = {});

struct LogLattice {
  RingSpec spec;
  int i = 0;
  int r = 1;
  std::vector<std::string> symbols;  // generating symbols retained
  ModMat basis;                      // rows in W_r Omega^i coordinates at grade 0
  InvariantFactors invariants;
};

/// Span of dlog[u_1] ^ ... ^ dlog[u_i] with u_j among the declared unit
/// generators (constants, and x_j^{+-1} for laurent kinds).
LogLattice log_lattice(const RingSpec& s, int i, int r, long symbol_budget = 4096);

struct FundamentalSeqReport {
  int i = 0;
  int r = 1;
  std::vector<int> certified_degrees;  // degrees n != i whose block is invertible mod p^r
  std::vector<int> failed_degrees;
  std::vector<int> nonzero_off_degrees;
  InvariantFactors h_i;
  InvariantFactors h_i_plus_1;  // ring-level coker(phi/p^i - 1)
  InvariantFactors log;
  bool symbols_are_cycles = true;
  std::string verdict;  // EQUAL, CONTAINS or DIFFERENT
  int index_exponent = 0;
  bool ok = true;       // certificates hold and off-degree cohomology vanishes
};

FundamentalSeqReport verify_fundamental_seq(const RingSpec& s, int i, int r, long weight_cap,
                                            SyntomicOptions opt = {});

struct NygaardGradedEntry {
  Grade grade;  // grade of Omega; gr^i is taken at grade / p
  int degree = 0;
  InvariantFactors graded;
  InvariantFactors truncated;
};

struct NygaardGradedReport {
  std::vector<NygaardGradedEntry> entries;
  bool ok = true;
};

/// gr^i_N at grade a/p against tau^{<= i} Omega at grade a, plus acyclicity
/// of gr^i at grades with denominator p^2.
NygaardGradedReport nygaard_graded_check(const RingSpec& s, int i, long weight_cap);

/// N^{>=i_cap} inside p^{i_cap - top - 1} W Omega and N^{>=i+1} inside N^{>=i}.
bool nygaard_completeness_check(const RingSpec& s, int i_cap, long weight_cap);

/// R maps the level r+1 log lattice onto the level r one.
bool log_mod_compat(const RingSpec& s, int i, int r);

}  // namespace drw
