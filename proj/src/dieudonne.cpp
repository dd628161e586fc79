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

#include "drwitt/dieudonne.hpp"

#include <bit>
#include <functional>
#include <sstream>

#include "drwitt/error.hpp"

namespace drw {

namespace {

const IntRing kZ;

void require_supported(const RingSpec& s) {
  if (s.kind == RingKind::Quotient)
    throw Error(ErrorKind::UnsupportedKind, "no saturated de Rham-Witt model for quotient rings");
}

// Sign of dlog_j ^ dlog_J relative to the sorted wedge.
int insert_sign(unsigned J, std::size_t j) {
  return std::popcount(J & ((1u << j) - 1)) % 2 ? -1 : 1;
}

// Sign of dlog_J ^ dlog_K relative to the sorted wedge of J | K.
int merge_sign(unsigned J, unsigned K) {
  int inversions = 0;
  for (std::size_t k = 0; k < 32; ++k)
    if (K & (1u << k)) inversions += std::popcount(J >> (k + 1));
  return inversions % 2 ? -1 : 1;
}

Int p_power(std::int64_t p, int e) {
  Int out = 1;
  for (int i = 0; i < e; ++i) out *= static_cast<long>(p);
  return out;
}

}  // namespace

int denominator_exponent(const Grade& a, std::int64_t p) {
  int e = 0;
  for (const auto& x : a) {
    if (sgn(x) == 0) continue;
    e = std::max(e, -valuation(x, p));
  }
  return e;
}

int dieudonne_top(const RingSpec& s) {
  require_supported(s);
  if (s.kind == RingKind::FiniteField || s.kind == RingKind::Perfection) return 0;
  return static_cast<int>(s.nvars());
}

std::vector<unsigned> dlog_subsets(const RingSpec& s, const Grade& a, int n) {
  std::vector<unsigned> out;
  const int top = dieudonne_top(s);
  if (n < 0 || n > top) return out;
  if (top == 0) {
    out.push_back(0);
    return out;
  }
  const bool laurent = s.kind == RingKind::Laurent;
  for (unsigned J = 0; J < (1u << s.nvars()); ++J) {
    if (std::popcount(J) != n) continue;
    bool ok = true;
    for (std::size_t j = 0; j < s.nvars() && ok; ++j)
      if ((J & (1u << j)) && !laurent && sgn(a[j]) <= 0) ok = false;
    if (ok) out.push_back(J);
  }
  return out;
}

ScaledMat dlog_differential(const RingSpec& s, const Grade& a, int n) {
  auto src = dlog_subsets(s, a, n), dst = dlog_subsets(s, a, n + 1);
  ScaledMat m{IntMat::zeros(kZ, src.size(), dst.size()), p_power(s.p, denominator_exponent(a, s.p))};
  for (std::size_t r = 0; r < src.size(); ++r)
    for (std::size_t c = 0; c < dst.size(); ++c) {
      unsigned extra = dst[c] & ~src[r];
      if ((dst[c] & src[r]) != src[r] || std::popcount(extra) != 1) continue;
      std::size_t j = static_cast<std::size_t>(std::countr_zero(extra));
      Rat coeff = a[j] * Rat(m.den);
      m.num(r, c) = coeff.get_num() * insert_sign(src[r], j);
    }
  return m;
}

std::vector<Grade> dieudonne_grades(const RingSpec& s, long cap, int denominator_exp) {
  require_supported(s);
  std::vector<Grade> out;
  if (s.nvars() == 0) {
    out.push_back(Grade{});
    return out;
  }
  const bool laurent = s.base_kind() == RingKind::Laurent;
  const long den = static_cast<long>(ipow(s.p, denominator_exp));
  Exponent e(s.nvars(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t j, long rem) {
    if (j == s.nvars()) {
      Grade g;
      for (int x : e) {
        g.push_back(Rat(x, den));
        g.back().canonicalize();
      }
      out.push_back(g);
      return;
    }
    for (long x = laurent ? -rem / s.weights[j] : 0; x * s.weights[j] <= rem; ++x) {
      e[j] = static_cast<int>(x);
      rec(j + 1, rem - std::abs(x) * s.weights[j]);
    }
    e[j] = 0;
  };
  rec(0, cap * den);
  return out;
}

const DieudonneGrade& DieudonneComplex::at(const Grade& a) const {
  auto it = grades.find(a);
  if (it == grades.end()) throw Error(ErrorKind::InvalidArgument, "grade " + grade_to_string(a) + " not computed");
  return it->second;
}

DieudonneComplex lift_with_frobenius(const RingSpec& s, long weight_cap) {
  DieudonneComplex M;
  M.spec = s;
  M.weight_cap = weight_cap;
  for (const auto& a : dieudonne_grades(s, weight_cap, 0)) {
    DieudonneGrade g;
    g.grade = a;
    for (int n = 0; n <= M.top(); ++n) {
      g.subsets.push_back(dlog_subsets(s, a, n));
      g.lattice.push_back(lattice_identity(g.subsets.back().size()));
    }
    M.grades.emplace(a, std::move(g));
  }
  return M;
}

std::vector<IntMat> eta_p_lattices(std::int64_t p, const std::vector<IntMat>& lattices,
                                   const std::vector<ScaledMat>& d) {
  std::vector<IntMat> out;
  for (std::size_t n = 0; n < lattices.size(); ++n) {
    const int e = static_cast<int>(n);
    IntMat scaled = lattice_scale(lattices[n], p_power(p, e));
    if (n + 1 < lattices.size() && n < d.size()) {
      IntMat next = lattice_scale(lattices[n + 1], p_power(p, e + 1));
      scaled = lattice_preimage(scaled, d[n], next);
    }
    out.push_back(scaled);
  }
  return out;
}

DieudonneComplex eta_p(const DieudonneComplex& M) {
  DieudonneComplex out = M;
  out.saturated = false;
  for (auto& [a, g] : out.grades) {
    std::vector<ScaledMat> d;
    for (int n = 0; n < M.top(); ++n) d.push_back(dlog_differential(M.spec, a, n));
    g.lattice = eta_p_lattices(M.spec.p, g.lattice, d);
  }
  return out;
}

DieudonneComplex saturate(const DieudonneComplex& M, int r, int max_stages) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "level must be at least 1");
  const RingSpec& s = M.spec;
  const int top = M.top();
  DieudonneComplex out;
  out.spec = s;
  out.weight_cap = M.weight_cap;
  out.denominator_exp = r - 1;
  out.saturated = true;
  for (const auto& a : dieudonne_grades(s, M.weight_cap, r - 1)) {
    DieudonneGrade g;
    g.grade = a;
    for (int n = 0; n <= top; ++n) g.subsets.push_back(dlog_subsets(s, a, n));
    const int e = denominator_exponent(a, s.p);
    std::vector<IntMat> prev;
    bool stable = false;
    for (int stage = e; stage <= e + max_stages && !stable; ++stage) {
      // Stage `stage`: (p^n F)^{-stage} of eta_p^stage of the lift at p^stage a.
      const Grade b = scale_grade(a, Rat(p_power(s.p, stage)));
      std::vector<IntMat> lat;
      std::vector<ScaledMat> d;
      for (int n = 0; n <= top; ++n) lat.push_back(lattice_identity(g.subsets[static_cast<std::size_t>(n)].size()));
      for (int n = 0; n < top; ++n) d.push_back(dlog_differential(s, b, n));
      for (int k = 0; k < stage; ++k) lat = eta_p_lattices(s.p, lat, d);
      std::vector<IntMat> cur;
      for (int n = 0; n <= top; ++n) {
        const auto& L = lat[static_cast<std::size_t>(n)];
        cur.push_back(lattice_image(L, ScaledMat{lattice_identity(L.cols()), p_power(s.p, n * stage)}));
      }
      stable = !prev.empty() && prev == cur;
      prev = std::move(cur);
    }
    if (!stable)
      throw Error(ErrorKind::PrecisionExhausted, "saturation did not stabilize at grade " + grade_to_string(a));
    g.lattice = std::move(prev);
    out.grades.emplace(a, std::move(g));
  }
  return out;
}

IntMat saturated_lattice(const RingSpec& s, const Grade& a, int n) {
  const std::size_t k = dlog_subsets(s, a, n).size();
  IntMat L = lattice_identity(k);
  if (n >= dieudonne_top(s)) return L;
  const std::size_t k1 = dlog_subsets(s, a, n + 1).size();
  return lattice_preimage(L, dlog_differential(s, a, n), lattice_identity(k1));
}

bool saturation_criterion(const RingSpec& s, const Grade& a) {
  const Grade pa = scale_grade(a, Rat(static_cast<long>(s.p)));
  const int top = dieudonne_top(s);
  for (int n = 0; n <= top; ++n) {
    IntMat target = saturated_lattice(s, pa, n);
    if (n < top) {
      IntMat next = lattice_scale(saturated_lattice(s, pa, n + 1), s.p);
      target = lattice_preimage(target, dlog_differential(s, pa, n), next);
    }
    if (!lattice_equal(target, saturated_lattice(s, a, n))) return false;
  }
  return true;
}

InvariantFactors tensor_coefficients(const InvariantFactors& inv, int f) {
  InvariantFactors out;
  out.p = inv.p;
  for (int e : inv.torsion)
    for (int k = 0; k < f; ++k) out.torsion.push_back(e);
  out.free_rank = inv.free_rank * f;
  out.normalize();
  return out;
}

StrictPiece strict_piece(const RingSpec& s, const Grade& a, int n, int r) {
  StrictPiece piece;
  const Int pr = p_power(s.p, r);
  const Grade b = scale_grade(a, Rat(pr));
  piece.numerator = saturated_lattice(s, a, n);
  const std::size_t k = piece.numerator.cols();
  IntMat den = lattice_scale(saturated_lattice(s, b, n), pr);
  if (n > 0) {
    IntMat src = lattice_scale(saturated_lattice(s, b, n - 1), pr);
    den = lattice_sum(den, lattice_image(src, dlog_differential(s, a, n - 1)));
  }
  piece.denominator = den;
  piece.invariants.p = s.p;
  if (k > 0) {
    IntMat num_coords = lattice_identity(piece.numerator.rows());
    IntMat den_coords = lattice_coordinates(piece.numerator, den);
    piece.invariants = subquotient_invariants(kZ, num_coords, den_coords, s.p);
  }
  piece.invariants = tensor_coefficients(piece.invariants, s.f);
  return piece;
}

InvariantFactors StrictLevel::invariants(const Grade& a, int n) const {
  auto it = pieces.find(a);
  if (it == pieces.end() || n < 0 || n >= static_cast<int>(it->second.size())) {
    InvariantFactors z;
    z.p = spec.p;
    return z;
  }
  return it->second[static_cast<std::size_t>(n)].invariants;
}

InvariantFactors StrictLevel::total(int n) const {
  InvariantFactors t;
  t.p = spec.p;
  for (const auto& [a, v] : pieces) t = direct_sum(t, invariants(a, n));
  return t;
}

StrictLevel strict_truncate(const DieudonneComplex& sat, int r) {
  if (!sat.saturated) throw Error(ErrorKind::InvalidArgument, "strict truncation needs a saturated complex");
  if (r < 1 || sat.denominator_exp < r - 1)
    throw Error(ErrorKind::InvalidArgument, "saturation window too small for level " + std::to_string(r));
  StrictLevel level;
  level.spec = sat.spec;
  level.r = r;
  level.weight_cap = sat.weight_cap;
  for (const auto& [a, g] : sat.grades) {
    if (denominator_exponent(a, sat.spec.p) > r - 1) continue;
    std::vector<StrictPiece> row;
    for (int n = 0; n <= sat.top(); ++n) {
      StrictPiece piece = strict_piece(sat.spec, a, n, r);
      // The numerator comes from the colimit itself, not the closed form.
      if (!lattice_equal(piece.numerator, g.lattice[static_cast<std::size_t>(n)]))
        throw Error(ErrorKind::PrecisionExhausted, "saturation disagrees with the closed form at " + grade_to_string(a));
      row.push_back(std::move(piece));
    }
    level.pieces.emplace(a, std::move(row));
  }
  return level;
}

StrictLevel de_rham_witt(const RingSpec& s, int r, long weight_cap) {
  return strict_truncate(saturate(lift_with_frobenius(s, weight_cap), r), r);
}

IntMat saturated_differential(const RingSpec& s, const Grade& a, int n) {
  return restricted_matrix(saturated_lattice(s, a, n), dlog_differential(s, a, n),
                           saturated_lattice(s, a, n + 1));
}

ModPReport mod_p_compatibility(const RingSpec& s, int r, long weight_cap) {
  ModPReport report;
  const ModRing ring(s.p, r);
  const int top = dieudonne_top(s);
  for (const auto& a : dieudonne_grades(s, weight_cap, r + 1)) {
    Complex<ModRing> reduced;
    Complex<IntRing> strict;
    for (int n = 0; n <= top; ++n) {
      StrictPiece piece = strict_piece(s, a, n, r);
      const std::size_t k = piece.numerator.rows();
      reduced.modules.push_back(Presentation<ModRing>::free(ring, k));
      Presentation<IntRing> m{k, lattice_coordinates(piece.numerator, piece.denominator)};
      if (k == 0) m.relations = IntMat::zeros(kZ, 0, 0);
      strict.modules.push_back(m);
      if (n < top) {
        IntMat d = saturated_differential(s, a, n);
        reduced.diffs.push_back(to_mod(ring, d));
        strict.diffs.push_back(d);
      }
    }
    for (int n = 0; n <= top; ++n) {
      ModPEntry e;
      e.grade = a;
      e.degree = n;
      e.reduced = tensor_coefficients(homology(ring, reduced, n, s.p), s.f);
      e.strict = tensor_coefficients(homology(kZ, strict, n, s.p), s.f);
      bool ok = e.reduced == e.strict;
      if (denominator_exponent(a, s.p) > r - 1) ok = ok && e.reduced.is_zero();
      report.ok = report.ok && ok;
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

DlogForm dlog_add(const DlogForm& a, const DlogForm& b, const Rat& c) {
  DlogForm out = a;
  for (const auto& [k, v] : b) {
    Rat& slot = out[k];
    slot += c * v;
    if (sgn(slot) == 0) out.erase(k);
  }
  return out;
}

DlogForm dlog_d(const DlogForm& w) {
  DlogForm out;
  for (const auto& [key, c] : w)
    for (std::size_t j = 0; j < key.a.size(); ++j) {
      if ((key.J & (1u << j)) || sgn(key.a[j]) == 0) continue;
      DlogForm term{{DlogKey{key.a, key.J | (1u << j)}, c * key.a[j] * insert_sign(key.J, j)}};
      out = dlog_add(out, term);
    }
  return out;
}

DlogForm dlog_frobenius(const DlogForm& w, std::int64_t p) {
  DlogForm out;
  for (const auto& [key, c] : w) out[DlogKey{scale_grade(key.a, Rat(static_cast<long>(p))), key.J}] = c;
  return out;
}

DlogForm dlog_verschiebung(const DlogForm& w, std::int64_t p) {
  DlogForm out;
  for (const auto& [key, c] : w)
    out[DlogKey{scale_grade(key.a, Rat(1, static_cast<unsigned long>(p))), key.J}] = c * static_cast<long>(p);
  return out;
}

DlogForm dlog_wedge(const DlogForm& a, const DlogForm& b) {
  DlogForm out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      if (ka.J & kb.J) continue;
      Grade g = ka.a;
      for (std::size_t j = 0; j < g.size(); ++j) g[j] += kb.a[j];
      out = dlog_add(out, DlogForm{{DlogKey{g, ka.J | kb.J}, ca * cb * merge_sign(ka.J, kb.J)}});
    }
  return out;
}

DlogForm teichmuller_variable(std::size_t nvars, std::size_t j) {
  Grade g(nvars, Rat(0));
  g[j] = 1;
  return DlogForm{{DlogKey{g, 0}, Rat(1)}};
}

std::string dlog_to_string(const RingSpec& s, const DlogForm& w) {
  if (w.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : w) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (std::size_t j = 0; j < key.a.size(); ++j)
      if (sgn(key.a[j]) != 0) os << "*" << s.vars[j] << "^(" << key.a[j].get_str() << ")";
    for (std::size_t j = 0; j < key.a.size(); ++j)
      if (key.J & (1u << j)) os << "*dlog(" << s.vars[j] << ")";
  }
  return os.str();
}

}  // namespace drw
