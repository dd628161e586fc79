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

#include "drwitt/derham.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <set>

namespace drw {

namespace {

const std::vector<Int>& field_modulus(std::int64_t p, int f) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, int>, std::vector<Int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, f);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, first_irreducible(p, f)).first;
  return it->second;
}

int wedge_sign(unsigned J, std::size_t j) {
  return std::popcount(J & ((1u << j) - 1u)) % 2 == 0 ? 1 : -1;
}

long j_weight(const RingSpec& s, unsigned J) {
  long w = 0;
  for (std::size_t j = 0; j < s.nvars(); ++j)
    if (J & (1u << j)) w += s.weights[j];
  return w;
}

std::vector<unsigned> subsets_of_size(const RingSpec& s, int i) {
  std::vector<unsigned> out;
  const unsigned n = static_cast<unsigned>(s.nvars());
  for (unsigned J = 0; J < (1u << n); ++J) {
    if (std::popcount(J) != i) continue;
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j)
      if ((J & (1u << j)) && !s.is_fiber(j)) ok = false;
    if (ok) out.push_back(J);
  }
  return out;
}

// All b >= 0 with sum w_j b_j == target.
void monomials_of_weight(const RingSpec& s, long target, std::vector<Exponent>& out) {
  Exponent b(s.nvars(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t j, long rem) {
    if (j == s.nvars()) {
      if (rem == 0) out.push_back(b);
      return;
    }
    for (int e = 0; static_cast<long>(e) * s.weights[j] <= rem; ++e) {
      b[j] = e;
      rec(j + 1, rem - static_cast<long>(e) * s.weights[j]);
    }
    b[j] = 0;
  };
  rec(0, target);
}

Exponent to_exponent(const Grade& g) {
  Exponent e;
  for (const auto& x : g) e.push_back(static_cast<int>(x.get_num().get_si()));
  return e;
}

// Source grade whose Cartier image is h, if any.
bool cartier_source(const RingSpec& s, const Grade& h, Grade& g) {
  g = h;
  const Rat P(static_cast<long>(s.p));
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (s.kind != RingKind::Quotient && s.kind != RingKind::Perfection && !s.is_fiber(j)) continue;
    g[j] /= P;
    if (s.kind != RingKind::Perfection && g[j].get_den() != 1) return false;
  }
  return true;
}

Form times_poly(const RingSpec& s, const ZPoly& r, const Exponent& m, int k, unsigned J, int sign = 1) {
  Form out;
  const std::size_t n = s.nvars();
  for (const auto& [e, c] : r.terms()) {
    FormKey key;
    key.b = m;
    for (std::size_t j = 0; j < n; ++j) key.b[j] += e[j];
    key.k = k + (s.f > 1 ? e[n] : 0);
    key.J = J;
    Int coef = c * sign;
    coef %= Int(static_cast<long>(s.p));
    add_form_term(s, out, key, coef.get_si());
  }
  return out;
}

DeRhamPiece make_piece(const RingSpec& s, const ModRing& field, const Grade& g, int i) {
  DeRhamPiece piece;
  auto push = [&](FormKey key) {
    piece.index.emplace(key, piece.basis.size());
    piece.basis.push_back(std::move(key));
  };
  const RingKind kind = s.kind;
  if (kind == RingKind::Perfection || kind == RingKind::FiniteField) {
    if (i == 0)
      for (int k = 0; k < s.f; ++k) push(FormKey{Exponent(s.nvars(), 0), 0, k});
    piece.relations = ModMat::zeros(field, 0, piece.gens());
    return piece;
  }
  if (kind == RingKind::Poly || kind == RingKind::Laurent) {
    Exponent a = to_exponent(g);
    for (unsigned J : subsets_of_size(s, i)) {
      Exponent b = a;
      bool ok = true;
      for (std::size_t j = 0; j < s.nvars(); ++j) {
        if (J & (1u << j)) b[j] -= 1;
        if (kind == RingKind::Poly && b[j] < 0) ok = false;
      }
      if (!ok) continue;
      for (int k = 0; k < s.f; ++k) push(FormKey{b, J, k});
    }
    piece.relations = ModMat::zeros(field, 0, piece.gens());
    return piece;
  }
  // Quotient: generators of total weight w, then the relations.
  const long w = g[0].get_num().get_si();
  for (unsigned J : subsets_of_size(s, i)) {
    long rem = w - j_weight(s, J);
    if (rem < 0) continue;
    std::vector<Exponent> monos;
    monomials_of_weight(s, rem, monos);
    for (const auto& b : monos)
      for (int k = 0; k < s.f; ++k) push(FormKey{b, J, k});
  }
  piece.relations = ModMat::zeros(field, 0, piece.gens());
  std::vector<int> wts = s.weights;
  if (s.f > 1) wts.push_back(0);
  for (const auto& r : s.relations) {
    const long wr = homogeneous_weight(r, wts);
    auto add_rows = [&](const Form& form) {
      if (!form.empty()) piece.relations.append_row(piece.coordinates(field, form));
    };
    for (unsigned J : subsets_of_size(s, i)) {
      long rem = w - wr - j_weight(s, J);
      if (rem < 0) continue;
      std::vector<Exponent> monos;
      monomials_of_weight(s, rem, monos);
      for (const auto& m : monos)
        for (int k = 0; k < s.f; ++k) add_rows(times_poly(s, r, m, k, J));
    }
    if (i == 0) continue;
    for (unsigned J : subsets_of_size(s, i - 1)) {
      for (std::size_t j = 0; j < s.nvars(); ++j) {
        if ((J & (1u << j)) || !s.is_fiber(j)) continue;
        long rem = w - wr + s.weights[j] - j_weight(s, J) - s.weights[j];
        if (rem < 0) continue;
        // d/dx_j of r, then wedge dx_j in front of dx_J.
        ZPoly dr(r.nvars());
        for (const auto& [e, c] : r.terms()) {
          if (e[j] == 0) continue;
          Exponent e2 = e;
          e2[j] -= 1;
          dr.add_term(e2, c * e[j]);
        }
        std::vector<Exponent> monos;
        monomials_of_weight(s, rem, monos);
        for (const auto& m : monos)
          for (int k = 0; k < s.f; ++k) {
            Form form = times_poly(s, dr, m, k, J | (1u << j), wedge_sign(J, j));
            add_rows(form);
          }
      }
    }
  }
  return piece;
}

}  // namespace

std::string grade_to_string(const Grade& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + g[i].get_str();
  return s + ")";
}

Rat grade_weight(const RingSpec& s, const Grade& g) {
  if (s.kind == RingKind::Quotient) return g.empty() ? Rat(0) : g[0];
  Rat w = 0;
  for (std::size_t j = 0; j < g.size(); ++j) w += abs(g[j]) * s.weights[j];
  return w;
}

Grade scale_grade(const Grade& g, const Rat& c) {
  Grade h = g;
  for (auto& x : h) x *= c;
  return h;
}

std::string form_to_string(const RingSpec& s, const FormKey& key) {
  std::string out;
  if (key.k > 0) out += key.k == 1 ? "t" : "t^" + std::to_string(key.k);
  for (std::size_t j = 0; j < key.b.size(); ++j) {
    if (key.b[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += s.vars[j];
    if (key.b[j] != 1) out += "^" + std::to_string(key.b[j]);
  }
  std::string dpart;
  for (std::size_t j = 0; j < s.nvars(); ++j) {
    if (!(key.J & (1u << j))) continue;
    dpart += (dpart.empty() ? "d" : "^d") + s.vars[j];
  }
  if (dpart.empty()) return out.empty() ? "1" : out;
  return out.empty() ? dpart : out + " " + dpart;
}

std::vector<std::int64_t> DeRhamPiece::coordinates(const ModRing& field, const Form& f) const {
  std::vector<std::int64_t> v(gens(), 0);
  for (const auto& [key, c] : f) {
    auto it = index.find(key);
    if (it == index.end()) throw Error(ErrorKind::InvalidArgument, "form outside the graded piece");
    v[it->second] = field.add(v[it->second], field.from_int(c));
  }
  return v;
}

void add_form_term(const RingSpec& s, Form& f, FormKey key, std::int64_t c) {
  c %= s.p;
  if (c < 0) c += s.p;
  if (c == 0) return;
  if (s.f > 1 && key.k >= s.f) {
    const auto& g = field_modulus(s.p, s.f);
    key.k -= s.f;
    for (int l = 0; l < s.f; ++l) {
      FormKey k2 = key;
      k2.k += l;
      Int gl = g[l];
      gl %= Int(static_cast<long>(s.p));
      add_form_term(s, f, k2, -c * gl.get_si());
    }
    return;
  }
  auto& slot = f[key];
  slot = (slot + c) % s.p;
  if (slot == 0) f.erase(key);
}

std::vector<Grade> enumerate_grades(const RingSpec& s, long cap, int denominator_exp) {
  std::vector<Grade> out;
  if (s.kind == RingKind::FiniteField ||
      (s.kind == RingKind::Perfection && s.inner == RingKind::FiniteField)) {
    out.push_back(Grade{});
    return out;
  }
  if (s.kind == RingKind::Quotient) {
    for (long w = 0; w <= cap; ++w) out.push_back(Grade{Rat(w)});
    return out;
  }
  const bool laurent = s.base_kind() == RingKind::Laurent;
  const long den = s.kind == RingKind::Perfection ? static_cast<long>(ipow(s.p, denominator_exp)) : 1;
  const long scaled_cap = cap * den;
  Exponent a(s.nvars(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t j, long rem) {
    if (j == s.nvars()) {
      Grade g;
      for (int e : a) g.push_back(Rat(e, den));
      for (auto& x : g) x.canonicalize();
      out.push_back(g);
      return;
    }
    for (long e = laurent ? -rem / s.weights[j] : 0; e * s.weights[j] <= rem; ++e) {
      a[j] = static_cast<int>(e);
      rec(j + 1, rem - std::abs(e) * s.weights[j]);
    }
    a[j] = 0;
  };
  rec(0, scaled_cap);
  return out;
}

GradeComplex grade_complex(const RingSpec& s, const Grade& g, int top) {
  ModRing field(s.p, 1);
  GradeComplex gc;
  gc.grade = g;
  for (int i = 0; i <= top; ++i) gc.omega.push_back(make_piece(s, field, g, i));
  for (int i = 0; i < top; ++i) {
    const auto& src = gc.omega[static_cast<std::size_t>(i)];
    const auto& dst = gc.omega[static_cast<std::size_t>(i) + 1];
    ModMat d = ModMat::zeros(field, src.gens(), dst.gens());
    for (std::size_t r = 0; r < src.gens(); ++r) {
      Form f;
      f[src.basis[r]] = 1;
      auto v = dst.coordinates(field, exterior_d(s, f));
      for (std::size_t c = 0; c < v.size(); ++c) d(r, c) = v[c];
    }
    gc.d.push_back(d);
  }
  return gc;
}

Complex<ModRing> GradeComplex::as_complex() const {
  Complex<ModRing> c;
  for (const auto& piece : omega) c.modules.push_back(Presentation<ModRing>{piece.gens(), piece.relations});
  c.diffs = d;
  return c;
}

DeRhamComplex kaehler(const RingSpec& s, int i_max, long weight_cap) {
  DeRhamComplex dr;
  dr.spec = s;
  dr.i_max = i_max;
  dr.weight_cap = weight_cap;
  dr.field = ModRing(s.p, 1);
  for (const auto& g : enumerate_grades(s, weight_cap)) dr.grades.emplace(g, grade_complex(s, g, i_max + 1));
  return dr;
}

std::map<Grade, InvariantFactors> derham_cohomology(const RingSpec& s, int i, long weight_cap) {
  DeRhamComplex dr = kaehler(s, i, weight_cap);
  std::map<Grade, InvariantFactors> out;
  for (const auto& [g, gc] : dr.grades) out.emplace(g, homology(dr.field, gc.as_complex(), i, s.p));
  return out;
}

Form exterior_d(const RingSpec& s, const Form& f) {
  Form out;
  if (s.kind == RingKind::Perfection || s.kind == RingKind::FiniteField) return out;
  for (const auto& [key, c] : f) {
    for (std::size_t j = 0; j < s.nvars(); ++j) {
      if ((key.J & (1u << j)) || !s.is_fiber(j) || key.b[j] % s.p == 0) continue;
      FormKey k2 = key;
      k2.b[j] -= 1;
      k2.J |= 1u << j;
      add_form_term(s, out, k2, c * (key.b[j] % s.p) * wedge_sign(key.J, j));
    }
  }
  return out;
}

Form inverse_cartier_form(const RingSpec& s, const FormKey& key) {
  FormKey img = key;
  for (std::size_t j = 0; j < key.b.size(); ++j) {
    if (!s.is_fiber(j) && s.kind != RingKind::Quotient) continue;
    img.b[j] = static_cast<int>(s.p) * key.b[j] + ((key.J & (1u << j)) ? static_cast<int>(s.p) - 1 : 0);
  }
  img.k = key.k * static_cast<int>(s.p);
  Form out;
  add_form_term(s, out, img, 1);
  return out;
}

std::vector<CartierBlock> inverse_cartier(const RingSpec& s, int i, long weight_cap) {
  ModRing field(s.p, 1);
  std::vector<CartierBlock> out;
  for (const auto& h : enumerate_grades(s, weight_cap)) {
    Grade g;
    if (!cartier_source(s, h, g)) continue;
    DeRhamPiece src = make_piece(s, field, g, i);
    DeRhamPiece dst = make_piece(s, field, h, i);
    CartierBlock blk{g, h, ModMat::zeros(field, src.gens(), dst.gens())};
    for (std::size_t r = 0; r < src.gens(); ++r) {
      auto v = dst.coordinates(field, inverse_cartier_form(s, src.basis[r]));
      for (std::size_t c = 0; c < v.size(); ++c) blk.matrix(r, c) = v[c];
    }
    out.push_back(std::move(blk));
  }
  return out;
}

namespace {

int dim(const InvariantFactors& f) { return static_cast<int>(f.torsion.size()) + f.free_rank; }

}  // namespace

CartierReport cartier_smooth_check(const RingSpec& s, int i_max, long weight_cap) {
  ModRing field(s.p, 1);
  CartierReport rep;
  DeRhamComplex dr = kaehler(s, i_max, weight_cap);
  for (int i = 0; i <= i_max; ++i) {
    std::map<Grade, CartierBlock> blocks;
    for (auto& blk : inverse_cartier(s, i, weight_cap)) blocks.emplace(blk.target, std::move(blk));
    for (const auto& [h, gc] : dr.grades) {
      Complex<ModRing> c = gc.as_complex();
      auto sq = homology_subquotient(field, c, i);
      CartierEntry e;
      e.degree = i;
      e.target = h;
      e.target_dim = dim(subquotient_invariants(field, sq.numerator, sq.denominator, s.p));
      auto it = blocks.find(h);
      if (it == blocks.end()) {
        e.has_source = false;
        e.iso = e.target_dim == 0;
      } else {
        const CartierBlock& blk = it->second;
        e.source = blk.source;
        DeRhamPiece src = make_piece(s, field, blk.source, i);
        e.source_dim = dim(cokernel_invariants(field, src.relations, src.gens(), s.p));
        e.lands_in_cycles = contains(field, sq.numerator, blk.matrix);
        ModMat both = howell_form(field, vcat(field, blk.matrix, sq.denominator, c.modules[static_cast<std::size_t>(i)].gens));
        e.image_dim = dim(subquotient_invariants(field, both, sq.denominator, s.p));
        e.iso = e.lands_in_cycles && e.source_dim == e.image_dim && e.image_dim == e.target_dim;
      }
      if (!e.iso) {
        rep.consistent = false;
        rep.witnesses.push_back(e);
      }
      rep.entries.push_back(std::move(e));
    }
  }
  if (rep.consistent) {
    rep.verdict = "consistent-with-Cartier-smooth up to caps";
  } else {
    const auto& w = rep.witnesses.front();
    rep.verdict = "inverse Cartier map fails in degree " + std::to_string(w.degree) + " at grade " +
                  grade_to_string(w.target);
  }
  return rep;
}

RingSpec relative_spec(const RingSpec& A, const RingSpec& B) {
  if (A.p != B.p || A.f != B.f) throw Error(ErrorKind::UnsupportedBaseChange, "base and algebra differ in p or f");
  if (A.kind != RingKind::Poly && A.kind != RingKind::FiniteField)
    throw Error(ErrorKind::UnsupportedKind, "relative checks need a polynomial or finite-field base");
  if (B.kind != RingKind::Poly && B.kind != RingKind::Laurent)
    throw Error(ErrorKind::UnsupportedKind, "relative checks need a polynomial or Laurent algebra");
  RingSpec rel = B;
  rel.fiber.assign(B.nvars(), true);
  for (const auto& v : A.vars) {
    auto it = std::find(B.vars.begin(), B.vars.end(), v);
    if (it == B.vars.end()) throw Error(ErrorKind::UnsupportedBaseChange, "base variable " + v + " missing from algebra");
    rel.fiber[static_cast<std::size_t>(it - B.vars.begin())] = false;
  }
  return rel;
}

CartierReport relative_cartier_check(const RingSpec& A, const RingSpec& B, int i_max, long weight_cap) {
  return cartier_smooth_check(relative_spec(A, B), i_max, weight_cap);
}

BaseChangeReport base_change_check(const RingSpec& B, const RingSpec& Bp, int i_max, long weight_cap) {
  ModRing field(B.p, 1);
  BaseChangeReport rep;
  const bool same_vars = B.vars == Bp.vars && B.weights == Bp.weights && B.p == Bp.p;
  if (same_vars && B.f == 1 && Bp.f > 1 && B.kind == Bp.kind && B.relation_text == Bp.relation_text &&
      B.kind != RingKind::Perfection) {
    rep.kind = "field_extension";
    for (int i = 0; i <= i_max; ++i) {
      auto before = inverse_cartier(B, i, weight_cap);
      auto after = inverse_cartier(Bp, i, weight_cap);
      std::map<Grade, const CartierBlock*> after_by_source;
      for (const auto& blk : after) after_by_source[blk.source] = &blk;
      rep.square_commutes = true;
      for (const auto& blk : before) {
        auto it = after_by_source.find(blk.source);
        if (it == after_by_source.end()) {
          rep.square_commutes = false;
          continue;
        }
        DeRhamPiece src = make_piece(B, field, blk.source, i), dst = make_piece(B, field, blk.target, i);
        DeRhamPiece src2 = make_piece(Bp, field, blk.source, i), dst2 = make_piece(Bp, field, blk.target, i);
        // Expected row for t^k * e: Frobenius on t^k tensored with the row of e.
        for (std::size_t r = 0; r < src2.gens(); ++r) {
          FormKey base = src2.basis[r];
          const int k = base.k;
          base.k = 0;
          std::size_t r0 = src.index.at(base);
          Form expected;
          for (std::size_t c = 0; c < dst.gens(); ++c) {
            if (blk.matrix(r0, c) == 0) continue;
            FormKey tk = dst.basis[c];
            tk.k = k * static_cast<int>(B.p);
            add_form_term(Bp, expected, tk, blk.matrix(r0, c));
          }
          auto v = dst2.coordinates(field, expected);
          for (std::size_t c = 0; c < v.size(); ++c)
            if (v[c] != it->second->matrix(r, c)) rep.square_commutes = false;
        }
        ++rep.blocks_compared;
      }
      if (!rep.square_commutes) break;
    }
  } else if (same_vars && B.kind == RingKind::Poly && Bp.kind == RingKind::Laurent && B.f == Bp.f) {
    rep.kind = "localization";
    rep.square_commutes = true;
    for (int i = 0; i <= i_max; ++i) {
      auto after = inverse_cartier(Bp, i, weight_cap);
      std::map<Grade, const CartierBlock*> after_by_source;
      for (const auto& blk : after) after_by_source[blk.source] = &blk;
      for (const auto& blk : inverse_cartier(B, i, weight_cap)) {
        auto it = after_by_source.find(blk.source);
        if (it == after_by_source.end()) {
          rep.square_commutes = false;
          continue;
        }
        DeRhamPiece src = make_piece(B, field, blk.source, i), dst = make_piece(B, field, blk.target, i);
        DeRhamPiece src2 = make_piece(Bp, field, blk.source, i), dst2 = make_piece(Bp, field, blk.target, i);
        for (std::size_t r = 0; r < src.gens(); ++r) {
          std::size_t r2 = src2.index.at(src.basis[r]);
          for (std::size_t c = 0; c < dst.gens(); ++c)
            if (blk.matrix(r, c) != it->second->matrix(r2, dst2.index.at(dst.basis[c]))) rep.square_commutes = false;
        }
        ++rep.blocks_compared;
      }
    }
  } else {
    throw Error(ErrorKind::UnsupportedBaseChange,
                "supported base changes: F_p -> F_q scalar extension, and poly -> laurent localization");
  }
  rep.before_ok = cartier_smooth_check(B, i_max, weight_cap).consistent;
  rep.after_ok = cartier_smooth_check(Bp, i_max, weight_cap).consistent;
  return rep;
}

}  // namespace drw
