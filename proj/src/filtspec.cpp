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

#include "drwitt/filtspec.hpp"

#include <algorithm>
#include <string>

namespace drw {

namespace {

template <class Ring>
Presentation<Ring> zero_module(const Ring& ring) {
  return Presentation<Ring>{0, Mat<Ring>::zeros(ring, 0, 0)};
}

template <class Ring>
Mat<Ring> stack(const Ring& ring, const Mat<Ring>& a, const Mat<Ring>& b, std::size_t cols) {
  return vcat(ring, a, b, cols);
}

// Block diagonal [a 0; 0 b].
template <class Ring>
Mat<Ring> block_diag(const Ring& ring, const Mat<Ring>& a, std::size_t a_cols, const Mat<Ring>& b,
                     std::size_t b_cols) {
  Mat<Ring> c = Mat<Ring>::zeros(ring, a.rows() + b.rows(), a_cols + b_cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a_cols; ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b_cols; ++j) c(a.rows() + i, a_cols + j) = b(i, j);
  return c;
}

// The map M -> N given by `f` vanishes: every image row lies in the relations of N.
template <class Ring>
bool map_is_zero(const Ring& ring, const Mat<Ring>& f, const Presentation<Ring>& target) {
  if (f.rows() == 0 || target.gens == 0) return true;
  return contains(ring, target.relations, f);
}

template <class Ring>
Complex<Ring> zero_complex_like(const Ring& ring, const Complex<Ring>& shape) {
  Complex<Ring> z;
  z.lo = shape.lo;
  for (std::size_t k = 0; k < shape.modules.size(); ++k) z.modules.push_back(zero_module(ring));
  for (std::size_t k = 0; k < shape.diffs.size(); ++k) z.diffs.push_back(Mat<Ring>::zeros(ring, 0, 0));
  return z;
}

template <class Ring>
std::vector<Mat<Ring>> zero_chain_map(const Ring& ring, const Complex<Ring>& a, const Complex<Ring>& b) {
  std::vector<Mat<Ring>> out;
  for (std::size_t k = 0; k < a.modules.size(); ++k)
    out.push_back(Mat<Ring>::zeros(ring, a.modules[k].gens, b.modules[k].gens));
  return out;
}

// Composite of the transitions from level index j down to level 0, in degree slot k.
template <class Ring>
Mat<Ring> to_ambient(const Ring& ring, const FilteredComplex<Ring>& f, std::size_t j, std::size_t k) {
  Mat<Ring> m = Mat<Ring>::identity(ring, f.levels[j].modules[k].gens);
  for (std::size_t t = j; t > 0; --t) m = matmul(ring, m, f.transitions[t - 1][k]);
  return m;
}

}  // namespace

template <class Ring>
void check_filtered(const Ring& ring, const FilteredComplex<Ring>& f) {
  if (f.hi < f.lo || f.levels.size() != static_cast<std::size_t>(f.hi - f.lo + 1))
    throw Error(ErrorKind::InvalidArgument, "filtered complex needs one level per window index");
  if (f.transitions.size() + 1 != f.levels.size())
    throw Error(ErrorKind::InvalidArgument, "filtered complex needs one transition between consecutive levels");
  for (const auto& c : f.levels) {
    if (c.lo != f.levels[0].lo || c.modules.size() != f.levels[0].modules.size())
      throw Error(ErrorKind::InvalidArgument, "levels must share the degree range");
    check_complex(ring, c);
  }
  for (std::size_t j = 0; j < f.transitions.size(); ++j) {
    const auto& src = f.levels[j + 1];
    const auto& dst = f.levels[j];
    const auto& t = f.transitions[j];
    if (t.size() != src.modules.size())
      throw Error(ErrorKind::InvalidArgument, "transition needs one matrix per degree");
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (t[k].rows() != src.modules[k].gens || t[k].cols() != dst.modules[k].gens)
        throw Error(ErrorKind::InvalidArgument, "transition matrix has the wrong shape");
      const auto& rel = src.modules[k].relations;
      if (rel.rows() > 0 && !map_is_zero(ring, matmul(ring, rel, t[k]), dst.modules[k]))
        throw Error(ErrorKind::NonComplex, "transition is not well defined on the quotient");
      if (k + 1 < t.size()) {
        Mat<Ring> lhs = matmul(ring, src.diffs[k], t[k + 1]);
        Mat<Ring> rhs = matmul(ring, t[k], dst.diffs[k]);
        Mat<Ring> diff = matadd(ring, lhs, matscale(ring, ring.neg(ring.one()), rhs));
        if (!map_is_zero(ring, diff, dst.modules[k + 1]))
          throw Error(ErrorKind::NonComplex, "transition is not a chain map");
      }
    }
  }
}

template <class Ring>
bool has_injective_transitions(const Ring& ring, const FilteredComplex<Ring>& f) {
  for (std::size_t j = 0; j < f.transitions.size(); ++j)
    for (std::size_t k = 0; k < f.transitions[j].size(); ++k) {
      const auto& src = f.levels[j + 1].modules[k];
      const auto& dst = f.levels[j].modules[k];
      if (src.gens == 0) continue;
      Mat<Ring> ker = preimage(ring, f.transitions[j][k], dst.relations);
      if (ker.rows() > 0 && !contains(ring, src.relations, ker)) return false;
    }
  return true;
}

template <class Ring>
GradedComplex<Ring> gr(const Ring& ring, const FilteredComplex<Ring>& f, GrMode mode) {
  check_filtered(ring, f);
  if (mode == GrMode::Strict && !has_injective_transitions(ring, f))
    throw Error(ErrorKind::NonInjectiveTransitions, "transitions are not degreewise injective");
  GradedComplex<Ring> g;
  g.lo = f.lo;
  for (int n = f.lo; n <= f.hi; ++n) {
    const auto j = static_cast<std::size_t>(n - f.lo);
    const Complex<Ring>& b = f.levels[j];
    const bool top = n == f.hi;
    if (mode != GrMode::Cone) {
      Complex<Ring> c = b;
      if (!top)
        for (std::size_t k = 0; k < c.modules.size(); ++k) {
          auto& m = c.modules[k];
          m.relations = howell_form(ring, stack(ring, m.relations, f.transitions[j][k], m.gens));
        }
      g.pieces.push_back(std::move(c));
      continue;
    }
    // cone(A -> B)^m = A^{m+1} + B^m, (a, b) -> (-a dA, a t + b dB).
    const Complex<Ring> a = top ? zero_complex_like(ring, b) : f.levels[j + 1];
    const std::vector<Mat<Ring>> t = top ? zero_chain_map(ring, a, b) : f.transitions[j];
    const std::size_t D = b.modules.size();
    Complex<Ring> c;
    c.lo = b.lo - 1;
    for (std::size_t m = 0; m <= D; ++m) {
      // slot m is degree b.lo - 1 + m: A in slot m (degree + 1), B in slot m - 1.
      const Presentation<Ring> am = m < D ? a.modules[m] : zero_module(ring);
      const Presentation<Ring> bm = m > 0 ? b.modules[m - 1] : zero_module(ring);
      Presentation<Ring> pm{am.gens + bm.gens, block_diag(ring, am.relations, am.gens, bm.relations, bm.gens)};
      c.modules.push_back(pm);
    }
    for (std::size_t m = 0; m < D; ++m) {
      const std::size_t ag = m < D ? a.modules[m].gens : 0, bg = m > 0 ? b.modules[m - 1].gens : 0;
      const std::size_t ag1 = m + 1 < D ? a.modules[m + 1].gens : 0, bg1 = b.modules[m].gens;
      Mat<Ring> d = Mat<Ring>::zeros(ring, ag + bg, ag1 + bg1);
      if (m + 1 < D)
        for (std::size_t r = 0; r < ag; ++r)
          for (std::size_t s = 0; s < ag1; ++s) d(r, s) = ring.neg(a.diffs[m](r, s));
      for (std::size_t r = 0; r < ag; ++r)
        for (std::size_t s = 0; s < bg1; ++s) d(r, ag1 + s) = t[m](r, s);
      if (m > 0)
        for (std::size_t r = 0; r < bg; ++r)
          for (std::size_t s = 0; s < bg1; ++s) d(ag + r, ag1 + s) = b.diffs[m - 1](r, s);
      c.diffs.push_back(d);
    }
    g.pieces.push_back(std::move(c));
  }
  return g;
}

template <class Ring>
FilteredComplex<Ring> t_embed(const Ring& ring, const GradedComplex<Ring>& x) {
  FilteredComplex<Ring> f;
  f.lo = x.lo;
  f.hi = x.hi();
  f.levels = x.pieces;
  for (std::size_t j = 0; j + 1 < x.pieces.size(); ++j)
    f.transitions.push_back(zero_chain_map(ring, x.pieces[j + 1], x.pieces[j]));
  return f;
}

template <class Ring>
FilteredComplex<Ring> c_embed(const Ring& ring, const Complex<Ring>& y, int n, int lo) {
  if (lo > n) throw Error(ErrorKind::InvalidArgument, "c_embed needs lo <= n");
  GradedComplex<Ring> x;
  x.lo = lo;
  for (int k = lo; k < n; ++k) x.pieces.push_back(zero_complex_like(ring, y));
  x.pieces.push_back(y);
  return t_embed(ring, x);
}

template <class Ring>
InvariantFactors SSPage<Ring>::at(int k, int l, std::int64_t p) const {
  auto it = entries.find({k, l});
  if (it != entries.end()) return it->second.invariants;
  InvariantFactors z;
  z.p = p;
  return z;
}

namespace {

// Submodules of the ambient free modules of F^{>=lo}, relations included.
template <class Ring>
class AmbientFiltration {
 public:
  AmbientFiltration(const Ring& ring, const FilteredComplex<Ring>& f) : ring_(ring), f_(f), c_(f.levels[0]) {
    for (std::size_t j = 0; j < f.levels.size(); ++j) {
      std::vector<Mat<Ring>> row;
      for (std::size_t k = 0; k < c_.modules.size(); ++k) {
        const auto& m = c_.modules[k];
        row.push_back(howell_form(ring, stack(ring, to_ambient(ring, f, j, k), m.relations, m.gens)));
      }
      steps_.push_back(std::move(row));
    }
  }

  std::size_t slots() const { return c_.modules.size(); }
  int degree(std::size_t k) const { return c_.lo + static_cast<int>(k); }
  const Complex<Ring>& ambient() const { return c_; }

  // A_s + Rel in slot k.
  Mat<Ring> step(int s, std::size_t k) const {
    if (s <= f_.lo) return steps_[0][k];
    if (s > f_.hi) {
      const auto& m = c_.modules[k];
      return howell_form(ring_, stack(ring_, Mat<Ring>::zeros(ring_, 0, m.gens), m.relations, m.gens));
    }
    return steps_[static_cast<std::size_t>(s - f_.lo)][k];
  }

  // Z_r^s = {x in A_s : dx in A_{s+r}} (standard index r >= 0; r = -1 gives A_s).
  Mat<Ring> cycles(int s, int r, std::size_t k) const {
    Mat<Ring> a = step(s, k);
    if (r < 0 || k + 1 >= slots()) return a;
    Mat<Ring> pre = preimage(ring_, c_.diffs[k], step(s + r, k + 1));
    return howell_form(ring_, intersect(ring_, a, pre));
  }

  // Z_{r-1}^{s+1} + d Z_{r-1}^{s-r+1}.
  Mat<Ring> boundaries(int s, int r, std::size_t k) const {
    const std::size_t g = c_.modules[k].gens;
    Mat<Ring> b = cycles(s + 1, r - 1, k);
    if (k > 0) {
      Mat<Ring> src = cycles(s - r + 1, r - 1, k - 1);
      b = stack(ring_, b, matmul(ring_, src, c_.diffs[k - 1]), g);
    }
    return howell_form(ring_, b);
  }

 private:
  const Ring& ring_;
  const FilteredComplex<Ring>& f_;
  const Complex<Ring>& c_;
  std::vector<std::vector<Mat<Ring>>> steps_;
};

template <class Ring>
Mat<Ring> coefficients_in(const Ring& ring, const Mat<Ring>& basis, const Mat<Ring>& vectors) {
  Mat<Ring> out = Mat<Ring>::zeros(ring, 0, basis.rows());
  for (std::size_t i = 0; i < vectors.rows(); ++i) {
    auto c = solve_row(ring, basis, vectors.row(i));
    if (!c) throw Error(ErrorKind::InexactDivision, "vector outside the page numerator");
    out.append_row(*c);
  }
  return out;
}

}  // namespace

template <class Ring>
std::vector<SSPage<Ring>> spectral_sequence(const Ring& ring, const FilteredComplex<Ring>& f, int r_max,
                                            std::int64_t p) {
  check_filtered(ring, f);
  if (!has_injective_transitions(ring, f))
    throw Error(ErrorKind::NonInjectiveTransitions, "the spectral sequence needs injective transitions");
  if (r_max <= 0) r_max = f.hi - f.lo + 3;
  AmbientFiltration<Ring> amb(ring, f);
  std::vector<SSPage<Ring>> pages;
  for (int R = 2; R <= r_max; ++R) {
    const int r = R - 1;  // exact couple index
    SSPage<Ring> page;
    page.r = R;
    for (int s = f.lo; s <= f.hi; ++s)
      for (std::size_t k = 0; k < amb.slots(); ++k) {
        const int m = amb.degree(k);
        SSEntry<Ring> e;
        e.generators = amb.cycles(s, r, k);
        Mat<Ring> den = amb.boundaries(s, r, k);
        e.module = Presentation<Ring>{e.generators.rows(), preimage(ring, e.generators, den)};
        e.invariants = subquotient_invariants(ring, e.generators, den, p);
        page.entries.emplace(std::make_pair(m + s, -s), std::move(e));
      }
    for (auto& [key, e] : page.entries) {
      const int s = -key.second, m = key.first + key.second;
      auto target = page.entries.find({m + 1 + s + r, -(s + r)});
      if (target == page.entries.end()) continue;
      const std::size_t k = static_cast<std::size_t>(m - amb.degree(0));
      Mat<Ring> image = matmul(ring, e.generators, amb.ambient().diffs[k]);
      page.differentials.emplace(key, coefficients_in(ring, target->second.generators, image));
    }
    pages.push_back(std::move(page));
  }
  return pages;
}

template <class Ring>
bool pages_consistent(const Ring& ring, const std::vector<SSPage<Ring>>& pages, std::int64_t p) {
  for (std::size_t i = 0; i < pages.size(); ++i) {
    const auto& P = pages[i];
    const int R = P.r;
    for (const auto& [key, e] : P.entries) {
      const auto [k, l] = key;
      Complex<Ring> c;
      c.lo = 0;
      const std::pair<int, int> prev{k - R, l + R - 1}, next{k + R, l - R + 1};
      auto pe = P.entries.find(prev);
      auto ne = P.entries.find(next);
      c.modules.push_back(pe != P.entries.end() ? pe->second.module : zero_module(ring));
      c.modules.push_back(e.module);
      c.modules.push_back(ne != P.entries.end() ? ne->second.module : zero_module(ring));
      auto dp = P.differentials.find(prev);
      auto dn = P.differentials.find(key);
      c.diffs.push_back(dp != P.differentials.end() ? dp->second
                                                    : Mat<Ring>::zeros(ring, c.modules[0].gens, e.module.gens));
      c.diffs.push_back(dn != P.differentials.end() ? dn->second
                                                    : Mat<Ring>::zeros(ring, e.module.gens, c.modules[2].gens));
      InvariantFactors h;
      try {
        h = homology(ring, c, 1, p);
      } catch (const Error&) {
        return false;
      }
      if (i + 1 < pages.size() && !(pages[i + 1].at(k, l, p) == h)) return false;
    }
  }
  return true;
}

template <class Ring>
Presentation<Ring> presentation_of(const Ring& ring, const InvariantFactors& inv) {
  const std::size_t n = inv.torsion.size() + static_cast<std::size_t>(inv.free_rank);
  Presentation<Ring> m{n, Mat<Ring>::zeros(ring, 0, n)};
  for (std::size_t i = 0; i < inv.torsion.size(); ++i) {
    std::vector<typename Ring::Elem> row(n, ring.zero());
    typename Ring::Elem q = ring.one();
    for (int e = 0; e < inv.torsion[i]; ++e) q = ring.mul(q, ring.from_int(inv.p));
    row[i] = q;
    m.relations.append_row(row);
  }
  return m;
}

template <class Ring>
std::vector<ShortExact> two_column_extract(const Ring& ring, const std::vector<SSPage<Ring>>& pages,
                                           std::int64_t p) {
  if (pages.empty()) return {};
  std::vector<std::pair<int, int>> support;
  for (const auto& [key, e] : pages.front().entries)
    if (!e.invariants.is_zero()) support.push_back(key);
  auto spread = [&](bool columns) {
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [k, l] : support) {
      const int v = columns ? k : l;
      lo = first ? v : std::min(lo, v);
      hi = first ? v : std::max(hi, v);
      first = false;
    }
    return hi - lo;
  };
  if (!support.empty() && spread(true) > 1 && spread(false) > 1)
    throw Error(ErrorKind::DegenerationFailed, "E_2 is not supported in two adjacent columns or rows");
  for (const auto& page : pages)
    for (const auto& [key, d] : page.differentials) {
      const auto [k, l] = key;
      auto target = page.entries.find({k + page.r, l - page.r + 1});
      if (target != page.entries.end() && !map_is_zero(ring, d, target->second.module))
        throw Error(ErrorKind::DegenerationFailed,
                    "d_" + std::to_string(page.r) + " is nonzero at (" + std::to_string(k) + ", " + std::to_string(l) + ")");
    }
  std::map<int, std::vector<std::pair<int, InvariantFactors>>> by_degree;  // degree -> (l, group)
  for (const auto& [k, l] : support) by_degree[k + l].push_back({l, pages.front().at(k, l, p)});
  std::vector<ShortExact> out;
  for (auto& [m, items] : by_degree) {
    if (items.size() > 2)
      throw Error(ErrorKind::DegenerationFailed, "more than two terms in degree " + std::to_string(m));
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ShortExact se;
    se.degree = m;
    se.left.p = se.right.p = p;
    // Smaller l means a deeper filtration step, which is the subobject.
    if (items.size() == 2) {
      se.left = items[0].second;
      se.right = items[1].second;
    } else {
      se.right = items[0].second;
    }
    if (se.left.free_rank > 0 || se.right.free_rank > 0)
      se.middle_log_order = -1;  // infinite
    else
      se.middle_log_order = se.left.log_order() + se.right.log_order();
    out.push_back(se);
  }
  return out;
}

namespace {

using MapKey = std::vector<std::int64_t>;

bool same_span(const ModRing& ring, const Mat<ModRing>& a, const Mat<ModRing>& b, std::size_t cols) {
  const Mat<ModRing> z = Mat<ModRing>::zeros(ring, 0, cols);
  const Mat<ModRing> aa = stack(ring, z, a, cols), bb = stack(ring, z, b, cols);
  return (bb.rows() == 0 || contains(ring, aa, bb)) && (aa.rows() == 0 || contains(ring, bb, aa));
}

// All chain maps a -> b that also send the rows of kill[k] to zero, with
// each row reduced modulo the relations of b.
std::vector<MapKey> enumerate_chain_maps(const ModRing& ring, const Complex<ModRing>& a, const Complex<ModRing>& b,
                                         const std::vector<Mat<ModRing>>& kill, long budget) {
  const std::size_t D = a.modules.size();
  if (b.modules.size() != D || a.lo != b.lo)
    throw Error(ErrorKind::InvalidArgument, "chain maps need matching degree ranges");
  std::vector<std::size_t> offset(D + 1, 0);
  for (std::size_t k = 0; k < D; ++k) offset[k + 1] = offset[k] + a.modules[k].gens * b.modules[k].gens;
  const std::size_t total = offset[D];
  double candidates = 1;
  for (std::size_t i = 0; i < total; ++i) candidates *= static_cast<double>(ring.mod);
  if (candidates > static_cast<double>(budget))
    throw Error(ErrorKind::HomSetTooLarge, "hom-set enumeration exceeds the budget");
  std::vector<Mat<ModRing>> howell;
  for (const auto& m : b.modules) howell.push_back(howell_form(ring, stack(ring, Mat<ModRing>::zeros(ring, 0, m.gens), m.relations, m.gens)));
  auto slot = [&](const MapKey& key, std::size_t k) {
    Mat<ModRing> m = Mat<ModRing>::zeros(ring, a.modules[k].gens, b.modules[k].gens);
    std::size_t i = offset[k];
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = key[i++];
    return m;
  };
  auto vanishes = [&](const Mat<ModRing>& rows, std::size_t k) {
    for (std::size_t r = 0; r < rows.rows(); ++r)
      if (!in_row_module(ring, howell[k], rows.row(r))) return false;
    return true;
  };
  std::vector<MapKey> out;
  MapKey key(total, 0);
  while (true) {
    bool ok = true;
    std::vector<Mat<ModRing>> maps;
    for (std::size_t k = 0; k < D && ok; ++k) {
      maps.push_back(slot(key, k));
      const Mat<ModRing>& m = maps.back();
      for (std::size_t r = 0; r < m.rows() && ok; ++r) ok = reduce_row(ring, howell[k], m.row(r)) == m.row(r);
      if (ok && a.modules[k].relations.rows() > 0) ok = vanishes(matmul(ring, a.modules[k].relations, m), k);
      if (ok && k < kill.size() && kill[k].rows() > 0) ok = vanishes(matmul(ring, kill[k], m), k);
    }
    for (std::size_t k = 0; k + 1 < D && ok; ++k) {
      Mat<ModRing> lhs = matmul(ring, a.diffs[k], maps[k + 1]);
      Mat<ModRing> rhs = matmul(ring, maps[k], b.diffs[k]);
      ok = vanishes(matadd(ring, lhs, matscale(ring, ring.neg(ring.one()), rhs)), k + 1);
    }
    if (ok) out.push_back(key);
    std::size_t i = 0;
    while (i < total && ++key[i] == ring.mod) key[i++] = 0;
    if (i == total) break;
  }
  return out;
}

}  // namespace

long count_chain_maps(const ModRing& ring, const Complex<ModRing>& a, const Complex<ModRing>& b, long budget) {
  return static_cast<long>(enumerate_chain_maps(ring, a, b, {}, budget).size());
}

bool adjunction_check(const ModRing& ring, const FilteredComplex<ModRing>& f, const GradedComplex<ModRing>& x,
                      std::int64_t p, long budget) {
  (void)p;
  if (x.lo != f.lo || x.hi() != f.hi) throw Error(ErrorKind::InvalidArgument, "graded complex must share the window");
  const GradedComplex<ModRing> g = gr(ring, f, GrMode::Strict);
  for (int n = f.lo; n <= f.hi; ++n) {
    const auto j = static_cast<std::size_t>(n - f.lo);
    // Hom(gr^n F, X^n) against {F^{>=n} -> X^n killing F^{>=n+1}}; the
    // bijection composes with the quotient, whose matrix is the identity.
    std::vector<MapKey> left = enumerate_chain_maps(ring, g.pieces[j], x.pieces[j], {}, budget);
    std::vector<Mat<ModRing>> kill;
    if (n < f.hi) kill = f.transitions[j];
    std::vector<MapKey> right = enumerate_chain_maps(ring, f.levels[j], x.pieces[j], kill, budget);
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (left != right) return false;
    // Unit: the quotient F^{>=n} -> gr^n F kills the next level.
    for (std::size_t k = 0; k < f.levels[j].modules.size(); ++k) {
      const auto& rel = g.pieces[j].modules[k].relations;
      const std::size_t cols = g.pieces[j].modules[k].gens;
      const Mat<ModRing> h = stack(ring, Mat<ModRing>::zeros(ring, 0, cols), rel, cols);
      if (f.levels[j].modules[k].relations.rows() > 0 && !contains(ring, h, f.levels[j].modules[k].relations))
        return false;
      if (n < f.hi && f.transitions[j][k].rows() > 0 && !contains(ring, h, f.transitions[j][k])) return false;
    }
  }
  // Counit gr t X -> X and the unit of t X are identities.
  const GradedComplex<ModRing> gtx = gr(ring, t_embed(ring, x), GrMode::Cokernel);
  const GradedComplex<ModRing> gtg = gr(ring, t_embed(ring, g), GrMode::Cokernel);
  for (std::size_t j = 0; j < x.pieces.size(); ++j)
    for (std::size_t k = 0; k < x.pieces[j].modules.size(); ++k) {
      const std::size_t cx = x.pieces[j].modules[k].gens, cg = g.pieces[j].modules[k].gens;
      if (!same_span(ring, gtx.pieces[j].modules[k].relations, x.pieces[j].modules[k].relations, cx)) return false;
      if (!same_span(ring, gtg.pieces[j].modules[k].relations, g.pieces[j].modules[k].relations, cg)) return false;
    }
  return true;
}

#define DRW_FILTSPEC_INSTANTIATE(R)                                                                          \
  template void check_filtered(const R&, const FilteredComplex<R>&);                                         \
  template bool has_injective_transitions(const R&, const FilteredComplex<R>&);                              \
  template GradedComplex<R> gr(const R&, const FilteredComplex<R>&, GrMode);                                 \
  template FilteredComplex<R> t_embed(const R&, const GradedComplex<R>&);                                    \
  template FilteredComplex<R> c_embed(const R&, const Complex<R>&, int, int);                                \
  template struct SSPage<R>;                                                                                 \
  template std::vector<SSPage<R>> spectral_sequence(const R&, const FilteredComplex<R>&, int, std::int64_t); \
  template bool pages_consistent(const R&, const std::vector<SSPage<R>>&, std::int64_t);                     \
  template Presentation<R> presentation_of(const R&, const InvariantFactors&);                               \
  template std::vector<ShortExact> two_column_extract(const R&, const std::vector<SSPage<R>>&, std::int64_t);

DRW_FILTSPEC_INSTANTIATE(ModRing)
DRW_FILTSPEC_INSTANTIATE(IntRing)

#undef DRW_FILTSPEC_INSTANTIATE

}  // namespace drw
