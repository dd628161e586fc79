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

#include "drwitt/synlog.hpp"

#include <algorithm>
#include <bit>

#include "drwitt/error.hpp"

namespace drw {

namespace {

const IntRing kZ;

Int p_power(std::int64_t p, int e) {
  Int out = 1;
  for (int k = 0; k < e; ++k) out *= static_cast<long>(p);
  return out;
}

Grade times_p_power(const Grade& a, std::int64_t p, int k) {
  if (k >= 0) return scale_grade(a, Rat(p_power(p, k)));
  return scale_grade(a, Rat(Int(1), p_power(p, -k)));
}

bool is_zero_grade(const Grade& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return sgn(x) == 0; });
}

// Matrices over Z lifted to W(F_q) = Z_p^f and reduced mod p^r.
ModMat coeff_identity(const ModRing& ring, const IntMat& m, int f) {
  return to_mod(ring, kron(m, lattice_identity(static_cast<std::size_t>(f))));
}

ModMat coeff_frobenius(const ModRing& ring, const IntMat& m, int f) {
  return to_mod(ring, kron(m, cyclic_shift(static_cast<std::size_t>(f))));
}

void place(const ModRing& ring, ModMat& dst, std::size_t r0, std::size_t c0, const ModMat& src, bool negate) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) {
      auto v = negate ? ring.neg(src(i, j)) : src(i, j);
      dst(r0 + i, c0 + j) = ring.add(dst(r0 + i, c0 + j), v);
    }
}

struct Block {
  bool source = true;  // N^n (true) or W^{n-1} (false)
  int k = 0;
  std::size_t offset = 0;
  std::size_t size = 0;
};

// The fiber complex of one Frobenius orbit over the window k in [lo, hi]
// for sources and [lo, hi + 1] for targets (orbit 0 has a single grade).
struct OrbitFiber {
  std::vector<std::vector<Block>> blocks;  // per fiber degree
  std::vector<std::size_t> gens;
  std::vector<ModMat> d;  // d[n] : Fib^n -> Fib^{n+1}
};

class OrbitBuilder {
 public:
  OrbitBuilder(const RingSpec& s, int i, const ModRing& ring, const Grade& rep)
      : s_(s), i_(i), ring_(ring), rep_(rep), fixed_(is_zero_grade(rep)), top_(dieudonne_top(s)) {}

  Grade grade(int k) const { return fixed_ ? rep_ : times_p_power(rep_, s_.p, k); }

  const NygaardPiece& piece(int k, int n) {
    auto key = std::make_pair(k, n);
    auto it = pieces_.find(key);
    if (it == pieces_.end()) it = pieces_.emplace(key, nygaard_piece(s_, grade(k), n, i_)).first;
    return it->second;
  }

  std::size_t sat_rank(int k, int n) {
    if (n < 0 || n > top_) return 0;
    return dlog_subsets(s_, grade(k), n).size() * static_cast<std::size_t>(s_.f);
  }

  std::size_t nyg_rank(int k, int n) {
    if (n < 0 || n > top_) return 0;
    return piece(k, n).lattice.rows() * static_cast<std::size_t>(s_.f);
  }

  OrbitFiber build(int lo, int hi) {
    if (fixed_) lo = hi = 0;
    const int target_hi = fixed_ ? 0 : hi + 1;
    OrbitFiber fib;
    for (int n = 0; n <= top_ + 1; ++n) {
      std::vector<Block> bl;
      std::size_t off = 0;
      for (int k = lo; k <= hi; ++k) {
        bl.push_back(Block{true, k, off, nyg_rank(k, n)});
        off += bl.back().size;
      }
      for (int k = lo; k <= target_hi; ++k) {
        bl.push_back(Block{false, k, off, sat_rank(k, n - 1)});
        off += bl.back().size;
      }
      fib.blocks.push_back(bl);
      fib.gens.push_back(off);
    }
    const int f = s_.f;
    for (int n = 0; n <= top_; ++n) {
      ModMat D = ModMat::zeros(ring_, fib.gens[n], fib.gens[n + 1]);
      auto find = [&](int deg, bool source, int k) -> const Block* {
        for (const auto& b : fib.blocks[static_cast<std::size_t>(deg)])
          if (b.source == source && b.k == k) return &b;
        return nullptr;
      };
      for (const auto& b : fib.blocks[static_cast<std::size_t>(n)]) {
        if (b.size == 0) continue;
        if (b.source) {
          const NygaardPiece& P = piece(b.k, n);
          if (n < top_) {
            const Block* t = find(n + 1, true, b.k);
            if (t && t->size)
              place(ring_, D, b.offset, t->offset, coeff_identity(ring_, nygaard_differential(s_, grade(b.k), n, i_), f), false);
          }
          const Block* can = find(n + 1, false, b.k);
          if (can && can->size) place(ring_, D, b.offset, can->offset, coeff_identity(ring_, P.inclusion, f), true);
          const Block* phi = find(n + 1, false, fixed_ ? b.k : b.k + 1);
          if (phi && phi->size) place(ring_, D, b.offset, phi->offset, coeff_frobenius(ring_, P.divided_frobenius, f), false);
        } else {
          const Block* t = find(n + 1, false, b.k);
          if (t && t->size)
            place(ring_, D, b.offset, t->offset, coeff_identity(ring_, saturated_differential(s_, grade(b.k), n - 1), f), true);
        }
      }
      fib.d.push_back(D);
    }
    return fib;
  }

  bool fixed() const { return fixed_; }

 private:
  RingSpec s_;
  int i_;
  ModRing ring_;
  Grade rep_;
  bool fixed_;
  int top_;
  std::map<std::pair<int, int>, NygaardPiece> pieces_;
};

// Image of H^n of the sub-window (sources k <= K, targets k <= K + 1) in H^n of `fib`.
InvariantFactors window_image(const ModRing& ring, const OrbitFiber& fib, int n, int K, bool fixed) {
  const auto nn = static_cast<std::size_t>(n);
  std::vector<std::size_t> keep;
  for (const auto& b : fib.blocks[nn])
    if (fixed || b.k <= (b.source ? K : K + 1))
      for (std::size_t j = 0; j < b.size; ++j) keep.push_back(b.offset + j);
  const std::size_t g = fib.gens[nn];
  ModMat cycles_local;
  if (nn < fib.d.size()) {
    ModMat sub = ModMat::zeros(ring, keep.size(), fib.gens[nn + 1]);
    for (std::size_t r = 0; r < keep.size(); ++r)
      for (std::size_t c = 0; c < sub.cols(); ++c) sub(r, c) = fib.d[nn](keep[r], c);
    cycles_local = sub.cols() == 0 ? ModMat::identity(ring, keep.size())
                                   : preimage(ring, sub, ModMat::zeros(ring, 0, sub.cols()));
  } else {
    cycles_local = ModMat::identity(ring, keep.size());
  }
  ModMat cycles = ModMat::zeros(ring, cycles_local.rows(), g);
  for (std::size_t r = 0; r < cycles_local.rows(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) cycles(r, keep[c]) = cycles_local(r, c);
  ModMat bnd = n > 0 ? fib.d[nn - 1] : ModMat::zeros(ring, 0, g);
  if (cycles.rows() == 0 || g == 0) {
    InvariantFactors z;
    z.p = ring.p;
    return z;
  }
  return subquotient_invariants(ring, cycles, bnd, ring.p);
}

int orbit_last_index(const RingSpec& s, const Grade& rep, long cap) {
  int K = 0;
  while (grade_weight(s, times_p_power(rep, s.p, K + 1)) <= cap) ++K;
  return K;
}

// Image of H(W_K) in H(W_{K+1+extra}), with K raised from the cap index
// until W_K and W_{K+1} give the same image.
std::vector<InvariantFactors> orbit_cohomology(OrbitBuilder& builder, const ModRing& ring, const RingSpec& s,
                                               const Grade& rep, long cap, const SyntomicOptions& opt, int top) {
  auto images = [&](const OrbitFiber& fib, int K) {
    std::vector<InvariantFactors> h;
    for (int n = 0; n <= top; ++n) h.push_back(window_image(ring, fib, n, K, builder.fixed()));
    return h;
  };
  if (builder.fixed()) return images(builder.build(0, 0), 0);
  int K = orbit_last_index(s, rep, cap);
  for (int step = 0; step < 16; ++step, ++K) {
    OrbitFiber fib = builder.build(-opt.depth, K + 1 + opt.extra);
    auto here = images(fib, K);
    if (here == images(fib, K + 1)) return here;
  }
  throw Error(ErrorKind::PrecisionExhausted, "orbit cohomology did not stabilize at " + grade_to_string(rep));
}

}  // namespace

NygaardPiece nygaard_piece(const RingSpec& s, const Grade& a, int n, int i) {
  NygaardPiece P;
  P.grade = a;
  P.degree = n;
  const Grade pa = scale_grade(a, Rat(static_cast<long>(s.p)));
  const IntMat sat_a = saturated_lattice(s, a, n);
  const IntMat sat_pa = saturated_lattice(s, pa, n);
  if (n < i) {
    P.parameter_grade = pa;
    P.parameter = sat_pa;
    P.lattice = matscale(kZ, p_power(s.p, i - n), sat_pa);
    P.divided_frobenius = lattice_coordinates(sat_pa, P.parameter);
  } else {
    P.parameter_grade = a;
    P.parameter = sat_a;
    P.lattice = sat_a;
    P.divided_frobenius = lattice_coordinates(sat_pa, matscale(kZ, p_power(s.p, n - i), sat_a));
  }
  P.inclusion = lattice_coordinates(sat_a, P.lattice);
  return P;
}

IntMat nygaard_differential(const RingSpec& s, const Grade& a, int n, int i) {
  return restricted_matrix(nygaard_piece(s, a, n, i).lattice, dlog_differential(s, a, n),
                           nygaard_piece(s, a, n + 1, i).lattice);
}

NygaardModel nygaard(const RingSpec& s, int i, long weight_cap, int denominator_exp) {
  NygaardModel M;
  M.spec = s;
  M.i = i;
  M.weight_cap = weight_cap;
  for (const auto& a : dieudonne_grades(s, weight_cap, denominator_exp)) {
    std::vector<NygaardPiece> row;
    for (int n = 0; n <= dieudonne_top(s); ++n) row.push_back(nygaard_piece(s, a, n, i));
    M.pieces.emplace(a, std::move(row));
  }
  return M;
}

std::vector<Grade> orbit_representatives(const RingSpec& s, long weight_cap) {
  std::vector<Grade> out;
  for (const auto& a : dieudonne_grades(s, weight_cap, 0)) {
    bool all_divisible = true;
    for (const auto& x : a)
      if (sgn(x) != 0 && valuation(x, s.p) == 0) all_divisible = false;
    if (is_zero_grade(a) || !all_divisible) out.push_back(a);
  }
  return out;
}

InvariantFactors SyntomicComplex::cohomology(int n) const {
  if (n < 0 || n >= static_cast<int>(total.size())) {
    InvariantFactors z;
    z.p = spec.p;
    return z;
  }
  return total[static_cast<std::size_t>(n)];
}

SyntomicComplex syntomic(const RingSpec& s, int i, int r, long weight_cap, SyntomicOptions opt) {
  if (i < 0 || r < 1) throw Error(ErrorKind::InvalidArgument, "twist must be >= 0 and level >= 1");
  SyntomicComplex out;
  out.spec = s;
  out.i = i;
  out.r = r;
  out.weight_cap = weight_cap;
  if (opt.extra < 0) opt.extra = r + static_cast<int>(s.nvars()) + 2;
  out.options = opt;
  out.top = dieudonne_top(s) + 1;
  const ModRing ring(s.p, r);
  out.total.assign(static_cast<std::size_t>(out.top) + 1, InvariantFactors{s.p, {}, 0});
  for (const auto& rep : orbit_representatives(s, weight_cap)) {
    OrbitBuilder builder(s, i, ring, rep);
    OrbitCohomology oc;
    oc.representative = rep;
    oc.h = orbit_cohomology(builder, ring, s, rep, weight_cap, opt, out.top);
    for (int n = 0; n <= out.top; ++n)
      out.total[static_cast<std::size_t>(n)] = direct_sum(out.total[static_cast<std::size_t>(n)], oc.h[static_cast<std::size_t>(n)]);
    out.orbits.push_back(std::move(oc));
  }
  return out;
}

namespace {

std::string unit_name(const RingSpec& s, const Exponent& k) {
  std::string out;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += s.vars[j] + (k[j] == 1 ? "" : "^" + std::to_string(k[j]));
  }
  return out.empty() ? "c" : out;
}

DlogForm dlog_of_unit(std::size_t nvars, const Exponent& k) {
  DlogForm w;
  const Grade zero(nvars, Rat(0));
  for (std::size_t j = 0; j < nvars; ++j)
    if (k[j] != 0) w[DlogKey{zero, 1u << j}] = Rat(k[j]);
  return w;
}

}  // namespace

LogLattice log_lattice(const RingSpec& s, int i, int r, long symbol_budget) {
  LogLattice L;
  L.spec = s;
  L.i = i;
  L.r = r;
  const ModRing ring(s.p, r);
  const int top = dieudonne_top(s);
  const Grade zero(s.nvars(), Rat(0));
  L.invariants.p = s.p;
  const auto subsets = dlog_subsets(s, zero, i);
  const std::size_t f = static_cast<std::size_t>(s.f);
  L.basis = ModMat::zeros(ring, 0, subsets.size() * f);
  if (i < 0 || i > top || subsets.empty()) return L;
  const IntMat sat = saturated_lattice(s, zero, i);
  // Units: a constant and x^k with k in {-1, 0, 1}^n for laurent kinds.
  std::vector<Exponent> units{Exponent(s.nvars(), 0)};
  if (s.kind == RingKind::Laurent) {
    units.clear();
    Exponent k(s.nvars(), -1);
    for (;;) {
      units.push_back(k);
      std::size_t j = 0;
      while (j < k.size() && k[j] == 1) k[j++] = -1;
      if (j == k.size()) break;
      ++k[j];
    }
  }
  long count = 1;
  for (int t = 0; t < i; ++t) {
    count *= static_cast<long>(units.size());
    if (count > symbol_budget) throw Error(ErrorKind::UnitEnumerationCap, "too many dlog symbols");
  }
  IntMat rows = IntMat::zeros(kZ, 0, subsets.size());
  std::vector<std::size_t> pick(static_cast<std::size_t>(i), 0);
  for (long c = 0; c < count; ++c) {
    DlogForm w{{DlogKey{zero, 0}, Rat(1)}};
    std::string name;
    long rest = c;
    for (int t = 0; t < i; ++t) {
      const auto& u = units[static_cast<std::size_t>(rest % static_cast<long>(units.size()))];
      rest /= static_cast<long>(units.size());
      w = dlog_wedge(w, dlog_of_unit(s.nvars(), u));
      name += (t ? " ^ " : "") + std::string("dlog[") + unit_name(s, u) + "]";
    }
    if (w.empty()) continue;
    std::vector<Int> v(subsets.size(), 0);
    for (const auto& [key, coeff] : w) {
      auto it = std::find(subsets.begin(), subsets.end(), key.J);
      v[static_cast<std::size_t>(it - subsets.begin())] = coeff.get_num();
    }
    IntMat one = IntMat::zeros(kZ, 0, subsets.size());
    one.append_row(v);
    IntMat coords = lattice_coordinates(sat, one);
    // The symbol lives in the W(F_p) part: coefficient 1 = (1, ..., 1) in the normal basis.
    IntMat ones = IntMat::zeros(kZ, 1, f);
    for (std::size_t k = 0; k < f; ++k) ones(0, k) = 1;
    rows.append_rows(kron(coords, ones));
    L.symbols.push_back(i == 0 ? "1" : name);
  }
  if (rows.rows() == 0) return L;
  L.basis = howell_form(ring, to_mod(ring, rows));
  L.invariants = subquotient_invariants(ring, L.basis, ModMat::zeros(ring, 0, L.basis.cols()), s.p);
  return L;
}

FundamentalSeqReport verify_fundamental_seq(const RingSpec& s, int i, int r, long weight_cap, SyntomicOptions opt) {
  FundamentalSeqReport rep;
  rep.i = i;
  rep.r = r;
  SyntomicComplex syn = syntomic(s, i, r, weight_cap, opt);
  opt = syn.options;
  const ModRing ring(s.p, r);
  const int top = dieudonne_top(s);
  LogLattice log = log_lattice(s, i, r);
  rep.log = log.invariants;
  rep.h_i = syn.cohomology(i);
  rep.h_i_plus_1 = syn.cohomology(i + 1);
  for (int n = 0; n <= syn.top; ++n)
    if (n != i && n != i + 1 && !syn.cohomology(n).is_zero()) rep.nonzero_off_degrees.push_back(n);
  std::vector<bool> good(static_cast<std::size_t>(top) + 1, true);
  for (const auto& orbit : syn.orbits) {
    OrbitBuilder builder(s, i, ring, orbit.representative);
    const int K = builder.fixed() ? 0 : orbit_last_index(s, orbit.representative, weight_cap);
    const int lo = builder.fixed() ? 0 : -opt.depth, hi = builder.fixed() ? 0 : K + opt.extra;
    OrbitFiber fib = builder.build(lo, hi);
    for (int n = 0; n <= top; ++n) {
      if (n == i) continue;
      const auto nn = static_cast<std::size_t>(n);
      std::vector<std::size_t> rws, cls;
      for (const auto& b : fib.blocks[nn])
        if (b.source)
          for (std::size_t j = 0; j < b.size; ++j) rws.push_back(b.offset + j);
      for (const auto& b : fib.blocks[nn + 1]) {
        if (b.source) continue;
        bool take = builder.fixed() || (n > i ? b.k <= hi : b.k >= lo + 1);
        if (take)
          for (std::size_t j = 0; j < b.size; ++j) cls.push_back(b.offset + j);
      }
      bool ok = rws.size() == cls.size();
      if (ok && !rws.empty()) {
        ModMat T = ModMat::zeros(ring, rws.size(), cls.size());
        for (std::size_t a = 0; a < rws.size(); ++a)
          for (std::size_t b = 0; b < cls.size(); ++b) T(a, b) = fib.d[nn](rws[a], cls[b]);
        ok = cokernel_invariants(ring, T, cls.size(), s.p).is_zero();
      }
      if (!ok) good[nn] = false;
    }
    if (builder.fixed() && i <= top && log.basis.rows() > 0) {
      // Each log symbol, placed in N^i = W Omega^i at grade 0, must be a fiber cycle.
      const auto ii = static_cast<std::size_t>(i);
      std::size_t off = 0;
      for (const auto& b : fib.blocks[ii])
        if (b.source) off = b.offset;
      for (std::size_t row = 0; row < log.basis.rows(); ++row) {
        std::vector<std::int64_t> v(fib.gens[ii], 0);
        for (std::size_t c = 0; c < log.basis.cols(); ++c) v[off + c] = log.basis(row, c);
        if (ii < fib.d.size())
          for (std::size_t c = 0; c < fib.gens[ii + 1]; ++c) {
            std::int64_t acc = 0;
            for (std::size_t k = 0; k < v.size(); ++k) acc = ring.add(acc, ring.mul(v[k], fib.d[ii](k, c)));
            if (acc != 0) rep.symbols_are_cycles = false;
          }
      }
    }
  }
  for (int n = 0; n <= top; ++n) {
    if (n == i) continue;
    (good[static_cast<std::size_t>(n)] ? rep.certified_degrees : rep.failed_degrees).push_back(n);
  }
  if (rep.h_i == rep.log) {
    rep.verdict = "EQUAL";
  } else if (rep.h_i.log_order() > rep.log.log_order()) {
    rep.verdict = "CONTAINS";
    rep.index_exponent = rep.h_i.log_order() - rep.log.log_order();
  } else {
    rep.verdict = "DIFFERENT";
  }
  rep.ok = rep.failed_degrees.empty() && rep.nonzero_off_degrees.empty() && rep.symbols_are_cycles;
  return rep;
}

NygaardGradedReport nygaard_graded_check(const RingSpec& s, int i, long weight_cap) {
  NygaardGradedReport rep;
  const int top = dieudonne_top(s);
  const int upto = std::min(i, top);
  auto graded = [&](const Grade& a) {
    Complex<IntRing> c;
    for (int n = 0; n <= top; ++n) {
      NygaardPiece hi = nygaard_piece(s, a, n, i), lo = nygaard_piece(s, a, n, i + 1);
      Presentation<IntRing> m{hi.lattice.rows(), lattice_coordinates(hi.lattice, lo.lattice)};
      if (m.gens == 0) m.relations = IntMat::zeros(kZ, 0, 0);
      c.modules.push_back(m);
      if (n < top) c.diffs.push_back(nygaard_differential(s, a, n, i));
    }
    std::vector<InvariantFactors> h;
    for (int n = 0; n <= top; ++n) h.push_back(tensor_coefficients(homology(kZ, c, n, s.p), s.f));
    return h;
  };
  DeRhamComplex dr = kaehler(s, upto, weight_cap);
  for (const auto& [b, gc] : dr.grades) {
    auto h = graded(scale_grade(b, Rat(1, static_cast<unsigned long>(s.p))));
    for (int n = 0; n <= top; ++n) {
      NygaardGradedEntry e;
      e.grade = b;
      e.degree = n;
      e.graded = h[static_cast<std::size_t>(n)];
      e.truncated.p = s.p;
      if (n <= upto) e.truncated = homology(dr.field, gc.as_complex(), n, s.p);
      rep.ok = rep.ok && e.graded == e.truncated;
      rep.entries.push_back(std::move(e));
    }
  }
  for (const auto& a : dieudonne_grades(s, weight_cap, 2)) {
    if (denominator_exponent(a, s.p) != 2) continue;
    for (const auto& x : graded(a)) rep.ok = rep.ok && x.is_zero();
  }
  return rep;
}

bool nygaard_completeness_check(const RingSpec& s, int i_cap, long weight_cap) {
  const int top = dieudonne_top(s);
  const int guard = top + 1;
  for (const auto& a : dieudonne_grades(s, weight_cap, 1))
    for (int n = 0; n <= top; ++n) {
      for (int i = 0; i < i_cap; ++i)
        if (!lattice_contains(nygaard_piece(s, a, n, i).lattice, nygaard_piece(s, a, n, i + 1).lattice)) return false;
      IntMat bound = lattice_scale(saturated_lattice(s, a, n), p_power(s.p, std::max(0, i_cap - guard)));
      if (!lattice_contains(bound, nygaard_piece(s, a, n, i_cap).lattice)) return false;
    }
  return true;
}

bool log_mod_compat(const RingSpec& s, int i, int r) {
  LogLattice hi = log_lattice(s, i, r + 1), lo = log_lattice(s, i, r);
  const ModRing ring(s.p, r);
  ModMat reduced = ModMat::zeros(ring, hi.basis.rows(), hi.basis.cols());
  for (std::size_t a = 0; a < hi.basis.rows(); ++a)
    for (std::size_t b = 0; b < hi.basis.cols(); ++b) reduced(a, b) = ring.from_int(hi.basis(a, b));
  return howell_form(ring, reduced) == howell_form(ring, lo.basis);
}

}  // namespace drw
