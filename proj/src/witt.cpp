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

#include "drwitt/witt.hpp"

#include <map>
#include <mutex>

namespace drw {

namespace {

Int int_pow(std::int64_t p, int k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return r;
}

long lpow(std::int64_t p, int k) { return static_cast<long>(ipow(p, k)); }

ZPoly ghost_z(std::int64_t p, int m, std::size_t nvars, std::size_t offset) {
  ZPoly w(nvars);
  for (int i = 0; i <= m; ++i)
    w += power(ZPoly::variable(nvars, offset + i), lpow(p, m - i)).scaled(int_pow(p, i));
  return w;
}

ZPoly divide_exact(const ZPoly& f, const Int& d) {
  ZPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw Error(ErrorKind::InexactDivision, "universal Witt law has a non-integral coefficient");
    r.add_term(e, c / d);
  }
  return r;
}

// Solves w_k(Z) = target_k for Z_0..Z_depth given the targets.
std::vector<ZPoly> solve_ghost_polys(std::int64_t p, const std::vector<ZPoly>& targets) {
  std::vector<ZPoly> z;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    ZPoly s = targets[k];
    for (std::size_t i = 0; i < k; ++i)
      s -= power(z[i], lpow(p, static_cast<int>(k - i))).scaled(int_pow(p, static_cast<int>(i)));
    z.push_back(divide_exact(s, int_pow(p, static_cast<int>(k))));
  }
  return z;
}

std::shared_ptr<const UniversalWittLaw> build_law(std::int64_t p, int n) {
  auto law = std::make_shared<UniversalWittLaw>();
  law->p = p;
  law->depth = n;
  const std::size_t nv = static_cast<std::size_t>(2 * n + 2);
  const std::size_t yo = static_cast<std::size_t>(n + 1);
  std::vector<ZPoly> sum, prod, neg, frob;
  for (int k = 0; k <= n; ++k) {
    ZPoly wx = ghost_z(p, k, nv, 0), wy = ghost_z(p, k, nv, yo);
    sum.push_back(wx + wy);
    prod.push_back(wx * wy);
    neg.push_back(-wx);
    if (k < n) frob.push_back(ghost_z(p, k + 1, nv, 0));
  }
  law->add = solve_ghost_polys(p, sum);
  law->mul = solve_ghost_polys(p, prod);
  law->neg = solve_ghost_polys(p, neg);
  law->frob = solve_ghost_polys(p, frob);
  return law;
}

// Evaluates an integral polynomial at ring elements, memoizing powers.
CoeffRing::Elem eval_poly(const CoeffRing& A, const ZPoly& f, const std::vector<CoeffRing::Elem>& vals) {
  std::map<std::pair<std::size_t, int>, CoeffRing::Elem> powers;
  auto pw = [&](std::size_t v, int e) -> const CoeffRing::Elem& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, A.pow(vals[v], e)).first->second;
  };
  CoeffRing::Elem acc = A.zero();
  for (const auto& [e, c] : f.terms()) {
    CoeffRing::Elem m = A.from_int(c);
    for (std::size_t v = 0; v < e.size() && !A.is_zero(m); ++v)
      if (e[v] > 0) m = A.mul(m, pw(v, e[v]));
    acc = A.add(acc, m);
  }
  return acc;
}

void check_lengths(const WittVector& a, const WittVector& b) {
  if (a.length() != b.length())
    throw Error(ErrorKind::LengthMismatch, "Witt vectors of lengths " + std::to_string(a.length()) + " and " +
                                               std::to_string(b.length()));
}

// Ring in which ghost components are computed: the ring itself when
// torsion-free, otherwise a lift with coefficients mod p^r.
bool ghost_route(const CoeffRing& A) { return A.torsion_free() || A.char_p(); }

CoeffRing ghost_ring(const CoeffRing& A, std::size_t r) {
  return A.torsion_free() ? A : A.with_precision(static_cast<int>(std::max<std::size_t>(r, 1)));
}

std::vector<CoeffRing::Elem> ghost_in(const CoeffRing& L, const WittVector& a) {
  std::vector<CoeffRing::Elem> w;
  for (std::size_t m = 0; m < a.length(); ++m) {
    CoeffRing::Elem s = L.zero();
    for (std::size_t i = 0; i <= m; ++i)
      s = L.add(s, L.scale(int_pow(L.p(), static_cast<int>(i)),
                           L.pow(a.comps[i], lpow(L.p(), static_cast<int>(m - i)))));
    w.push_back(s);
  }
  return w;
}

WittVector from_ghost(const CoeffRing& A, const CoeffRing& L, const std::vector<CoeffRing::Elem>& w) {
  WittVector out;
  for (std::size_t n = 0; n < w.size(); ++n) {
    CoeffRing::Elem s = w[n];
    for (std::size_t i = 0; i < n; ++i)
      s = L.sub(s, L.scale(int_pow(L.p(), static_cast<int>(i)),
                           L.pow(out.comps[i], lpow(L.p(), static_cast<int>(n - i)))));
    out.comps.push_back(A.reduce(L.divide_p_power(s, static_cast<int>(n))));
  }
  return out;
}

template <class Op>
WittVector ghost_binary(const CoeffRing& A, const WittVector& a, const WittVector& b, Op op) {
  CoeffRing L = ghost_ring(A, a.length());
  auto wa = ghost_in(L, a), wb = ghost_in(L, b);
  for (std::size_t k = 0; k < wa.size(); ++k) wa[k] = op(L, wa[k], wb[k]);
  return from_ghost(A, L, wa);
}

std::vector<CoeffRing::Elem> xy_values(const WittVector& a, const WittVector& b, int depth,
                                       const CoeffRing& A) {
  std::vector<CoeffRing::Elem> vals(static_cast<std::size_t>(2 * depth + 2), A.zero());
  for (std::size_t i = 0; i < a.length(); ++i) vals[i] = a.comps[i];
  for (std::size_t i = 0; i < b.length(); ++i) vals[static_cast<std::size_t>(depth + 1) + i] = b.comps[i];
  return vals;
}

}  // namespace

std::shared_ptr<const UniversalWittLaw> synthesize_law(std::int64_t p, int n, int cap) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative depth");
  if (n > cap)
    throw Error(ErrorKind::DepthCap, "depth " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, int>, std::shared_ptr<const UniversalWittLaw>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto law = build_law(p, n);
  cache.emplace(key, law);
  return law;
}

QPoly ghost_polynomial(std::int64_t p, int m, std::size_t nvars, std::size_t offset) {
  ZPoly w = ghost_z(p, m, nvars, offset);
  QPoly q(nvars);
  for (const auto& [e, c] : w.terms()) q.add_term(e, Rat(c));
  return q;
}

WittVector witt_zero(const CoeffRing& A, int r) {
  return WittVector{std::vector<CoeffRing::Elem>(static_cast<std::size_t>(r), A.zero())};
}

WittVector witt_one(const CoeffRing& A, int r) { return teichmuller(A, A.one(), r); }

WittVector teichmuller(const CoeffRing& A, const CoeffRing::Elem& a, int r) {
  WittVector w = witt_zero(A, r);
  if (r > 0) w.comps[0] = A.reduce(a);
  return w;
}

WittVector witt_from_components(const CoeffRing& A, const std::vector<CoeffRing::Elem>& comps) {
  WittVector w;
  for (const auto& c : comps) w.comps.push_back(A.reduce(c));
  return w;
}

bool witt_equal(const CoeffRing& A, const WittVector& a, const WittVector& b) {
  if (a.length() != b.length()) return false;
  for (std::size_t i = 0; i < a.length(); ++i)
    if (!A.equal(a.comps[i], b.comps[i])) return false;
  return true;
}

WittVector witt_add(const CoeffRing& A, const WittVector& a, const WittVector& b) {
  check_lengths(a, b);
  if (!ghost_route(A)) return witt_add_universal(A, a, b);
  return ghost_binary(A, a, b, [](const CoeffRing& L, const auto& x, const auto& y) { return L.add(x, y); });
}

WittVector witt_mul(const CoeffRing& A, const WittVector& a, const WittVector& b) {
  check_lengths(a, b);
  if (!ghost_route(A)) return witt_mul_universal(A, a, b);
  return ghost_binary(A, a, b, [](const CoeffRing& L, const auto& x, const auto& y) { return L.mul(x, y); });
}

WittVector witt_neg(const CoeffRing& A, const WittVector& a) {
  if (a.length() == 0) return a;
  if (!ghost_route(A)) {
    auto law = synthesize_law(A.p(), static_cast<int>(a.length()) - 1);
    auto vals = xy_values(a, witt_zero(A, 0), law->depth, A);
    WittVector out;
    for (std::size_t k = 0; k < a.length(); ++k) out.comps.push_back(eval_poly(A, law->neg[k], vals));
    return out;
  }
  CoeffRing L = ghost_ring(A, a.length());
  auto w = ghost_in(L, a);
  for (auto& x : w) x = L.neg(x);
  return from_ghost(A, L, w);
}

WittVector witt_sub(const CoeffRing& A, const WittVector& a, const WittVector& b) {
  return witt_add(A, a, witt_neg(A, b));
}

WittVector witt_int_multiple(const CoeffRing& A, const Int& n, const WittVector& a) {
  if (sgn(n) < 0) return witt_neg(A, witt_int_multiple(A, -n, a));
  if (ghost_route(A)) {
    CoeffRing L = ghost_ring(A, a.length());
    auto w = ghost_in(L, a);
    for (auto& x : w) x = L.scale(n, x);
    return from_ghost(A, L, w);
  }
  WittVector acc = witt_zero(A, static_cast<int>(a.length())), base = a;
  Int k = n;
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = witt_add(A, acc, base);
    k >>= 1;
    if (sgn(k) > 0) base = witt_add(A, base, base);
  }
  return acc;
}

WittVector witt_add_universal(const CoeffRing& A, const WittVector& a, const WittVector& b) {
  check_lengths(a, b);
  if (a.length() == 0) return a;
  auto law = synthesize_law(A.p(), static_cast<int>(a.length()) - 1);
  auto vals = xy_values(a, b, law->depth, A);
  WittVector out;
  for (std::size_t k = 0; k < a.length(); ++k) out.comps.push_back(eval_poly(A, law->add[k], vals));
  return out;
}

WittVector witt_mul_universal(const CoeffRing& A, const WittVector& a, const WittVector& b) {
  check_lengths(a, b);
  if (a.length() == 0) return a;
  auto law = synthesize_law(A.p(), static_cast<int>(a.length()) - 1);
  auto vals = xy_values(a, b, law->depth, A);
  WittVector out;
  for (std::size_t k = 0; k < a.length(); ++k) out.comps.push_back(eval_poly(A, law->mul[k], vals));
  return out;
}

WittVector frobenius_universal(const CoeffRing& A, const WittVector& a) {
  if (a.length() < 2) throw Error(ErrorKind::LengthUnderflow, "Frobenius needs length at least 2");
  auto law = synthesize_law(A.p(), static_cast<int>(a.length()) - 1);
  auto vals = xy_values(a, witt_zero(A, 0), law->depth, A);
  WittVector out;
  for (std::size_t k = 0; k + 1 < a.length(); ++k) out.comps.push_back(eval_poly(A, law->frob[k], vals));
  return out;
}

std::vector<CoeffRing::Elem> ghost(const CoeffRing& A, const WittVector& a) {
  if (!A.torsion_free())
    throw Error(ErrorKind::TorsionCoefficients, "ghost components need a p-torsion-free ring");
  return ghost_in(A, a);
}

WittVector frobenius(const CoeffRing& A, const WittVector& a) {
  if (a.length() < 2) throw Error(ErrorKind::LengthUnderflow, "Frobenius needs length at least 2");
  if (A.char_p()) {
    WittVector out;
    for (std::size_t k = 0; k + 1 < a.length(); ++k) out.comps.push_back(A.pow(a.comps[k], A.p()));
    return out;
  }
  if (A.torsion_free()) {
    auto w = ghost_in(A, a);
    w.erase(w.begin());
    return from_ghost(A, A, w);
  }
  return frobenius_universal(A, a);
}

WittVector verschiebung(const CoeffRing& A, const WittVector& a) {
  WittVector out;
  out.comps.push_back(A.zero());
  for (const auto& c : a.comps) out.comps.push_back(c);
  return out;
}

WittVector restriction(const CoeffRing&, const WittVector& a) {
  if (a.length() < 2) throw Error(ErrorKind::LengthUnderflow, "restriction needs length at least 2");
  WittVector out = a;
  out.comps.pop_back();
  return out;
}

std::string witt_to_string(const CoeffRing& A, const WittVector& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (i) s += ", ";
    s += A.to_string(a.comps[i]);
  }
  return s + ")";
}

InvariantFactors witt_additive_invariants(const CoeffRing& A, int r) {
  const std::int64_t q = A.finite_size();
  const auto elems = A.elements();
  // Enumerate W_r(A) and count the elements killed by p^k.
  std::int64_t total = 1;
  for (int i = 0; i < r; ++i) {
    total *= q;
    if (total > 200000) throw Error(ErrorKind::InvalidArgument, "Witt group too large to enumerate");
  }
  std::vector<int> log_killed(static_cast<std::size_t>(r * A.ext_degree() * std::max(1, A.precision()) + 2), 0);
  std::vector<std::int64_t> killed(log_killed.size(), 0);
  const Int P(static_cast<long>(A.p()));
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code;
    WittVector x;
    for (int i = 0; i < r; ++i) {
      x.comps.push_back(elems[static_cast<std::size_t>(c % q)]);
      c /= q;
    }
    WittVector y = x;
    for (std::size_t k = 0; k < killed.size(); ++k) {
      bool zero = true;
      for (const auto& comp : y.comps) zero = zero && A.is_zero(comp);
      if (zero) {
        for (std::size_t j = k; j < killed.size(); ++j) ++killed[j];
        break;
      }
      y = witt_int_multiple(A, P, y);
    }
  }
  InvariantFactors out;
  out.p = A.p();
  auto logp = [&](std::int64_t n) {
    int e = 0;
    while (n > 1) {
      n /= A.p();
      ++e;
    }
    return e;
  };
  for (std::size_t k = 0; k < killed.size(); ++k) log_killed[k] = logp(killed[k]);
  for (std::size_t k = 1; k < killed.size(); ++k) {
    int at_least_k = log_killed[k] - log_killed[k - 1];
    int at_least_next = k + 1 < killed.size() ? log_killed[k + 1] - log_killed[k] : 0;
    for (int c = 0; c < at_least_k - at_least_next; ++c) out.torsion.push_back(static_cast<int>(k));
  }
  out.normalize();
  return out;
}

}  // namespace drw
