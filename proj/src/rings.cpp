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

#include "drwitt/rings.hpp"

#include <limits>

namespace drw {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / base)
      throw Error(ErrorKind::PrecisionExhausted, "p^R overflows 63 bits");
    r *= base;
  }
  return r;
}

int valuation(const Int& x, std::int64_t p) {
  if (sgn(x) == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  Int y = x;
  Int P(static_cast<long>(p));
  int v = 0;
  while (mpz_divisible_p(y.get_mpz_t(), P.get_mpz_t())) {
    y /= P;
    ++v;
  }
  return v;
}

int valuation(const Rat& x, std::int64_t p) {
  return valuation(Int(x.get_num()), p) - valuation(Int(x.get_den()), p);
}

ModRing::ModRing(std::int64_t prime, int precision) : p(prime), R(precision) {
  if (!is_prime(prime)) throw Error(ErrorKind::InvalidArgument, "modulus base must be prime");
  if (precision < 1) throw Error(ErrorKind::InvalidArgument, "precision must be positive");
  mod = ipow(prime, precision);
  if (mod > (std::int64_t{1} << 62)) throw Error(ErrorKind::PrecisionExhausted, "p^R too large");
}

ModRing::Elem ModRing::from_int(const Int& x) const {
  Int m(static_cast<long>(mod));
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r.get_si();
}

ModRing::Elem ModRing::from_rat(const Rat& x) const {
  Int den = x.get_den();
  Int P(static_cast<long>(p));
  if (mpz_divisible_p(den.get_mpz_t(), P.get_mpz_t()))
    throw Error(ErrorKind::InexactDivision, "denominator divisible by p: " + x.get_str());
  return mul(from_int(Int(x.get_num())), inverse_unit(from_int(den)));
}

int ModRing::val(Elem a) const {
  if (a == 0) return R;
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

ModRing::Elem ModRing::inverse_unit(Elem a) const {
  // extended Euclid on (a, mod)
  std::int64_t old_r = a, r = mod, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw Error(ErrorKind::InexactDivision, "element is not a unit");
  return from_int(old_s);
}

Xgcd<ModRing::Elem> ModRing::xgcd(Elem a, Elem b) const {
  Xgcd<Elem> r;
  if (a == 0 && b == 0) {
    r.g = 0; r.s = 1; r.t = 0; r.u = 0; r.v = 1;
    return r;
  }
  int va = val(a), vb = val(b);
  if (va <= vb) {
    std::int64_t pv = ipow(p, va);
    Elem ua_inv = inverse_unit(a / pv);
    r.g = pv;
    r.s = ua_inv;
    r.t = 0;
    r.u = neg(mul(from_int(b / pv), ua_inv));
    r.v = 1;
  } else {
    std::int64_t pv = ipow(p, vb);
    Elem ub_inv = inverse_unit(b / pv);
    r.g = pv;
    r.s = 0;
    r.t = ub_inv;
    r.u = 1;
    r.v = neg(mul(from_int(a / pv), ub_inv));
  }
  return r;
}

ModRing::Elem ModRing::ann(Elem a) const {
  if (a == 0) return one();
  int v = val(a);
  return v == 0 ? 0 : ipow(p, R - v);
}

ModRing::Elem ModRing::normalizing_unit(Elem a) const {
  if (a == 0) return one();
  int v = val(a);
  return inverse_unit(a / ipow(p, v));
}

void ModRing::divrem(Elem x, Elem pivot, Elem& q, Elem& rem) const {
  if (pivot == 0) {
    q = 0;
    rem = x;
    return;
  }
  // pivot is canonical p^v
  rem = x % pivot;
  q = (x - rem) / pivot;
}

}  // namespace drw
