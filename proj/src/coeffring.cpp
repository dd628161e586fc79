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

#include "drwitt/coeffring.hpp"

#include <algorithm>
#include <cctype>

namespace drw {

namespace {

using UPoly = std::vector<std::int64_t>;  // low to high, over F_p

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
UPoly upoly_mod(UPoly a, const UPoly& b, std::int64_t p) {
  trim(a);
  while (a.size() >= b.size()) {
    std::int64_t lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

UPoly decode(std::int64_t code, std::int64_t p, int deg) {
  UPoly a(deg + 1, 0);
  for (int i = 0; i < deg; ++i) {
    a[i] = code % p;
    code /= p;
  }
  a[deg] = 1;
  return a;
}

}  // namespace

std::vector<Int> first_irreducible(std::int64_t p, int f) {
  if (f < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  std::vector<Int> out;
  if (f == 1) return {Int(0), Int(1)};
  const std::int64_t count = ipow(p, f);
  for (std::int64_t code = 0; code < count; ++code) {
    UPoly g = decode(code, p, f);
    bool irreducible = true;
    for (int d = 1; d <= f / 2 && irreducible; ++d) {
      const std::int64_t nd = ipow(p, d);
      for (std::int64_t c2 = 0; c2 < nd && irreducible; ++c2)
        if (upoly_mod(g, decode(c2, p, d), p).empty()) irreducible = false;
    }
    if (irreducible) {
      for (auto c : g) out.push_back(Int(static_cast<long>(c)));
      return out;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

CoeffRing CoeffRing::integers(std::int64_t p, std::vector<std::string> vars, std::vector<int> weights,
                              int weight_cap) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  CoeffRing r;
  r.p_ = p;
  r.N_ = 0;
  if (weights.empty()) weights.assign(vars.size(), 1);
  r.names_ = std::move(vars);
  r.weights_ = std::move(weights);
  r.cap_ = weight_cap;
  return r;
}

CoeffRing CoeffRing::polynomial(std::int64_t p, std::vector<std::string> vars, std::vector<int> weights,
                                int weight_cap) {
  CoeffRing r = integers(p, std::move(vars), std::move(weights), weight_cap);
  r.N_ = 1;
  return r;
}

CoeffRing CoeffRing::finite_field(std::int64_t p, int f) { return general(p, 1, {}, {}, -1, f); }

CoeffRing CoeffRing::general(std::int64_t p, int N, std::vector<std::string> vars, std::vector<int> weights,
                             int weight_cap, int f) {
  CoeffRing r = integers(p, std::move(vars), std::move(weights), weight_cap);
  r.N_ = N;
  if (f > 1) {
    r.gen_ = first_irreducible(p, f);
    r.names_.push_back("t");
    r.weights_.push_back(0);
  }
  return r;
}

CoeffRing CoeffRing::with_precision(int N) const {
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "negative precision");
  CoeffRing r = *this;
  r.N_ = N;
  return r;
}

CoeffRing::Elem CoeffRing::from_int(const Int& c) const {
  return reduce(Elem::constant(nvars(), c));
}

CoeffRing::Elem CoeffRing::var(std::size_t i) const {
  if (i >= nvars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  return reduce(Elem::variable(nvars(), i));
}

CoeffRing::Elem CoeffRing::reduce(Elem a) const {
  if (cap_ >= 0) {
    for (auto it = a.terms().begin(); it != a.terms().end();) {
      long w = 0;
      for (std::size_t i = 0; i < it->first.size(); ++i) w += static_cast<long>(weights_[i]) * it->first[i];
      it = w > cap_ ? a.terms().erase(it) : std::next(it);
    }
  }
  if (has_gen()) {
    const std::size_t tv = nvars() - 1;
    const int d = static_cast<int>(gen_.size()) - 1;
    for (;;) {
      auto it = std::find_if(a.terms().begin(), a.terms().end(),
                             [&](const auto& kv) { return kv.first[tv] >= d; });
      if (it == a.terms().end()) break;
      Exponent e = it->first;
      Int c = it->second;
      a.terms().erase(it);
      e[tv] -= d;
      for (int k = 0; k < d; ++k) {
        Exponent ek = e;
        ek[tv] += k;
        a.add_term(ek, -c * gen_[k]);
      }
    }
  }
  if (N_ > 0) {
    Int m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(N_));
    for (auto it = a.terms().begin(); it != a.terms().end();) {
      mpz_fdiv_r(it->second.get_mpz_t(), it->second.get_mpz_t(), m.get_mpz_t());
      it = sgn(it->second) == 0 ? a.terms().erase(it) : std::next(it);
    }
  }
  return a;
}

CoeffRing::Elem CoeffRing::mul(const Elem& a, const Elem& b) const {
  Elem r(nvars());
  Exponent e(nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      long w = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        w += static_cast<long>(weights_[i]) * e[i];
      }
      if (cap_ >= 0 && w > cap_) continue;
      r.add_term(e, ca * cb);
    }
  return reduce(std::move(r));
}

CoeffRing::Elem CoeffRing::pow(const Elem& a, long e) const {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  Elem r = one(), b = reduce(a);
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e > 0) b = mul(b, b);
  }
  return r;
}

CoeffRing::Elem CoeffRing::divide_p_power(const Elem& a, int k) const {
  Int pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(k));
  Elem r(nvars());
  const Elem reduced = reduce(a);
  for (const auto& [e, c] : reduced.terms()) {
    if (!mpz_divisible_p(c.get_mpz_t(), pk.get_mpz_t()))
      throw Error(ErrorKind::InexactDivision, "coefficient not divisible by p^" + std::to_string(k));
    r.add_term(e, c / pk);
  }
  return reduce(std::move(r));
}

std::int64_t CoeffRing::finite_size() const {
  if (N_ == 0 || nvars() > (has_gen() ? 1u : 0u))
    throw Error(ErrorKind::InvalidArgument, "coefficient ring is infinite");
  return ipow(ipow(p_, N_), ext_degree());
}

std::vector<CoeffRing::Elem> CoeffRing::elements() const {
  const std::int64_t q = finite_size();
  const std::int64_t base = ipow(p_, N_);
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(q));
  for (std::int64_t code = 0; code < q; ++code) {
    Elem a(nvars());
    std::int64_t c = code;
    for (int k = 0; k < ext_degree(); ++k) {
      Exponent e(nvars(), 0);
      if (has_gen()) e[nvars() - 1] = k;
      a.add_term(e, Int(static_cast<long>(c % base)));
      c /= base;
    }
    out.push_back(a);
  }
  return out;
}

std::string CoeffRing::to_string(const Elem& a) const { return poly_to_string(reduce(a), names_); }

namespace {

class Parser {
 public:
  Parser(const CoeffRing& ring, const std::string& text) : ring_(ring), s_(text) {}

  CoeffRing::Elem run() {
    auto v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  const CoeffRing& ring_;
  const std::string& s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, why + " in \"" + s_ + "\"");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  CoeffRing::Elem expr() {
    CoeffRing::Elem v = term();
    for (;;) {
      if (eat('+')) {
        v = ring_.add(v, term());
      } else if (eat('-')) {
        v = ring_.sub(v, term());
      } else {
        return v;
      }
    }
  }
  CoeffRing::Elem term() {
    CoeffRing::Elem v = factor();
    while (eat('*')) v = ring_.mul(v, factor());
    return v;
  }
  long integer() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an integer");
    return std::stol(s_.substr(start, i_ - start));
  }
  CoeffRing::Elem factor() {
    if (eat('-')) return ring_.neg(factor());
    CoeffRing::Elem base = primary();
    if (eat('^')) return ring_.pow(base, integer());
    return base;
  }
  CoeffRing::Elem primary() {
    skip();
    if (eat('(')) {
      auto v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return ring_.from_int(Int(s_.substr(start, i_ - start)));
    }
    if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name = s_.substr(start, i_ - start);
      const auto& names = ring_.names();
      for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return ring_.var(k);
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected end of input");
  }
};

}  // namespace

CoeffRing::Elem CoeffRing::parse(const std::string& text) const { return Parser(*this, text).run(); }

}  // namespace drw
