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

// Sparse multivariate polynomials with exact coefficients.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "drwitt/rings.hpp"

namespace drw {

using Exponent = std::vector<int>;

template <class C>
class SparsePoly {
 public:
  using Terms = std::map<Exponent, C>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const C& c) {
    SparsePoly r(nvars);
    if (c != 0) r.terms_[Exponent(nvars, 0)] = c;
    return r;
  }
  static SparsePoly variable(std::size_t nvars, std::size_t i) {
    SparsePoly r(nvars);
    Exponent e(nvars, 0);
    e[i] = 1;
    r.terms_[e] = 1;
    return r;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  Terms& terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const C& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  SparsePoly scaled(const C& s) const {
    SparsePoly r(nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
  }
  bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  /// Total degree with per-variable weights; -1 for the zero polynomial.
  long weighted_degree(const std::vector<long>& weights) const {
    long best = -1;
    for (const auto& [e, c] : terms_) {
      long d = 0;
      for (std::size_t i = 0; i < e.size(); ++i) d += weights[i] * e[i];
      best = std::max(best, d);
    }
    return best;
  }

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

template <class C>
SparsePoly<C> power(SparsePoly<C> base, long exp) {
  SparsePoly<C> r = SparsePoly<C>::constant(base.nvars(), C(1));
  while (exp > 0) {
    if (exp & 1) r = r * base;
    exp >>= 1;
    if (exp > 0) base = base * base;
  }
  return r;
}

using QPoly = SparsePoly<Rat>;
using ZPoly = SparsePoly<Int>;

/// Renders a polynomial with variable names, highest exponents first.
template <class C>
std::string poly_to_string(const SparsePoly<C>& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    C mag = c < 0 ? C(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace drw
