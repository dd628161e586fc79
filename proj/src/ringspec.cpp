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

#include "drwitt/ringspec.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace drw {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur = strip(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

RingKind kind_from_name(const std::string& name) {
  if (name == "poly") return RingKind::Poly;
  if (name == "laurent") return RingKind::Laurent;
  if (name == "quotient") return RingKind::Quotient;
  if (name == "finite_field") return RingKind::FiniteField;
  if (name == "perfection") return RingKind::Perfection;
  throw Error(ErrorKind::ParseError, "unknown ring kind '" + name + "'");
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad " + what + ": '" + s + "'");
  }
}

void check_common(const RingSpec& s) {
  if (!is_prime(s.p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  if (s.f < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  if (s.weights.size() != s.vars.size()) throw Error(ErrorKind::InvalidArgument, "one weight per variable");
  for (int w : s.weights)
    if (w < 1) throw Error(ErrorKind::InvalidArgument, "weights must be positive");
  for (const auto& v : s.vars)
    if (v == "t") throw Error(ErrorKind::InvalidArgument, "'t' is reserved for the constant field");
}

}  // namespace

const char* ring_kind_name(RingKind k) {
  switch (k) {
    case RingKind::FiniteField: return "finite_field";
    case RingKind::Poly: return "poly";
    case RingKind::Laurent: return "laurent";
    case RingKind::Quotient: return "quotient";
    case RingKind::Perfection: return "perfection";
  }
  return "unknown";
}

CoeffRing RingSpec::coefficient_ring() const { return CoeffRing::general(p, 1, vars, weights, -1, f); }

std::string RingSpec::describe() const {
  std::string field = f == 1 ? "F_" + std::to_string(p) : "F_" + std::to_string(ipow(p, f));
  auto var_list = [&] {
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
    return s;
  };
  switch (kind) {
    case RingKind::FiniteField: return field;
    case RingKind::Poly: return field + "[" + var_list() + "]";
    case RingKind::Laurent: return field + "[" + var_list() + "]^{+-1}";
    case RingKind::Quotient: {
      std::string s = field + "[" + var_list() + "]/(";
      for (std::size_t i = 0; i < relation_text.size(); ++i) s += (i ? ", " : "") + relation_text[i];
      return s + ")";
    }
    case RingKind::Perfection: {
      RingSpec in = *this;
      in.kind = inner;
      return "perfection of " + in.describe();
    }
  }
  return field;
}

long homogeneous_weight(const ZPoly& f, const std::vector<int>& weights) {
  long w = -2;
  for (const auto& [e, c] : f.terms()) {
    long d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += static_cast<long>(weights[i]) * e[i];
    if (w == -2) {
      w = d;
    } else if (w != d) {
      return -1;
    }
  }
  return w == -2 ? 0 : w;
}

RingSpec make_finite_field(std::int64_t p, int f) {
  RingSpec s;
  s.p = p;
  s.kind = RingKind::FiniteField;
  s.f = f;
  check_common(s);
  return s;
}

RingSpec make_poly(std::int64_t p, std::vector<std::string> vars, std::vector<int> weights, int f) {
  RingSpec s;
  s.p = p;
  s.kind = RingKind::Poly;
  if (weights.empty()) weights.assign(vars.size(), 1);
  s.vars = std::move(vars);
  s.weights = std::move(weights);
  s.f = f;
  check_common(s);
  return s;
}

RingSpec make_laurent(std::int64_t p, std::vector<std::string> vars, std::vector<int> weights, int f) {
  RingSpec s = make_poly(p, std::move(vars), std::move(weights), f);
  s.kind = RingKind::Laurent;
  return s;
}

RingSpec make_quotient(std::int64_t p, std::vector<std::string> vars, std::vector<int> weights,
                       std::vector<std::string> relations, int f) {
  RingSpec s = make_poly(p, std::move(vars), std::move(weights), f);
  s.kind = RingKind::Quotient;
  CoeffRing A = s.coefficient_ring();
  std::vector<int> w = s.weights;
  if (f > 1) w.push_back(0);
  for (auto& text : relations) {
    ZPoly r = A.parse(text);
    if (r.is_zero()) continue;
    if (homogeneous_weight(r, w) < 0)
      throw Error(ErrorKind::NonQuasiHomogeneous, "relation '" + text + "' is not weighted-homogeneous");
    s.relations.push_back(r);
    s.relation_text.push_back(text);
  }
  return s;
}

RingSpec make_perfection(const RingSpec& inner) {
  if (inner.kind != RingKind::Poly && inner.kind != RingKind::Laurent && inner.kind != RingKind::FiniteField)
    throw Error(ErrorKind::UnsupportedKind, "perfection only wraps poly, laurent or finite_field");
  RingSpec s = inner;
  s.kind = RingKind::Perfection;
  s.inner = inner.kind;
  return s;
}

RingSpec parse_ring_spec(const std::string& text) {
  std::int64_t p = 0;
  std::string kind, of = "poly";
  std::vector<std::string> vars;
  std::vector<int> weights;
  std::vector<std::string> rels;
  int f = 1;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = strip(line.substr(0, eq)), value = strip(line.substr(eq + 1));
    if (key == "p") {
      p = parse_int(value, "prime");
    } else if (key == "kind") {
      kind = value;
    } else if (key == "of") {
      of = value;
    } else if (key == "vars") {
      for (const auto& item : split(value, ',')) {
        auto colon = item.find(':');
        vars.push_back(strip(item.substr(0, colon)));
        weights.push_back(colon == std::string::npos ? 1 : parse_int(strip(item.substr(colon + 1)), "weight"));
      }
    } else if (key == "rels") {
      rels = split(value, ';');
    } else if (key == "f") {
      f = parse_int(value, "extension degree");
    } else {
      throw Error(ErrorKind::ParseError, "unknown key '" + key + "'");
    }
  }
  if (p == 0) throw Error(ErrorKind::ParseError, "missing 'p ='");
  if (kind.empty()) throw Error(ErrorKind::ParseError, "missing 'kind ='");
  RingKind k = kind_from_name(kind);
  auto build = [&](RingKind which) -> RingSpec {
    switch (which) {
      case RingKind::FiniteField: return make_finite_field(p, f);
      case RingKind::Poly: return make_poly(p, vars, weights, f);
      case RingKind::Laurent: return make_laurent(p, vars, weights, f);
      case RingKind::Quotient: return make_quotient(p, vars, weights, rels, f);
      case RingKind::Perfection: break;
    }
    throw Error(ErrorKind::UnsupportedKind, "nested perfection");
  };
  if (k == RingKind::Perfection) return make_perfection(build(kind_from_name(of)));
  if (k != RingKind::Quotient && !rels.empty())
    throw Error(ErrorKind::ParseError, "relations are only allowed for kind = quotient");
  return build(k);
}

std::string ring_spec_to_text(const RingSpec& s) {
  std::ostringstream os;
  os << "p = " << s.p << "\n";
  os << "kind = " << ring_kind_name(s.kind) << "\n";
  if (s.kind == RingKind::Perfection) os << "of = " << ring_kind_name(s.inner) << "\n";
  if (!s.vars.empty()) {
    os << "vars = ";
    for (std::size_t i = 0; i < s.vars.size(); ++i) os << (i ? ", " : "") << s.vars[i] << ":" << s.weights[i];
    os << "\n";
  }
  if (!s.relation_text.empty()) {
    os << "rels = ";
    for (std::size_t i = 0; i < s.relation_text.size(); ++i) os << (i ? "; " : "") << s.relation_text[i];
    os << "\n";
  }
  if (s.f != 1) os << "f = " << s.f << "\n";
  return os.str();
}

}  // namespace drw
