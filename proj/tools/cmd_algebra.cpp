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

#include <sstream>

#include "cli.hpp"
#include "drwitt/dieudonne.hpp"
#include "drwitt/error.hpp"
#include "drwitt/witt.hpp"

namespace drw::cli {

namespace {

long default_cap(const RingSpec& s, long cap) { return cap >= 0 ? cap : 2 * static_cast<long>(s.p); }

WittVector parse_witt(const CoeffRing& A, const std::string& text, int len) {
  std::vector<CoeffRing::Elem> comps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) comps.push_back(A.parse(item));
  if (static_cast<int>(comps.size()) > len)
    throw Error(ErrorKind::LengthMismatch, "more components than --len");
  while (static_cast<int>(comps.size()) < len) comps.push_back(A.zero());
  return witt_from_components(A, comps);
}

Json grade_json(const RingSpec& s, const Grade& a) {
  Json j = Json::object();
  j["grade"] = grade_to_string(a);
  j["weight"] = grade_weight(s, a).get_str();
  return j;
}

}  // namespace

Output run_witt(const WittArgs& args) {
  if (args.len < 1) throw Error(ErrorKind::InvalidArgument, "--len must be positive");
  const CoeffRing A = args.integral ? CoeffRing::integers(args.p) : CoeffRing::finite_field(args.p, args.f);
  const WittVector a = parse_witt(A, args.a, args.len);
  std::vector<CoeffRing::Elem> result;
  if (args.op == "add" || args.op == "mul") {
    if (args.b.empty()) throw Error(ErrorKind::InvalidArgument, "--b is required for " + args.op);
    const WittVector b = parse_witt(A, args.b, args.len);
    result = (args.op == "add" ? witt_add(A, a, b) : witt_mul(A, a, b)).comps;
  } else if (args.op == "teich") {
    result = teichmuller(A, a.comps[0], args.len).comps;
  } else if (args.op == "frob") {
    result = frobenius(A, a).comps;
  } else if (args.op == "versch") {
    result = verschiebung(A, a).comps;
  } else {
    result = ghost(A, a);
  }
  Output out;
  out.payload["command"] = "witt";
  out.payload["op"] = args.op;
  out.payload["p"] = args.p;
  out.payload["len"] = args.len;
  out.payload["coefficients"] = args.integral ? "Z" : (args.f == 1 ? "F_p" : "F_q");
  Json comps = Json::array();
  std::string text = args.op == "ghost" ? "ghost: (" : "result: (";
  for (std::size_t i = 0; i < result.size(); ++i) {
    comps.push_back(A.to_string(result[i]));
    text += (i ? ", " : "") + A.to_string(result[i]);
  }
  out.payload["result"] = comps;
  out.text = text + ")\n";
  return out;
}

Output run_derham_table(const TableArgs& args) {
  const RingSpec s = load_ring(args.ring.ring_file);
  const long cap = default_cap(s, args.ring.weight_cap);
  Output out;
  out.payload["command"] = "derham table";
  out.payload["ring"] = s.describe();
  out.payload["weight_cap"] = cap;
  Json rows = Json::array();
  std::ostringstream text;
  text << s.describe() << ", weights <= " << cap << "\n";
  for (int i = 0; i <= args.maxdeg; ++i)
    for (const auto& [a, g] : derham_cohomology(s, i, cap)) {
      if (g.is_zero()) continue;
      Json row = grade_json(s, a);
      row["degree"] = i;
      row["h"] = group_json(g, "exact");
      rows.push_back(row);
      text << "H^" << i << "  " << grade_to_string(a) << "  " << group_text(g) << "\n";
    }
  out.payload["rows"] = rows;
  out.text = text.str();
  return out;
}

Output run_cartier_check(const TableArgs& args) {
  const RingSpec s = load_ring(args.ring.ring_file);
  const long cap = args.ring.weight_cap >= 0 ? args.ring.weight_cap : 3 * static_cast<long>(s.p);
  const CartierReport rep = cartier_smooth_check(s, args.maxdeg, cap);
  Output out;
  out.payload["command"] = "cartier-check";
  out.payload["ring"] = s.describe();
  out.payload["weight_cap"] = cap;
  out.payload["consistent"] = rep.consistent;
  out.payload["verdict"] = rep.verdict;
  out.payload["flatness"] = rep.flatness;
  out.payload["blocks"] = rep.entries.size();
  Json wit = Json::array();
  for (const auto& w : rep.witnesses) {
    Json j = Json::object();
    j["degree"] = w.degree;
    j["source"] = w.has_source ? grade_to_string(w.source) : "";
    j["target"] = grade_to_string(w.target);
    j["source_dim"] = w.source_dim;
    j["image_dim"] = w.image_dim;
    j["target_dim"] = w.target_dim;
    j["lands_in_cycles"] = w.lands_in_cycles;
    wit.push_back(j);
  }
  out.payload["witnesses"] = wit;
  out.text = s.describe() + ": " + rep.verdict + " (flatness " + rep.flatness + ")\n";
  out.check_failed = !rep.consistent;
  return out;
}

Output run_drw_table(const TableArgs& args) {
  const RingSpec s = load_ring(args.ring.ring_file);
  const long cap = default_cap(s, args.ring.weight_cap);
  const StrictLevel W = de_rham_witt(s, args.level, cap);
  Output out;
  out.payload["command"] = "drw table";
  out.payload["ring"] = s.describe();
  out.payload["level"] = args.level;
  out.payload["weight_cap"] = cap;
  Json rows = Json::array();
  std::ostringstream text;
  text << "W_" << args.level << " Omega of " << s.describe() << ", weights <= " << cap << "\n";
  const int top = std::min(args.maxdeg, dieudonne_top(s));
  for (const auto& [a, pieces] : W.pieces)
    for (int n = 0; n <= top; ++n) {
      const InvariantFactors g = W.invariants(a, n);
      if (g.is_zero()) continue;
      Json row = grade_json(s, a);
      row["degree"] = n;
      row["w"] = group_json(g, "exact");
      rows.push_back(row);
      text << "n=" << n << "  " << grade_to_string(a) << "  " << group_text(g) << "\n";
    }
  Json totals = Json::array();
  for (int n = 0; n <= top; ++n) {
    totals.push_back(group_json(W.total(n), "exact"));
    text << "total n=" << n << "  " << group_text(W.total(n)) << "\n";
  }
  out.payload["rows"] = rows;
  out.payload["totals"] = totals;
  out.text = text.str();
  return out;
}

}  // namespace drw::cli
