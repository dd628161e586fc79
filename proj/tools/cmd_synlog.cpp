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
#include "drwitt/error.hpp"
#include "drwitt/kpredict.hpp"

namespace drw::cli {

namespace {

long syntomic_cap(const RingSpec& s, long cap) {
  return cap >= 0 ? cap : 2 * static_cast<long>(s.p) * static_cast<long>(s.p);
}

SyntomicOptions options(const SyntomicArgs& args) {
  SyntomicOptions opt;
  opt.depth = args.depth;
  opt.extra = precision_guard();
  return opt;
}

// Every orbit group is recomputed with one more orbit index below 0 and
// with the weight cap multiplied by p.
bool orbits_stable(const SyntomicComplex& c) {
  SyntomicOptions deeper = c.options;
  deeper.depth += 1;
  const SyntomicComplex d = syntomic(c.spec, c.i, c.r, c.weight_cap * c.spec.p, deeper);
  for (const auto& o : c.orbits) {
    bool found = false;
    for (const auto& q : d.orbits)
      if (q.representative == o.representative) {
        found = true;
        if (!(q.h == o.h)) return false;
      }
    if (!found) return false;
  }
  return true;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const int a = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    const std::string rest = text.substr(dots + 2);
    const int b = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "range must look like a..b, got '" + text + "'");
  }
}

}  // namespace

Output run_syntomic(const SyntomicArgs& args) {
  const RingSpec s = load_ring(args.ring.ring_file);
  const long cap = syntomic_cap(s, args.ring.weight_cap);
  const SyntomicComplex c = syntomic(s, args.twist, args.modp, cap, options(args));
  const std::string stability = orbits_stable(c) ? "stable" : "unstable";
  Output out;
  out.payload["command"] = "syntomic";
  out.payload["ring"] = s.describe();
  out.payload["twist"] = args.twist;
  out.payload["modp"] = args.modp;
  out.payload["weight_cap"] = cap;
  out.payload["depth"] = c.options.depth;
  out.payload["guard"] = c.options.extra;
  std::ostringstream text;
  text << "H^n(Z/" << s.p << "^" << args.modp << "(" << args.twist << ")) of " << s.describe() << ", weights <= "
       << cap << "\n";
  Json h = Json::array();
  for (int n = 0; n <= c.top; ++n) {
    h.push_back(group_json(c.cohomology(n), stability));
    text << "H^" << n << "  " << group_text(c.cohomology(n)) << "\n";
  }
  out.payload["cohomology"] = h;
  Json orbits = Json::array();
  for (const auto& o : c.orbits) {
    Json j = Json::object();
    j["representative"] = grade_to_string(o.representative);
    Json groups = Json::array();
    for (const auto& g : o.h) groups.push_back(group_text(g));
    j["groups"] = groups;
    orbits.push_back(j);
  }
  out.payload["orbits"] = orbits;
  text << "stability: " << stability << "\n";
  out.text = text.str();
  return out;
}

Output run_logforms(const SyntomicArgs& args) {
  const RingSpec s = load_ring(args.ring.ring_file);
  const LogLattice l = log_lattice(s, args.twist, args.modp);
  Output out;
  out.payload["command"] = "logforms";
  out.payload["ring"] = s.describe();
  out.payload["degree"] = args.twist;
  out.payload["modp"] = args.modp;
  out.payload["symbols"] = l.symbols;
  out.payload["group"] = group_json(l.invariants, "exact");
  out.text = "W_" + std::to_string(args.modp) + " Omega^" + std::to_string(args.twist) + "_log of " + s.describe() +
             ": " + group_text(l.invariants) + "\n";
  return out;
}

Output run_check(const std::string& what, const SyntomicArgs& args) {
  const RingSpec s = load_ring(args.ring.ring_file);
  const long cap = syntomic_cap(s, args.ring.weight_cap);
  Output out;
  out.payload["command"] = "check " + what;
  out.payload["ring"] = s.describe();
  out.payload["twist"] = args.twist;
  out.payload["weight_cap"] = cap;
  std::ostringstream text;
  if (what == "fundamental-seq") {
    const FundamentalSeqReport rep = verify_fundamental_seq(s, args.twist, args.modp, cap, options(args));
    out.payload["modp"] = args.modp;
    out.payload["certified_degrees"] = rep.certified_degrees;
    out.payload["failed_degrees"] = rep.failed_degrees;
    out.payload["nonzero_off_degrees"] = rep.nonzero_off_degrees;
    out.payload["h_i"] = group_json(rep.h_i, "window");
    out.payload["h_i_plus_1"] = group_json(rep.h_i_plus_1, "window");
    out.payload["log"] = group_json(rep.log, "exact");
    out.payload["symbols_are_cycles"] = rep.symbols_are_cycles;
    out.payload["verdict"] = rep.verdict;
    out.payload["index_exponent"] = rep.index_exponent;
    out.payload["ok"] = rep.ok;
    text << "fundamental sequence, i=" << args.twist << ", r=" << args.modp << ": H^i " << group_text(rep.h_i)
         << ", log " << group_text(rep.log) << ", " << rep.verdict << (rep.ok ? ", certified" : ", NOT certified")
         << "\n";
    out.check_failed = !rep.ok;
  } else if (what == "nygaard-graded") {
    const NygaardGradedReport rep = nygaard_graded_check(s, args.twist, cap);
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
      Json j = Json::object();
      j["grade"] = grade_to_string(e.grade);
      j["degree"] = e.degree;
      j["graded"] = group_text(e.graded);
      j["truncated"] = group_text(e.truncated);
      entries.push_back(j);
    }
    out.payload["entries"] = entries;
    out.payload["ok"] = rep.ok;
    text << "gr^" << args.twist << " against tau^{<=" << args.twist << "}: " << rep.entries.size() << " entries, "
         << (rep.ok ? "agree" : "DISAGREE") << "\n";
    out.check_failed = !rep.ok;
  } else {
    const int i_cap = args.twist > 0 ? args.twist : 4;
    const bool ok = nygaard_completeness_check(s, i_cap, cap);
    out.payload["i_cap"] = i_cap;
    out.payload["ok"] = ok;
    text << "Nygaard completeness up to " << i_cap << ": " << (ok ? "holds" : "FAILS") << "\n";
    out.check_failed = !ok;
  }
  out.text = text.str();
  return out;
}

Output run_kpredict(const KArgs& args) {
  const RingSpec s = load_ring(args.ring.ring_file);
  const auto [lo, hi] = parse_range(args.range);
  const KTable t = k_predict(s, lo, hi, args.modp);
  Output out;
  out.payload["command"] = "kpredict";
  out.payload["ring"] = t.ring;
  out.payload["modp"] = args.modp;
  out.payload["sheaf_caveat"] = t.sheaf_caveat;
  out.payload["p_torsion_free"] = t.p_torsion_free;
  Json rows = Json::array();
  std::ostringstream text;
  if (args.markdown) text << "| i | modulus | group | provenance |\n|---|---|---|---|\n";
  for (const auto& r : t.rows) {
    Json j = Json::object();
    j["degree"] = r.degree;
    j["modulus"] = r.modulus == "p^r" ? std::to_string(s.p) + "^" + std::to_string(r.r) : r.modulus;
    j["group"] = group_json(r.p_part, "exact");
    j["provenance"] = r.provenance;
    if (!r.note.empty()) j["note"] = r.note;
    rows.push_back(j);
    const std::string name = r.modulus == "Z_p" ? "K_" + std::to_string(r.degree) + "(S; Z_p)"
                                                : "K_" + std::to_string(r.degree) + "(S)/" + j["modulus"].get<std::string>();
    if (args.markdown)
      text << "| " << r.degree << " | " << j["modulus"].get<std::string>() << " | " << r.group << " | "
           << r.provenance << " |\n";
    else
      text << name << " = " << r.group << "\n";
  }
  if (t.sheaf_caveat) text << "note: " << s.describe() << " is not local; rows carry the sheaf-level caveat\n";
  out.payload["rows"] = rows;
  out.text = text.str();
  return out;
}

}  // namespace drw::cli
