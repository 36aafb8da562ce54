// Copyright 2026 The lttw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance report: one PASS/FAIL line per criterion. Exits 1 if any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lttw/error.hpp"
#include "lttw/kernel.hpp"
#include "lttw/printer.hpp"
#include "lttw/session.hpp"
#include "reduce.hpp"

namespace lttw {
namespace {

using Clock = std::chrono::steady_clock;

std::string src(const std::string& rel) { return std::string(LTTW_SOURCE_DIR) + "/" + rel; }

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

RunConfig base_config() {
  RunConfig cfg;
  cfg.stdlib_dir = src("stdlib");
  return cfg;
}

Session loaded(RunConfig cfg = base_config()) {
  Session s(std::move(cfg));
  s.load_stdlib();
  return s;
}

// Runs a command with its output discarded and returns its exit status.
int run(const std::string& cmd) {
  int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

struct Result {
  bool pass = false;
  std::string detail;
};

// ---------------------------------------------------------------------------

Result stdlib_load() {
  auto t0 = Clock::now();
  Session s = loaded();
  double secs = since(t0);
  const Signature& sig = s.signature();
  std::vector<std::string> got;
  for (const auto& name : sig.order()) {
    if (const ConstDecl* c = sig.find_constant(name)) got.push_back(name + " : " + print(c->kind));
  }
  for (const RewriteRule* r : sig.rules()) {
    got.push_back("rule " + print(r->lhs()) + " = " + print(r->rhs) + " : " +
                  print(r->result_kind));
  }
  std::ifstream in(src("tests/golden/signature.txt"));
  std::vector<std::string> want;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') want.push_back(line);
  }
  std::size_t diffs = got.size() == want.size() ? 0 : 1;
  for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) diffs += got[i] != want[i];
  Result r;
  r.pass = diffs == 0 && !want.empty() && secs < 1.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu constants, %zu rules, %zu golden mismatches, %.3f s",
                sig.constant_count(), sig.rule_count(), diffs, secs);
  r.detail = buf;
  return r;
}

// Each rule's left-hand side, with its variables free, must contract to the
// right-hand side in exactly one head step.
Result rules_fire() {
  RunConfig imp = base_config();
  imp.mode = Mode::kImpredicative;
  Session s = loaded(imp);
  const Signature& sig = s.signature();
  Kernel k(sig);
  int ok = 0;
  int total = 0;
  std::string bad;
  for (const RewriteRule* rule : sig.rules()) {
    ++total;
    Expr lhs = rule->lhs();
    Reducer red(sig);
    std::optional<Expr> next = red.step(lhs);
    bool good = next && alpha_eq(*next, rule->rhs);
    try {
      k.check(Context(rule->pattern_vars), lhs, rule->result_kind);
    } catch (const Error&) {
      good = false;
    }
    if (good) {
      ++ok;
    } else {
      bad += " " + print(lhs);
    }
  }
  Result r;
  r.pass = ok == total && total == 13;
  r.detail = std::to_string(ok) + "/" + std::to_string(total) +
             " rules (11 core, 2 overlay) contract in one head step" + bad;
  return r;
}

Result peano4() {
  Session s = loaded();
  bool accepted = s.check_file(src("corpus/peano4.lf")).accepted;
  int cli = run(quote(LTTW_CLI) + " check " + quote(src("corpus/peano4.lf")));
  RunConfig stripped = base_config();
  stripped.stdlib_manifest = src("stdlib/manifest_stripped.txt");
  Session t = loaded(stripped);
  FileReport fr = t.check_file(src("corpus/peano4.lf"));
  Result r;
  r.pass = accepted && cli == 0 && !fr.accepted;
  r.detail = std::string("full signature ") + (accepted ? "accepts" : "rejects") +
             ", cli exit " + std::to_string(cli) + ", stripped signature " +
             (fr.accepted ? "accepts"
                          : "rejects (" + std::string(error_class_name(fr.error->error_class)) + ")");
  return r;
}

Expr numeral(unsigned n) {
  Expr e = Expr::constant("zero");
  for (unsigned i = 0; i < n; ++i) e = Expr::app(Expr::constant("succ"), e);
  return e;
}

// Reads a numeral off a normal form; -1 if it is not one.
long value_of(const Expr& e) {
  long n = 0;
  Expr cur = e;
  while (cur.is(Tag::kApp) && cur.fun().is_const("succ")) {
    ++n;
    cur = cur.arg();
  }
  return cur.is_const("zero") ? n : -1;
}

Result arithmetic() {
  Session s = loaded();
  if (!s.check_file(src("corpus/arith.lf")).accepted) return {false, "arith.lf rejected"};
  Kernel k(s.signature());
  auto t0 = Clock::now();
  int ok = 0;
  for (unsigned m = 0; m <= 12; ++m) {
    for (unsigned n = 0; n <= 12; ++n) {
      Expr p = k.normalize(Expr::apps(Expr::constant("plus"), {numeral(m), numeral(n)}));
      Expr t = k.normalize(Expr::apps(Expr::constant("mult"), {numeral(m), numeral(n)}));
      ok += value_of(p) == static_cast<long>(m + n);
      ok += value_of(t) == static_cast<long>(m * n);
    }
  }
  double secs = since(t0);
  char buf[120];
  std::snprintf(buf, sizeof buf, "%d/338 plus and mult cases agree, %.3f s", ok, secs);
  return {ok == 338 && secs < 5.0, buf};
}

Result cardinality() {
  Session s = loaded();
  std::string failed;
  for (const char* f : {"cardinality.lf", "cardinality_thms.lf", "exactly3.lf"}) {
    FileReport r = s.check_file(src(std::string("corpus/") + f));
    if (!r.accepted) failed += std::string(" ") + f;
  }
  if (!failed.empty()) return {false, "rejected:" + failed};
  Kernel k(s.signature());
  // Theorem 1 at the universe name of Nat, against its statement.
  bool thm1 = k.equal_kinds(
      s.type_of("theorem1 hatNat"),
      Expr::prf(s.reduce("forall (Set Nat) [X : Set Nat] forall Nat [m : Nat] forall Nat [n : Nat] "
                         "imp (At_Least hatNat X n) (imp (V (leq m n)) (At_Least hatNat X m))")));
  bool ex3 = k.equal_kinds(s.type_of("exactly3"),
                           Expr::prf(s.reduce("Exactly hatNat three 3")));
  bool defs = true;
  for (const char* d : {"at_least_set", "At_Least", "card", "cardinality", "infty", "Exactly"}) {
    defs &= s.signature().find_abbrev(d) != nullptr;
  }
  return {thm1 && ex3 && defs,
          std::string("definitions ") + (defs ? "present" : "missing") + ", theorem 1 " +
              (thm1 ? "proved" : "unproved") + ", exactly-3 witness " + (ex3 ? "checks" : "fails")};
}

std::map<std::string, Outcome> outcomes(const RunConfig& cfg) {
  std::map<std::string, Outcome> out;
  for (const auto& l : run_corpus(cfg, src("corpus/manifest.txt")).lines) {
    out[l.entry.path] = l.actual;
  }
  return out;
}

Result predicativity_gate() {
  RunConfig imp = base_config();
  imp.mode = Mode::kImpredicative;
  auto pred = outcomes(base_config());
  auto impred = outcomes(imp);
  std::string gate;
  int changed = 0;
  for (const auto& [path, o] : pred) {
    if (path.size() >= 20 && path.substr(path.size() - 20) == "impredicative_neg.lf") {
      gate = path;
      continue;
    }
    changed += !(impred.count(path) && impred[path] == o && impred[path].accept == o.accept);
  }
  if (gate.empty()) return {false, "negative script missing from the manifest"};
  bool rejected = !pred[gate].accept && pred[gate].error == ErrorClass::kKindMismatch;
  bool accepted = impred[gate].accept;
  return {rejected && accepted && changed == 0,
          "predicative " + pred[gate].to_string() + ", impredicative " +
              impred[gate].to_string() + ", " + std::to_string(changed) +
              " other outcomes changed"};
}

Result prop_placement() {
  RunConfig type = base_config();
  type.prop_at = PropPlacement::kType;
  CorpusReport a = run_corpus(base_config(), src("corpus/manifest.txt"));
  CorpusReport b = run_corpus(type, src("corpus/manifest.txt"));
  int same = 0;
  for (std::size_t i = 0; i < std::min(a.lines.size(), b.lines.size()); ++i) {
    same += a.lines[i].actual == b.lines[i].actual &&
            a.lines[i].actual.accept == b.lines[i].actual.accept;
  }
  bool pass = a.ok() && b.ok() && a.lines.size() == b.lines.size() &&
              same == static_cast<int>(a.lines.size());
  return {pass, std::to_string(same) + "/" + std::to_string(a.lines.size()) +
                    " files with identical outcomes under prop : Type"};
}

Result property_suites() {
  int props = run(quote(LTTW_PROPERTY_TEST));
  int subject = run(quote(LTTW_CORPUS_TEST) + " --gtest_filter='*SubjectReduction*'");
  return {props == 0 && subject == 0,
          std::string("substitution, conversion, whnf and parser suites ") +
              (props == 0 ? "pass" : "fail") + ", subject reduction " +
              (subject == 0 ? "passes" : "fails") + " (600 or more cases each)"};
}

Result elaboration_soundness() {
  Session s = loaded();
  for (const char* f : {"arith.lf", "sets.lf", "peano4.lf", "peano_axioms.lf", "cardinality.lf",
                        "cardinality_thms.lf", "exactly3.lf", "cardinality_ext.lf",
                        "equality.lf", "integers.lf", "rationals.lf"}) {
    if (!s.check_file(src(std::string("corpus/") + f)).accepted) {
      return {false, std::string(f) + " rejected"};
    }
  }
  try {
    Signature again = replay(s.history(), s.signature().options());
    bool same = again.order() == s.signature().order() &&
                again.rule_count() == s.signature().rule_count();
    return {same, std::to_string(s.history().size()) +
                      " elaborated extensions re-checked by the kernel alone"};
  } catch (const Error& e) {
    return {false, e.diagnostic().render()};
  }
}

Result end_to_end() {
  auto t0 = Clock::now();
  int rc = run(quote(LTTW_CLI) + " corpus");
  double secs = since(t0);
  char buf[80];
  std::snprintf(buf, sizeof buf, "lttw corpus exit %d in %.2f s", rc, secs);
  return {rc == 0 && secs < 60.0, buf};
}

}  // namespace
}  // namespace lttw

int main() {
  using lttw::Result;
  struct Criterion {
    const char* name;
    std::function<Result()> run;
  };
  const Criterion criteria[] = {
      {"stdlib load", lttw::stdlib_load},
      {"computation rules", lttw::rules_fire},
      {"peano 4", lttw::peano4},
      {"arithmetic oracle", lttw::arithmetic},
      {"cardinality", lttw::cardinality},
      {"predicativity gate", lttw::predicativity_gate},
      {"prop placement", lttw::prop_placement},
      {"property suites", lttw::property_suites},
      {"elaboration soundness", lttw::elaboration_soundness},
      {"end-to-end runtime", lttw::end_to_end},
  };
  int failed = 0;
  int i = 0;
  for (const auto& c : criteria) {
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += !r.pass;
    std::printf("%s %2d %s: %s\n", r.pass ? "PASS" : "FAIL", ++i, c.name, r.detail.c_str());
  }
  std::printf("%d/%d criteria pass\n", i - failed, i);
  return failed == 0 ? 0 : 1;
}
