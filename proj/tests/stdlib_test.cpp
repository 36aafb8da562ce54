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

#include <chrono>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lttw/category.hpp"
#include "lttw/elaborator.hpp"
#include "lttw/kernel.hpp"
#include "lttw/parser.hpp"
#include "lttw/printer.hpp"
#include "lttw/session.hpp"
#include "reduce.hpp"
#include "test_support.hpp"

namespace lttw {
namespace {

using testing::source_path;
using testing::stdlib_session;

std::vector<std::string> golden_lines() {
  std::ifstream in(source_path("tests/golden/signature.txt"));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> printed_signature(const Signature& sig) {
  std::vector<std::string> out;
  for (const auto& name : sig.order()) {
    if (const ConstDecl* c = sig.find_constant(name)) {
      out.push_back(name + " : " + print(c->kind));
    }
  }
  for (const RewriteRule* r : sig.rules()) {
    out.push_back("rule " + print(r->lhs()) + " = " + print(r->rhs) + " : " +
                  print(r->result_kind));
  }
  return out;
}

Expr kind_of_text(Session& s, const std::string& text) { return s.type_of(text); }

Expr whnf_text(Session& s, const std::string& text) {
  Kernel k(s.signature());
  Elaborator el(s.signature(), s.elab_options());
  Scope scope;
  Expr t = el.infer(scope, parse_term(text)).first;
  el.finish();
  return k.whnf(el.zonk(t));
}

TEST(Stdlib, MatchesGoldenFile) {
  Session s = stdlib_session();
  std::vector<std::string> want = golden_lines();
  std::vector<std::string> got = printed_signature(s.signature());
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(got[i], want[i]) << "line " << i;
}

TEST(Stdlib, DeclarationCounts) {
  Session s = stdlib_session();
  EXPECT_EQ(s.signature().constant_count(), 38u);
  EXPECT_EQ(s.signature().rule_count(), 11u);
}

TEST(Stdlib, LoadsQuickly) {
  auto t0 = std::chrono::steady_clock::now();
  Session s = stdlib_session();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(secs, 1.0);
}

TEST(Stdlib, PeirceKind) {
  Session s = stdlib_session();
  EXPECT_EQ(print(kind_of_text(s, "Peirce")),
            "(p, q : Prop) ((Prf p -> Prf q) -> Prf p) -> Prf p");
}

TEST(Stdlib, UniverseDecodesProducts) {
  Session s = stdlib_session();
  EXPECT_EQ(print(whnf_text(s, "T (hatTimes hatNat hatNat)")), "Times (T hatNat) (T hatNat)");
  EXPECT_EQ(print(s.reduce("T (hatTimes hatNat hatNat)")), "Times Nat Nat");
}

TEST(Stdlib, SmallForallDecodes) {
  Session s = stdlib_session();
  Expr got = whnf_text(s, "V (hatForall hatNat [x : Nat] hatEq hatNat x x)");
  EXPECT_EQ(print(got), "forall (T hatNat) ([x : T hatNat] V (([x : Nat] hatEq hatNat x x) x))");
  Expr want = whnf_text(s, "forall Nat [x : Nat] V (hatEq hatNat x x)");
  EXPECT_TRUE(Kernel(s.signature()).convertible(got, want));
}

TEST(Stdlib, MembershipComputes) {
  Session s = stdlib_session();
  EXPECT_EQ(print(s.reduce("in Nat zero (set Nat [x : Nat] hatBot)")), "hatBot");
}

TEST(Stdlib, DerivedLemmaKinds) {
  Session s = stdlib_session();
  EXPECT_EQ(print(kind_of_text(s, "AndE1")), "(p, q : Prop) Prf (And p q) -> Prf p");
  EXPECT_EQ(print(kind_of_text(s, "DNE")), "(p : Prop) Prf (Not (Not p)) -> Prf p");
  EXPECT_EQ(print(kind_of_text(s, "TopI")), "Prf Top");
}

// Every computation rule fires on a generic instance: the left-hand side
// with its pattern variables renamed apart takes one head step to the
// right-hand side.
void check_rules_fire(const Signature& sig, std::size_t expected) {
  std::size_t seen = 0;
  for (const RewriteRule* r : sig.rules()) {
    std::vector<std::pair<std::string, Expr>> ren;
    for (const auto& [v, k] : r->pattern_vars) ren.emplace_back(v, Expr::var(v + "_g"));
    Expr lhs = subst_all(r->lhs(), ren);
    Expr rhs = subst_all(r->rhs, ren);
    Reducer red(sig);
    auto stepped = red.step(lhs);
    ASSERT_TRUE(stepped.has_value()) << print(lhs);
    EXPECT_TRUE(alpha_eq(*stepped, rhs)) << print(*stepped) << " vs " << print(rhs);
    ++seen;
  }
  EXPECT_EQ(seen, expected);
}

TEST(Stdlib, EveryRuleFiresOnAGenericInstance) {
  Session s = stdlib_session();
  check_rules_fire(s.signature(), 11);
}

TEST(Stdlib, OverlayRulesFireOnAGenericInstance) {
  RunConfig cfg = testing::stdlib_config();
  cfg.mode = Mode::kImpredicative;
  Session s = stdlib_session(cfg);
  check_rules_fire(s.signature(), 13);
}

TEST(Stdlib, OverlayQuantifierKinds) {
  RunConfig cfg = testing::stdlib_config();
  cfg.mode = Mode::kImpredicative;
  Session s = stdlib_session(cfg);
  EXPECT_EQ(print(kind_of_text(s, "forallbar")), "(A : Type) (A -> Prf prop) -> Prf prop");
  EXPECT_EQ(print(kind_of_text(s, "existsbar")), "(A : Type) (A -> Prf prop) -> Prf prop");
}

TEST(Stdlib, SmallExistsUnfoldsToTheClassicalDefinition) {
  RunConfig cfg = testing::stdlib_config();
  cfg.mode = Mode::kImpredicative;
  Session s = stdlib_session(cfg);
  // Unfolded by hand: Ex A Q = Not (forall A [x] Not (Q x))
  //                          = imp (forall A [x] imp (Q x) bot) bot.
  Expr got = s.reduce("[P : Set Nat -> prop] V (existsbar (Set Nat) P)");
  Expr want = s.reduce(
      "[P : Set Nat -> prop] imp (forall (Set Nat) [x : Set Nat] imp (V (P x)) bot) bot");
  EXPECT_TRUE(alpha_eq(got, want)) << print(got) << "\n" << print(want);
}

TEST(Stdlib, OverlayLeavesEarlierKindsUnchanged) {
  Session pred = stdlib_session();
  RunConfig cfg = testing::stdlib_config();
  cfg.mode = Mode::kImpredicative;
  Session impred = stdlib_session(cfg);
  for (const auto& name : pred.signature().order()) {
    auto a = pred.signature().kind_of(name);
    auto b = impred.signature().kind_of(name);
    ASSERT_TRUE(b.has_value()) << name;
    EXPECT_TRUE(alpha_eq(*a, *b)) << name;
  }
}

TEST(Stdlib, PropCanLiveAtType) {
  RunConfig cfg = testing::stdlib_config();
  cfg.prop_at = PropPlacement::kType;
  Session s = stdlib_session(cfg);
  EXPECT_EQ(print(kind_of_text(s, "prop")), "Type");
  EXPECT_EQ(s.signature().constant_count(), 38u);
}

TEST(Stdlib, StrippedManifestLoads) {
  RunConfig cfg = testing::stdlib_config();
  cfg.stdlib_manifest = source_path("stdlib/manifest_stripped.txt");
  Session s = stdlib_session(cfg);
  EXPECT_FALSE(s.signature().contains("U"));
  EXPECT_FALSE(s.signature().contains("prop"));
  EXPECT_FALSE(s.signature().contains("Set"));
  EXPECT_TRUE(s.signature().contains("E_Arrow"));
}

// Categories.

TEST(Category, Classification) {
  Category n = Category::base_n();
  EXPECT_TRUE(n.basic());
  EXPECT_TRUE(Category::prod(n, n).basic());
  EXPECT_FALSE(Category::fun(n, n).basic());
  EXPECT_FALSE(Category::set_of(n).basic());
  EXPECT_FALSE(Category::prod(n, Category::set_of(n)).basic());
  EXPECT_EQ(Category::fun(n, Category::prod(n, n)).depth(), 3);
}

TEST(Category, EnumerationCounts) {
  // Depth 1: N. Depth 2: N x N, N => N, Set(N). Depth 3: 15 products and
  // 15 function categories with a depth-2 side, plus 3 sets.
  EXPECT_EQ(enumerate_categories(1).size(), 1u);
  EXPECT_EQ(enumerate_categories(2).size(), 4u);
  EXPECT_EQ(enumerate_categories(3).size(), 37u);
  for (const auto& c : enumerate_categories(3)) EXPECT_LE(c.depth(), 3);
}

TEST(Category, EqualityOnNat) {
  Session s = stdlib_session();
  Expr e = generate_equality(Category::base_n());
  EXPECT_EQ(print(e), "[a : Nat] [b : Nat] Eq hatNat a b");
}

TEST(Category, EqualityOnSetsIsExtensional) {
  Session s = stdlib_session();
  Expr e = generate_equality(Category::set_of(Category::base_n()));
  EXPECT_EQ(print(e),
            "[a : Set Nat] [b : Set Nat] forall Nat ([x : Nat] Iff (In Nat x a) (In Nat x b))");
}

TEST(Category, EqualityOnFunctionsIsPointwise) {
  Category n = Category::base_n();
  Expr e = generate_equality(Category::fun(n, n));
  std::string p = print(e);
  EXPECT_EQ(p.rfind("[a : Arrow Nat Nat] [b : Arrow Nat Nat] forall Nat ([x : Nat] Eq hatNat (E_Arrow", 0), 0u)
      << p;
}

TEST(Category, BasicProductsUseTheirUniverseName) {
  Category n = Category::base_n();
  Expr e = generate_equality(Category::prod(n, n));
  EXPECT_EQ(print(e), "[a : Times Nat Nat] [b : Times Nat Nat] Eq (hatTimes hatNat hatNat) a b");
}

TEST(Category, EveryGeneratedEqualityKindChecks) {
  Session s = stdlib_session();
  Kernel k(s.signature());
  for (const auto& c : enumerate_categories(3)) {
    Expr car = Expr::el(carrier(c));
    Expr want = Expr::arrow(car, Expr::arrow(car, Expr::prop()));
    Expr e = generate_equality(c);
    EXPECT_NO_THROW(k.check(Context{}, e, want)) << c.to_string();
    if (c.basic()) {
      Expr body = e.body().body();
      EXPECT_EQ(decompose(body).head.name(), "Eq") << c.to_string();
    }
  }
}

TEST(Category, ReflexivityIsProvable) {
  Session s = stdlib_session();
  Kernel k(s.signature());
  for (const auto& c : enumerate_categories(3)) {
    Expr car = Expr::el(carrier(c));
    Expr a = Expr::var("a");
    Expr want = Expr::pi("a", car, Expr::prf(equality_on(c, a, a)));
    EXPECT_NO_THROW(k.check(Context{}, reflexivity_proof(c), want)) << c.to_string();
  }
}

TEST(Category, ReflexivityScriptsCheck) {
  Session s = stdlib_session();
  FileReport r = s.check_file(source_path("corpus/equality.lf"));
  ASSERT_TRUE(r.accepted) << (r.error ? r.error->render() : "");
}

}  // namespace
}  // namespace lttw
