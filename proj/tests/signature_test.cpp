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

#include <string>
#include <variant>

#include <gtest/gtest.h>

#include "lttw/error.hpp"
#include "lttw/session.hpp"
#include "lttw/signature.hpp"

namespace lttw {
namespace {

Expr v(const char* n) { return Expr::var(n); }
Expr c(const char* n) { return Expr::constant(n); }
Expr nat() { return Expr::el(c("Nat")); }

const char* kPrelude =
    "> [Nat : Type];\n> [zero : Nat];\n> [succ : Nat -> Nat];\n"
    "> [plus : Nat -> Nat -> Nat];\n";

// Checks a script in a bare session and returns the error class, if any.
std::optional<ErrorClass> outcome(const std::string& script) {
  Session s{RunConfig{}};
  FileReport r = s.check_source(std::string(kPrelude) + script, "t.lf");
  if (r.accepted) return std::nullopt;
  return r.error->error_class;
}

TEST(Signature, DeclareAndLookup) {
  Signature s;
  s = declare_constant(std::move(s), "Nat", Expr::type());
  s = define(std::move(s), "N", c("Nat"), Expr::type());
  EXPECT_TRUE(s.contains("Nat"));
  EXPECT_TRUE(std::holds_alternative<ConstDecl>(lookup(s, "Nat")));
  EXPECT_TRUE(std::holds_alternative<Abbrev>(lookup(s, "N")));
  EXPECT_EQ(s.constant_count(), 1u);
  EXPECT_EQ(s.abbrev_count(), 1u);
  EXPECT_EQ(s.order(), (std::vector<std::string>{"Nat", "N"}));
  try {
    lookup(s, "M");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.error_class(), ErrorClass::kNotFound);
  }
}

TEST(Signature, DefinitionKindIsInferred) {
  Signature s;
  s = declare_constant(std::move(s), "Nat", Expr::type());
  s = declare_constant(std::move(s), "zero", nat());
  s = define(std::move(s), "z", c("zero"), std::nullopt);
  ASSERT_TRUE(s.kind_of("z"));
  EXPECT_TRUE(alpha_eq(*s.kind_of("z"), nat()));
}

TEST(Signature, ExtensionIsPersistent) {
  Signature a;
  a = declare_constant(std::move(a), "Nat", Expr::type());
  Signature b = declare_constant(a, "zero", nat());
  EXPECT_FALSE(a.contains("zero"));
  EXPECT_TRUE(b.contains("zero"));
}

TEST(Signature, DuplicateNames) {
  Signature s;
  s = declare_constant(std::move(s), "Nat", Expr::type());
  EXPECT_THROW(declare_constant(s, "Nat", Expr::type()), Error);
  EXPECT_EQ(outcome("> [zero : Nat];\n"), ErrorClass::kDuplicateName);
  EXPECT_EQ(outcome("> [one = succ zero];\n> [one = zero];\n"), ErrorClass::kDuplicateName);
}

TEST(Signature, IllFormedDeclarations) {
  EXPECT_EQ(outcome("> [bad : zero];\n"), ErrorClass::kIllFormedKind);
  EXPECT_EQ(outcome("> [bad : Nat -> zero];\n"), ErrorClass::kIllFormedKind);
  EXPECT_EQ(outcome("> [bad : Missing];\n"), ErrorClass::kUnknownConstant);
}

TEST(Signature, AscriptionMismatch) {
  EXPECT_TRUE(outcome("> [one = succ zero : Nat -> Nat];\n").has_value());
  EXPECT_FALSE(outcome("> [one = succ zero : Nat];\n").has_value());
}

TEST(Signature, AcceptedRules) {
  EXPECT_FALSE(outcome("> [rule [m : Nat] plus m zero = m];\n"
                       "> [rule [m, n : Nat] plus m (succ n) = succ (plus m n)];\n")
                   .has_value());
}

TEST(Signature, NonLinearPatterns) {
  EXPECT_EQ(outcome("> [rule [m : Nat] plus m m = m];\n"), ErrorClass::kNonLinearPattern);
}

TEST(Signature, HeadMustBeAConstant) {
  EXPECT_EQ(outcome("> [rule [f : Nat -> Nat] f zero = zero];\n"),
            ErrorClass::kHeadNotConstant);
}

TEST(Signature, DefinitionsCannotHeadRules) {
  EXPECT_TRUE(outcome("> [one = succ zero];\n> [rule one = zero];\n").has_value());
}

TEST(Signature, OverlappingRules) {
  EXPECT_EQ(outcome("> [rule [m : Nat] plus m zero = m];\n"
                    "> [rule [n : Nat] plus zero n = n];\n"),
            ErrorClass::kOverlappingRule);
  EXPECT_EQ(outcome("> [rule [m : Nat] plus m zero = m];\n"
                    "> [rule [m, n : Nat] plus m n = m];\n"),
            ErrorClass::kOverlappingRule);
}

TEST(Signature, FirstConstructorPositionDecidesOverlap) {
  EXPECT_FALSE(outcome("> [rule plus zero zero = zero];\n"
                       "> [rule [m : Nat] plus (succ m) zero = m];\n")
                   .has_value());
  // Same first constructor: rejected even though a later position differs.
  EXPECT_EQ(outcome("> [rule plus zero zero = zero];\n"
                    "> [rule [m : Nat] plus zero (succ m) = m];\n"),
            ErrorClass::kOverlappingRule);
}

TEST(Signature, EveryRuleVariableOccursInThePattern) {
  EXPECT_EQ(outcome("> [rule [m : Nat] plus zero zero = zero];\n"), ErrorClass::kBadPattern);
}

TEST(Signature, RuleSidesMustAgree) {
  EXPECT_TRUE(outcome("> [rule [m : Nat] plus m zero = succ];\n").has_value());
}

TEST(Signature, PatternVariablesMustBeBound) {
  EXPECT_TRUE(outcome("> [rule [m : Nat] plus m zero = n];\n").has_value());
}

TEST(Signature, RulesAreListedInOrder) {
  Session s{RunConfig{}};
  FileReport r = s.check_source(std::string(kPrelude) +
                                    "> [rule [m : Nat] plus m zero = m];\n"
                                    "> [rule [m, n : Nat] plus m (succ n) = succ (plus m n)];\n",
                                "t.lf");
  ASSERT_TRUE(r.accepted);
  EXPECT_EQ(s.signature().rule_count(), 2u);
  auto rules = s.signature().rules();
  ASSERT_EQ(rules.size(), 2u);
  EXPECT_EQ(rules[0]->lhs_args[1].name, "zero");
  EXPECT_EQ(rules[1]->lhs_args[1].name, "succ");
  EXPECT_EQ(s.signature().rules_for("plus").size(), 2u);
  EXPECT_TRUE(s.signature().rules_for("succ").empty());
}

TEST(Signature, FailedScriptLeavesNoTrace) {
  Session s{RunConfig{}};
  ASSERT_TRUE(s.check_source(kPrelude, "p.lf").accepted);
  FileReport r = s.check_source("> [one = succ zero];\n> [bad : zero];\n", "t.lf");
  EXPECT_FALSE(r.accepted);
  EXPECT_FALSE(s.signature().contains("one"));
  EXPECT_EQ(s.history().size(), 4u);
}

}  // namespace
}  // namespace lttw
