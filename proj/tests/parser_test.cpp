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
#include <vector>

#include <gtest/gtest.h>

#include "lttw/error.hpp"
#include "lttw/parser.hpp"

namespace lttw {
namespace {

using F = STerm::Form;
using K = Command::Kind;

ErrorClass script_error(const std::string& text) {
  try {
    parse_script(text, "t.lf");
  } catch (const Error& e) {
    return e.error_class();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorClass::kMismatchedOutcome;
}

TEST(Parser, Declaration) {
  auto cmds = parse_script("> [Nat : Type];\n");
  ASSERT_EQ(cmds.size(), 1u);
  EXPECT_EQ(cmds[0].kind, K::kDeclare);
  EXPECT_EQ(cmds[0].name, "Nat");
  EXPECT_EQ(cmds[0].term->form, F::kType);
}

TEST(Parser, DeclarationWithBinders) {
  auto cmds = parse_script("> [EqI [A : U] [a : T A] : Prf (Eq A a a)];\n");
  ASSERT_EQ(cmds.size(), 1u);
  ASSERT_EQ(cmds[0].binders.size(), 2u);
  EXPECT_EQ(cmds[0].binders[0].name, "A");
  EXPECT_EQ(cmds[0].binders[1].name, "a");
  EXPECT_EQ(cmds[0].term->form, F::kPrf);
}

TEST(Parser, GroupedBinders) {
  auto cmds = parse_script("> [f [A, B : Type] [x : A] = x];\n");
  ASSERT_EQ(cmds[0].binders.size(), 3u);
  EXPECT_EQ(cmds[0].binders[1].name, "B");
  EXPECT_EQ(cmds[0].binders[1].kind->form, F::kType);
}

TEST(Parser, Definition) {
  auto cmds = parse_script("> [one = succ zero : Nat];\n> [two = succ one];\n");
  ASSERT_EQ(cmds.size(), 2u);
  EXPECT_EQ(cmds[0].kind, K::kDefine);
  ASSERT_TRUE(cmds[0].ascription);
  EXPECT_EQ(print_surface(cmds[0].term), "succ zero");
  EXPECT_FALSE(cmds[1].ascription);
}

TEST(Parser, Rule) {
  auto cmds = parse_script("> [rule [n : Nat] plus n zero = n];\n");
  ASSERT_EQ(cmds.size(), 1u);
  EXPECT_EQ(cmds[0].kind, K::kRule);
  EXPECT_EQ(print_surface(cmds[0].term), "plus n zero");
  EXPECT_EQ(print_surface(cmds[0].rhs), "n");
}

TEST(Parser, Directives) {
  auto cmds = parse_script(
      "> Load \"arith.lf\";\n> TypeOf plus;\n> Reduce plus 1 2;\n"
      "> Check zero : Nat;\n> SetOption fuel 500;\n");
  ASSERT_EQ(cmds.size(), 5u);
  EXPECT_EQ(cmds[0].kind, K::kLoad);
  EXPECT_EQ(cmds[0].name, "arith.lf");
  EXPECT_EQ(cmds[1].kind, K::kTypeOf);
  EXPECT_EQ(cmds[2].kind, K::kReduce);
  EXPECT_EQ(cmds[3].kind, K::kCheck);
  EXPECT_EQ(print_surface(cmds[3].ascription), "Nat");
  EXPECT_EQ(cmds[4].kind, K::kSetOption);
  EXPECT_EQ(cmds[4].name, "fuel");
  EXPECT_EQ(cmds[4].value, "500");
}

TEST(Parser, ProseIsIgnored) {
  auto cmds = parse_script("Some prose [with brackets];\n\n> [Nat : Type];\nmore prose\n");
  ASSERT_EQ(cmds.size(), 1u);
}

TEST(Parser, CommandsSpanLines) {
  auto cmds = parse_script("> [f [x : Nat]\n>   = succ\n>     x];\n");
  ASSERT_EQ(cmds.size(), 1u);
  EXPECT_EQ(print_surface(cmds[0].term), "succ x");
}

TEST(Parser, SpansPointAtTheCommand) {
  auto cmds = parse_script("prose\n> [Nat : Type];\n", "file.lf");
  EXPECT_EQ(cmds[0].span.file, "file.lf");
  EXPECT_EQ(cmds[0].span.line, 2);
}

TEST(Parser, ApplicationIsLeftAssociative) {
  STermPtr t = parse_term("f a b");
  ASSERT_EQ(t->form, F::kApp);
  EXPECT_EQ(t->a->form, F::kApp);
  EXPECT_EQ(t->b->name, "b");
}

TEST(Parser, ArrowIsRightAssociative) {
  STermPtr t = parse_term("A -> B -> C");
  ASSERT_EQ(t->form, F::kArrow);
  EXPECT_EQ(t->a->name, "A");
  EXPECT_EQ(t->b->form, F::kArrow);
}

TEST(Parser, LambdaExtendsToTheRight) {
  STermPtr t = parse_term("f [x : A] g x");
  ASSERT_EQ(t->form, F::kApp);
  EXPECT_EQ(t->a->name, "f");
  ASSERT_EQ(t->b->form, F::kLam);
  EXPECT_EQ(t->b->b->form, F::kApp);
}

TEST(Parser, UnannotatedLambda) {
  STermPtr t = parse_term("[x] x");
  ASSERT_EQ(t->form, F::kLam);
  EXPECT_FALSE(t->a);
}

TEST(Parser, MultiBinderLambdaDesugars) {
  STermPtr t = parse_term("[x, y : A] x");
  ASSERT_EQ(t->form, F::kLam);
  ASSERT_EQ(t->b->form, F::kLam);
  EXPECT_EQ(t->b->name, "y");
}

TEST(Parser, PiAndSorts) {
  STermPtr t = parse_term("(n : Nat) Prf (P n)");
  ASSERT_EQ(t->form, F::kPi);
  EXPECT_EQ(t->name, "n");
  EXPECT_EQ(t->b->form, F::kPrf);
  EXPECT_EQ(parse_term("Type")->form, F::kType);
  EXPECT_EQ(parse_term("Prop")->form, F::kProp);
  EXPECT_EQ(parse_term("El A")->form, F::kEl);
}

TEST(Parser, NumeralsHolesAndDots) {
  EXPECT_EQ(parse_term("42")->form, F::kNumeral);
  EXPECT_EQ(parse_term("42")->name, "42");
  EXPECT_EQ(parse_term("?")->form, F::kHole);
  STermPtr t = parse_term("f .x");
  EXPECT_EQ(t->b->form, F::kDotted);
  EXPECT_EQ(t->b->name, "x");
}

TEST(Parser, IdentifiersMayCarryPrimesAndDigits) {
  EXPECT_EQ(parse_term("setminus'")->name, "setminus'");
  EXPECT_EQ(parse_term("a_1")->name, "a_1");
}

TEST(Parser, Errors) {
  EXPECT_EQ(script_error("> [Nat : ];\n"), ErrorClass::kSyntaxError);
  EXPECT_EQ(script_error("> [Nat : Type)];\n"), ErrorClass::kSyntaxError);
  EXPECT_EQ(script_error("> Frobnicate x;\n"), ErrorClass::kSyntaxError);
  EXPECT_EQ(script_error("> [Nat : Type]\n"), ErrorClass::kUnterminatedCommand);
  EXPECT_EQ(script_error("> [Nat : Type];\n> [Bool : Type\n"),
            ErrorClass::kUnterminatedCommand);
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    parse_script("prose\n> [Nat : ];\n", "e.lf");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.diagnostic().span.file, "e.lf");
    EXPECT_EQ(e.diagnostic().span.line, 2);
  }
}

TEST(Parser, TermErrors) {
  EXPECT_THROW(parse_term("f ("), Error);
  EXPECT_THROW(parse_term(""), Error);
  EXPECT_THROW(parse_term("[x : A"), Error);
}

}  // namespace
}  // namespace lttw
