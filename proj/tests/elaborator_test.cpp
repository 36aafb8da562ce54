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

#include <memory>
#include <string>

#include <gtest/gtest.h>

#include "lttw/elaborator.hpp"
#include "lttw/kernel.hpp"
#include "lttw/parser.hpp"
#include "lttw/printer.hpp"
#include "lttw/session.hpp"
#include "test_support.hpp"

namespace lttw {
namespace {

class Elab : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    session_ = std::make_unique<Session>(testing::stdlib_session());
    ASSERT_TRUE(session_->check_file(testing::source_path("corpus/arith.lf")).accepted);
  }
  static void TearDownTestSuite() { session_.reset(); }

  // Elaborates `term` against `kind` and kernel-checks the result.
  static Expr check(const std::string& term, const std::string& kind) {
    const Signature& sig = session_->signature();
    Elaborator el(sig, session_->elab_options());
    Scope scope;
    Expr k = el.kind(scope, parse_term(kind));
    Expr t = el.check(scope, parse_term(term), k);
    el.finish();
    t = el.zonk(t);
    Kernel(sig).check(Context(), t, el.zonk(k));
    return t;
  }

  static ErrorClass failure(const std::string& script) {
    Session s = testing::stdlib_session();
    FileReport r = s.check_source(script, "t.lf");
    if (r.accepted) return ErrorClass::kMismatchedOutcome;
    return r.error->error_class;
  }

  static std::unique_ptr<Session> session_;
};

std::unique_ptr<Session> Elab::session_;

TEST_F(Elab, ElIsInsertedForTypes) {
  Expr t = check("[x : Nat] x", "Nat -> Nat");
  ASSERT_TRUE(t.is(Tag::kLam));
  EXPECT_TRUE(t.domain().is(Tag::kEl));
}

TEST_F(Elab, PrfIsInsertedForPropositions) {
  Expr k = session_->type_of("TopI");
  EXPECT_TRUE(k.is(Tag::kPrf));
}

TEST_F(Elab, NumeralsAreUnary) {
  EXPECT_TRUE(alpha_eq(check("3", "Nat"), testing::numeral(3)));
  EXPECT_TRUE(alpha_eq(check("0", "Nat"), testing::numeral(0)));
}

TEST_F(Elab, HolesAreSolvedByUnification) {
  Expr t = check("EqI ? 2", "Prf (Eq hatNat 2 2)");
  EXPECT_FALSE(t.has_meta());
  EXPECT_EQ(print(t), "EqI hatNat (succ (succ zero))");
}

TEST_F(Elab, HolesInsideProofs) {
  check("impI ? ? [h : Prf Top] h", "Prf (imp Top Top)");
  check("forallI ? ? [x : Nat] EqI hatNat x", "Prf (forall Nat [x : Nat] Eq hatNat x x)");
  check("[p : Prf (And Top bot)] AndE1 ? ? p", "Prf (And Top bot) -> Prf Top");
}

TEST_F(Elab, UniverseDecodingIsInvertedForHoles) {
  // The hole in pair ? ? must be solved from T ?A = Nat.
  check("fst ? ? (pair ? ? 1 2)", "Nat");
}

TEST_F(Elab, ConversionDuringChecking) {
  check("EqI hatNat 5", "Prf (Eq hatNat (plus 2 3) 5)");
  check("EqI hatNat 6", "Prf (Eq hatNat (mult 2 3) 6)");
}

TEST_F(Elab, UnannotatedLambdaTakesTheExpectedDomain) {
  Expr t = check("[x] succ x", "Nat -> Nat");
  EXPECT_TRUE(alpha_eq(t.domain(), Expr::el(Expr::constant("Nat"))));
}

TEST_F(Elab, WrongProofIsAKindMismatch) {
  EXPECT_EQ(failure("> [p = EqI hatNat 2 : Prf (Eq hatNat 2 3)];\n"), ErrorClass::kKindMismatch);
}

TEST_F(Elab, UnsolvedHole) {
  EXPECT_EQ(failure("> [x = ? : Nat];\n"), ErrorClass::kUnsolvedMeta);
}

TEST_F(Elab, UnknownNames) {
  EXPECT_EQ(failure("> [x = nope : Nat];\n"), ErrorClass::kUnknownConstant);
}

TEST_F(Elab, ApplyingANonFunction) {
  EXPECT_EQ(failure("> [x = zero zero : Nat];\n"), ErrorClass::kNotAProduct);
}

TEST_F(Elab, ArgumentOfTheWrongKind) {
  EXPECT_EQ(failure("> [x = succ Nat : Nat];\n"), ErrorClass::kDomainMismatch);
}

TEST_F(Elab, OccursCheck) {
  EXPECT_EQ(failure(testing::read_corpus("negative/occurs.lf")), ErrorClass::kOccursCheck);
}

TEST_F(Elab, ScopeEscape) {
  EXPECT_EQ(failure(testing::read_corpus("negative/escape.lf")), ErrorClass::kScopeEscape);
}

TEST_F(Elab, BinderShadowingConstants) {
  // A bound variable named like a constant refers to the binder.
  check("[zero : Nat] succ zero", "Nat -> Nat");
}

TEST_F(Elab, SmallPropositionsMustBeDecoded) {
  // top lives in the universe prop; only its decoding V top is a proposition.
  EXPECT_EQ(failure("> [p = TopI : Prf top];\n"), ErrorClass::kIllFormedKind);
  EXPECT_NE(failure("> [p = ? : Prf (V top)];\n"), ErrorClass::kIllFormedKind);
}

TEST(ElabImpredicative, ReflectionIntoTheUniverse) {
  RunConfig cfg = testing::stdlib_config();
  cfg.mode = Mode::kImpredicative;
  Session s = testing::stdlib_session(cfg);
  FileReport r = s.check_source(
      "> [all_refl = set Nat [n : Nat] forall Nat [m : Nat] Eq hatNat m m];\n", "t.lf");
  EXPECT_TRUE(r.accepted) << (r.error ? r.error->render() : "");
  Session p = testing::stdlib_session();
  FileReport q = p.check_source(
      "> [all_refl = set Nat [n : Nat] forall Nat [m : Nat] Eq hatNat m m];\n", "t.lf");
  EXPECT_FALSE(q.accepted);
}

}  // namespace
}  // namespace lttw
