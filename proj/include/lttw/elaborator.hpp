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

// Elaboration of surface terms into kernel terms.
//
// A hole `?` checked against kind K in context x1:K1, ..., xn:Kn becomes
// `?m x1 ... xn` with ?m : (x1:K1)...(xn:Kn) K. Unification is first order:
// `?m y1 ... yk =?= t` with distinct variables yi is solved by
// ?m := [y1] ... [yk] t, provided ?m does not occur in t and t mentions no
// other variable. Constraints that are stuck (a computation rule blocked on
// an unsolved metavariable, or a non-pattern spine) are postponed. When
// nothing else makes progress, a stuck `T ?m =?= t` or `V ?m =?= t` is
// attacked by trying each constructor of the decoder's rules and keeping the
// unique one that fits.

#ifndef LTTW_ELABORATOR_HPP_
#define LTTW_ELABORATOR_HPP_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lttw/expr.hpp"
#include "lttw/kernel.hpp"
#include "lttw/signature.hpp"
#include "lttw/syntax.hpp"

namespace lttw {

struct ElabOptions {
  // Heads whose computation rules may be inverted to solve a blocked
  // metavariable.
  std::set<std::string> inversion_heads{"T", "V"};
  int inversion_depth = 3;
  // Impredicative mode: a Prop-valued term checked against the proposition
  // universe is reflected into it (forall to forallbar, imp to hatImp, ...).
  bool reflect_props = false;
};

struct MetaInfo {
  Expr kind;  // closed over the context it was created in
  std::optional<Expr> solution;
  SourceSpan span;
};

struct Constraint {
  Context ctx;
  Expr lhs;
  Expr rhs;
  bool kinds = false;
  ErrorClass on_failure = ErrorClass::kUnificationFailure;
  std::string what;  // top-level description used when the constraint fails
  SourceSpan span;
};

struct MetaState {
  std::vector<MetaInfo> metas;
  std::vector<Constraint> postponed;
};

// Name resolution scope: surface binder names mapped to kernel names, with
// the kernel context they live in.
class Scope {
 public:
  Scope() = default;
  explicit Scope(Context ctx);

  const Context& context() const { return ctx_; }
  std::optional<std::string> resolve(const std::string& surface) const;
  // Adds a binder and returns its kernel name, freshened against the context
  // and the signature's constants.
  std::string bind(const std::string& surface, const Expr& kind,
                   const Signature& sig);

 private:
  Context ctx_;
  std::vector<std::pair<std::string, std::string>> names_;
};

// One elaboration problem (typically one command). Metavariables live as
// long as the object.
class Elaborator {
 public:
  Elaborator(const Signature& sig, ElabOptions opts = {});

  // Returns the elaborated term and its kind. Metavariables may remain until
  // finish() is called.
  std::pair<Expr, Expr> infer(Scope& scope, const STermPtr& s);
  Expr check(Scope& scope, const STermPtr& s, const Expr& kind);
  Expr kind(Scope& scope, const STermPtr& s);

  // Solves what can be solved; throws UnsolvedMeta, UnificationFailure or
  // the class recorded with a failed constraint.
  void finish();
  // Replaces solved metavariables by their solutions.
  Expr zonk(const Expr& e) const;

  // Inaccessible `.x` patterns resolve like `x` while this is set.
  void allow_dotted(bool on) { allow_dotted_ = on; }

  const MetaState& state() const { return st_; }

 private:
  friend class Unifier;

  Expr fresh_meta(const Context& ctx, const Expr& kind, const SourceSpan& span);
  Expr check_inner(Scope& scope, const STermPtr& s, const Expr& kind,
                   ErrorClass on_mismatch);
  Expr numeral(const STermPtr& s);
  Expr reflect(const Context& ctx, const Expr& t, const SourceSpan& span);
  void unify(const Context& ctx, const Expr& a, const Expr& b, bool kinds,
             ErrorClass on_failure, const std::string& what,
             const SourceSpan& span);
  std::size_t solved_count() const;
  void wake();
  bool invert_stuck(int depth);

  const Signature& sig_;
  ElabOptions opts_;
  MetaState st_;
  bool allow_dotted_ = false;
};

}  // namespace lttw

#endif  // LTTW_ELABORATOR_HPP_
