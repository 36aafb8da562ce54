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

#include "lttw/signature.hpp"

#include <map>

#include "lttw/error.hpp"
#include "lttw/kernel.hpp"
#include "lttw/printer.hpp"

namespace lttw {

Expr pattern_to_expr(const Pattern& p) {
  switch (p.form) {
    case Pattern::Form::kVar:
    case Pattern::Form::kInaccessible:
      return Expr::var(p.name);
    case Pattern::Form::kConstructor: {
      Expr e = Expr::constant(p.name);
      for (const auto& a : p.args) e = Expr::app(e, pattern_to_expr(a));
      return e;
    }
  }
  return {};
}

Expr RewriteRule::lhs() const {
  Expr e = Expr::constant(head);
  for (const auto& p : lhs_args) e = Expr::app(e, pattern_to_expr(p));
  return e;
}

const ConstDecl* Signature::find_constant(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) return nullptr;
  return std::get_if<ConstDecl>(&it->second);
}

const Abbrev* Signature::find_abbrev(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) return nullptr;
  return std::get_if<Abbrev>(&it->second);
}

std::optional<Expr> Signature::kind_of(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) return std::nullopt;
  return std::visit([](const auto& e) { return e.kind; }, it->second);
}

const std::vector<RewriteRule>& Signature::rules_for(
    const std::string& head) const {
  static const std::vector<RewriteRule> kNone;
  auto it = rules_.find(head);
  return it == rules_.end() ? kNone : it->second;
}

std::vector<const RewriteRule*> Signature::rules() const {
  std::vector<const RewriteRule*> out;
  for (const auto& [head, idx] : rule_order_) {
    out.push_back(&rules_.at(head)[idx]);
  }
  return out;
}

void Signature::insert(SignatureEntry e) {
  std::string name = std::visit([](const auto& x) { return x.name; }, e);
  if (std::holds_alternative<ConstDecl>(e)) ++constants_;
  entries_.emplace(name, std::move(e));
  order_.push_back(std::move(name));
}

void Signature::insert_rule(RewriteRule r) {
  auto& v = rules_[r.head];
  rule_order_.emplace_back(r.head, v.size());
  v.push_back(std::move(r));
  ++rule_count_;
}

SignatureEntry lookup(const Signature& sig, const std::string& name) {
  if (const ConstDecl* c = sig.find_constant(name)) return *c;
  if (const Abbrev* a = sig.find_abbrev(name)) return *a;
  throw Error(ErrorClass::kNotFound, "no constant named '" + name + "'");
}

namespace {

void require_fresh(const Signature& sig, const std::string& name) {
  if (sig.contains(name)) {
    throw Error(ErrorClass::kDuplicateName,
                "'" + name + "' is already declared", "signature extension");
  }
}

void check_patterns(const Signature& sig, const RewriteRule& rule) {
  std::map<std::string, int> bound;
  std::vector<std::string> dotted;
  auto visit_var = [&](const Pattern& p) {
    if (p.form == Pattern::Form::kInaccessible) {
      dotted.push_back(p.name);
      return;
    }
    if (++bound[p.name] > 1) {
      throw Error(ErrorClass::kNonLinearPattern,
                  "pattern variable '" + p.name +
                      "' occurs more than once on the left-hand side",
                  "computation rule");
    }
  };
  for (const auto& p : rule.lhs_args) {
    if (p.form != Pattern::Form::kConstructor) {
      visit_var(p);
      continue;
    }
    if (!sig.find_constant(p.name)) {
      throw Error(sig.contains(p.name) ? ErrorClass::kBadPattern
                                       : ErrorClass::kUnknownConstant,
                  "'" + p.name + "' is not a declared constructor constant",
                  "computation rule");
    }
    for (const auto& sub : p.args) {
      if (sub.form == Pattern::Form::kConstructor) {
        throw Error(ErrorClass::kBadPattern,
                    "constructor patterns may only be applied to variables",
                    "computation rule");
      }
      visit_var(sub);
    }
  }
  for (const auto& d : dotted) {
    if (!bound.count(d)) {
      throw Error(ErrorClass::kBadPattern,
                  "inaccessible pattern '." + d +
                      "' does not name a variable bound by the pattern",
                  "computation rule");
    }
  }
  for (const auto& [name, kind] : rule.pattern_vars) {
    if (!bound.count(name)) {
      throw Error(ErrorClass::kBadPattern,
                  "rule variable '" + name + "' is not bound by the pattern",
                  "computation rule");
    }
  }
  for (const auto& [name, n] : bound) {
    bool declared = false;
    for (const auto& pv : rule.pattern_vars) declared |= pv.first == name;
    if (!declared) {
      throw Error(ErrorClass::kBadPattern,
                  "pattern variable '" + name + "' has no declared kind",
                  "computation rule");
    }
  }
}

// Two rules for one head may coexist only if, at the first position where
// either has a constructor pattern, both have different constructors.
void check_overlap(const Signature& sig, const RewriteRule& rule) {
  for (const auto& other : sig.rules_for(rule.head)) {
    bool distinct = false;
    std::size_t n = std::min(rule.lhs_args.size(), other.lhs_args.size());
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = rule.lhs_args[i];
      const auto& b = other.lhs_args[i];
      bool ca = a.form == Pattern::Form::kConstructor;
      bool cb = b.form == Pattern::Form::kConstructor;
      if (!ca && !cb) continue;
      distinct = ca && cb && a.name != b.name;
      break;
    }
    if (!distinct) {
      throw Error(ErrorClass::kOverlappingRule,
                  "rule for '" + rule.head + "' overlaps the existing rule " +
                      print(other.lhs()) + " = " + print(other.rhs),
                  "computation rule");
    }
  }
}

}  // namespace

Signature declare_constant(Signature sig, const std::string& name,
                           const Expr& kind) {
  require_fresh(sig, name);
  Kernel k(sig);
  try {
    k.check_kind_valid(Context{}, kind);
  } catch (const Error& e) {
    Diagnostic d = e.diagnostic();
    d.error_class = ErrorClass::kIllFormedKind;
    d.message = "kind of '" + name + "' is ill-formed: " + d.message;
    throw Error(std::move(d));
  }
  sig.insert(ConstDecl{name, kind});
  return sig;
}

Signature declare_rewrite(Signature sig, RewriteRule rule) {
  if (!sig.contains(rule.head)) {
    throw Error(ErrorClass::kUnknownConstant,
                "unknown constant '" + rule.head + "' at the head of a rule",
                "computation rule");
  }
  if (!sig.find_constant(rule.head)) {
    throw Error(ErrorClass::kHeadNotConstant,
                "the head '" + rule.head +
                    "' of a computation rule must be a declared constant, "
                    "not a definition",
                "computation rule");
  }
  check_patterns(sig, rule);
  check_overlap(sig, rule);

  Kernel k(sig);
  Context ctx(rule.pattern_vars);
  k.check_context(ctx);
  k.check_kind_valid(ctx, rule.result_kind);
  Expr lhs = rule.lhs();
  Expr lhs_kind = k.infer_kind(ctx, lhs);
  if (!k.equal_kinds(lhs_kind, rule.result_kind)) {
    throw Error(ErrorClass::kKindMismatch,
                "left-hand side " + print(lhs) + " has kind " +
                    print(lhs_kind) + ", not " + print(rule.result_kind),
                "computation rule",
                print_context(ctx.entries()) + " |- " + print(lhs) + " : " +
                    print(rule.result_kind));
  }
  Expr rhs_kind = k.infer_kind(ctx, rule.rhs);
  if (!k.equal_kinds(rhs_kind, rule.result_kind)) {
    throw Error(ErrorClass::kKindMismatch,
                "right-hand side " + print(rule.rhs) + " has kind " +
                    print(rhs_kind) + ", not " + print(rule.result_kind),
                "computation rule",
                print_context(ctx.entries()) + " |- " + print(rule.rhs) +
                    " : " + print(rule.result_kind));
  }
  sig.insert_rule(std::move(rule));
  return sig;
}

Signature define(Signature sig, const std::string& name, const Expr& body,
                 const std::optional<Expr>& ascription) {
  require_fresh(sig, name);
  Kernel k(sig);
  Expr inferred = k.infer_kind(Context{}, body);
  Expr kind = inferred;
  if (ascription) {
    k.check_kind_valid(Context{}, *ascription);
    if (!k.equal_kinds(inferred, *ascription)) {
      throw Error(ErrorClass::kAscriptionMismatch,
                  "'" + name + "' has kind " + print(inferred) +
                      " but is ascribed " + print(*ascription),
                  "equality typing");
    }
    kind = *ascription;
  }
  sig.insert(Abbrev{name, body, kind});
  return sig;
}

}  // namespace lttw
