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

#include "reduce.hpp"

#include "lttw/error.hpp"
#include "lttw/printer.hpp"

namespace lttw {

void Reducer::tick() {
  if (fuel_ == 0) {
    throw Error(ErrorClass::kFuelExhausted,
                "reduction step limit of " +
                    std::to_string(sig_.options().fuel) + " exhausted",
                "computation");
  }
  --fuel_;
}

MatchResult Reducer::match(const RewriteRule& rule, std::vector<Expr>& args,
                           std::vector<std::pair<std::string, Expr>>& bindings,
                           std::optional<MetaId>* blocker) {
  bindings.clear();
  bool blocked = false;
  for (std::size_t i = 0; i < rule.lhs_args.size(); ++i) {
    const Pattern& p = rule.lhs_args[i];
    switch (p.form) {
      case Pattern::Form::kVar:
        bindings.emplace_back(p.name, args[i]);
        break;
      case Pattern::Form::kInaccessible:
        break;
      case Pattern::Form::kConstructor: {
        args[i] = whnf(args[i]);
        Spine sp = decompose(args[i]);
        if (sp.head.is(Tag::kMeta)) {
          if (blocker && !blocked) *blocker = sp.head.meta_id();
          blocked = true;
          break;
        }
        if (!sp.head.is_const(p.name) || sp.args.size() != p.args.size()) {
          return MatchResult::kFail;
        }
        for (std::size_t j = 0; j < p.args.size(); ++j) {
          if (p.args[j].form == Pattern::Form::kVar) {
            bindings.emplace_back(p.args[j].name, sp.args[j]);
          }
        }
        break;
      }
    }
  }
  return blocked ? MatchResult::kBlocked : MatchResult::kMatch;
}

std::optional<Expr> Reducer::try_rules(const Spine& sp,
                                       std::vector<Expr>& args) {
  const auto& rules = sig_.rules_for(sp.head.name());
  std::vector<std::pair<std::string, Expr>> bindings;
  for (const auto& rule : rules) {
    if (rule.lhs_args.size() > args.size()) continue;
    if (match(rule, args, bindings) != MatchResult::kMatch) continue;
    tick();
    Expr r = subst_all(rule.rhs, bindings);
    for (std::size_t i = rule.lhs_args.size(); i < args.size(); ++i) {
      r = Expr::app(r, args[i]);
    }
    return r;
  }
  return std::nullopt;
}

std::optional<Expr> Reducer::step(const Expr& t) {
  Spine sp = decompose(t);
  if (sp.head.is(Tag::kLam) && !sp.args.empty()) {
    tick();
    Expr r = subst(sp.head.body(), sp.head.name(), sp.args[0]);
    for (std::size_t i = 1; i < sp.args.size(); ++i) r = Expr::app(r, sp.args[i]);
    return r;
  }
  if (sp.head.is(Tag::kConst)) {
    if (const Abbrev* a = sig_.find_abbrev(sp.head.name())) {
      tick();
      return Expr::apps(a->definiens, sp.args);
    }
    std::vector<Expr> args = sp.args;
    return try_rules(sp, args);
  }
  return std::nullopt;
}

Expr Reducer::whnf(const Expr& t) {
  Expr cur = t;
  while (auto next = step(cur)) cur = *next;
  return cur;
}

Expr Reducer::normalize(const Expr& t) {
  switch (t.tag()) {
    case Tag::kType:
    case Tag::kProp:
      return t;
    case Tag::kEl:
      return Expr::el(normalize(t.inner()));
    case Tag::kPrf:
      return Expr::prf(normalize(t.inner()));
    case Tag::kPi:
      return Expr::pi(t.name(), normalize(t.domain()), normalize(t.codomain()));
    default:
      break;
  }
  Expr w = whnf(t);
  if (w.is(Tag::kLam)) {
    return Expr::lam(w.name(), normalize(w.domain()), normalize(w.body()));
  }
  Spine sp = decompose(w);
  Expr out = sp.head;
  for (const auto& a : sp.args) out = Expr::app(out, normalize(a));
  return out;
}

namespace {

bool same_head(const Expr& a, const Expr& b) {
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Tag::kVar:
    case Tag::kConst:
      return a.name() == b.name();
    case Tag::kMeta:
      return a.meta_id() == b.meta_id();
    default:
      return false;
  }
}

std::string common_fresh(const std::string& base, const Expr& a, const Expr& b) {
  return fresh_name(base, [&](const std::string& s) {
    return occurs_free(a, s) || occurs_free(b, s);
  });
}

}  // namespace

bool Reducer::conv(const Expr& a, const Expr& b) {
  if (alpha_eq(a, b)) return true;

  // Same abbreviation at the head: comparing arguments first avoids
  // unfolding large definitions that are syntactically shared.
  Spine sa = decompose(a);
  Spine sb = decompose(b);
  if (sa.head.is(Tag::kConst) && sb.head.is(Tag::kConst) &&
      sa.head.name() == sb.head.name() && sa.args.size() == sb.args.size() &&
      sig_.find_abbrev(sa.head.name())) {
    bool all = true;
    for (std::size_t i = 0; i < sa.args.size() && all; ++i) {
      all = conv(sa.args[i], sb.args[i]);
    }
    if (all) return true;
  }

  Expr wa = whnf(a);
  Expr wb = whnf(b);
  if (wa.is(Tag::kLam) && wb.is(Tag::kLam)) {
    if (!conv_kinds(wa.domain(), wb.domain())) return false;
    std::string z = common_fresh(wa.name(), wa, wb);
    return conv(subst(wa.body(), wa.name(), Expr::var(z)),
                subst(wb.body(), wb.name(), Expr::var(z)));
  }
  if (wa.is(Tag::kLam) || wb.is(Tag::kLam)) {
    const Expr& lam = wa.is(Tag::kLam) ? wa : wb;
    const Expr& other = wa.is(Tag::kLam) ? wb : wa;
    std::string z = common_fresh(lam.name(), lam, other);
    return conv(subst(lam.body(), lam.name(), Expr::var(z)),
                Expr::app(other, Expr::var(z)));
  }
  sa = decompose(wa);
  sb = decompose(wb);
  if (!same_head(sa.head, sb.head) || sa.args.size() != sb.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < sa.args.size(); ++i) {
    if (!conv(sa.args[i], sb.args[i])) return false;
  }
  return true;
}

bool Reducer::conv_kinds(const Expr& a, const Expr& b) {
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Tag::kType:
    case Tag::kProp:
      return true;
    case Tag::kEl:
    case Tag::kPrf:
      return conv(a.inner(), b.inner());
    case Tag::kPi: {
      if (!conv_kinds(a.domain(), b.domain())) return false;
      std::string z = common_fresh(a.name(), a, b);
      return conv_kinds(subst(a.codomain(), a.name(), Expr::var(z)),
                        subst(b.codomain(), b.name(), Expr::var(z)));
    }
    default:
      return false;
  }
}

}  // namespace lttw
