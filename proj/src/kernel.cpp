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

#include "lttw/kernel.hpp"

#include <algorithm>

#include "lttw/error.hpp"
#include "lttw/printer.hpp"
#include "reduce.hpp"

namespace lttw {

std::optional<Expr> Context::lookup(const std::string& name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->first == name) return it->second;
  }
  return std::nullopt;
}

Context Context::extended(std::string name, Expr kind) const {
  Context c = *this;
  c.push(std::move(name), std::move(kind));
  return c;
}

bool Context::taken(const std::string& name) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.first == name; });
}

Expr Kernel::whnf(const Expr& t) const {
  Reducer r(sig_);
  return r.whnf(t);
}

Expr Kernel::normalize(const Expr& t) const {
  Reducer r(sig_);
  return r.normalize(t);
}

bool Kernel::convertible(const Context&, const Expr& a, const Expr& b,
                         const Expr&) const {
  return convertible(a, b);
}

bool Kernel::convertible(const Expr& a, const Expr& b) const {
  Reducer r(sig_);
  return r.conv(a, b);
}

bool Kernel::equal_kinds(const Context&, const Expr& a, const Expr& b) const {
  return equal_kinds(a, b);
}

bool Kernel::equal_kinds(const Expr& a, const Expr& b) const {
  Reducer r(sig_);
  return r.conv_kinds(a, b);
}

namespace {

std::string judgement(const Context& ctx, const std::string& rhs) {
  return print_context(ctx.entries()) + " |- " + rhs;
}

// Picks a binder name that is not already in the context.
std::string binder_name(const Context& ctx, const std::string& name) {
  return fresh_name(name, [&](const std::string& s) { return ctx.taken(s); });
}

}  // namespace

Expr Kernel::infer_kind(const Context& ctx, const Expr& t) const {
  switch (t.tag()) {
    case Tag::kVar: {
      auto k = ctx.lookup(t.name());
      if (!k) {
        throw Error(ErrorClass::kUnboundVariable,
                    "variable '" + t.name() + "' is not in the context",
                    "assumption", judgement(ctx, t.name() + " : ?"));
      }
      return *k;
    }
    case Tag::kConst: {
      auto k = sig_.kind_of(t.name());
      if (!k) {
        throw Error(ErrorClass::kUnknownConstant,
                    "unknown constant '" + t.name() + "'", "signature lookup",
                    judgement(ctx, t.name() + " : ?"));
      }
      return *k;
    }
    case Tag::kMeta:
      throw Error(ErrorClass::kIllTyped,
                  "unsolved metavariable " + print(t) + " reached the kernel",
                  "assumption");
    case Tag::kLam: {
      check_kind_valid(ctx, t.domain());
      std::string x = binder_name(ctx, t.name());
      Expr body = x == t.name() ? t.body() : subst(t.body(), t.name(), Expr::var(x));
      Context inner = ctx.extended(x, t.domain());
      Expr kb = infer_kind(inner, body);
      return Expr::pi(x, t.domain(), kb);
    }
    case Tag::kApp: {
      Expr kf = infer_kind(ctx, t.fun());
      if (!kf.is(Tag::kPi)) {
        throw Error(ErrorClass::kNotAProduct,
                    "'" + print(t.fun()) + "' has kind " + print(kf) +
                        ", which is not a dependent product",
                    "application", judgement(ctx, print(t) + " : ?"));
      }
      Expr ka = infer_kind(ctx, t.arg());
      if (!equal_kinds(ka, kf.domain())) {
        throw Error(ErrorClass::kDomainMismatch,
                    "argument '" + print(t.arg()) + "' has kind " + print(ka) +
                        " but '" + print(t.fun()) + "' expects " +
                        print(kf.domain()),
                    "application",
                    judgement(ctx, print(ka) + " = " + print(kf.domain())));
      }
      return subst(kf.codomain(), kf.name(), t.arg());
    }
    default:
      throw Error(ErrorClass::kIllTyped,
                  "kind '" + print(t) + "' used where an object is expected",
                  "object formation");
  }
}

void Kernel::check(const Context& ctx, const Expr& t, const Expr& kind) const {
  Expr k = infer_kind(ctx, t);
  if (!equal_kinds(k, kind)) {
    throw Error(ErrorClass::kKindMismatch,
                "'" + print(t) + "' has kind " + print(k) + ", expected " +
                    print(kind),
                "equality typing",
                judgement(ctx, print(t) + " : " + print(kind)));
  }
}

void Kernel::check_kind_valid(const Context& ctx, const Expr& kind) const {
  switch (kind.tag()) {
    case Tag::kType:
    case Tag::kProp:
      return;
    case Tag::kEl:
    case Tag::kPrf: {
      bool el = kind.is(Tag::kEl);
      Expr want = el ? Expr::type() : Expr::prop();
      Expr got = infer_kind(ctx, kind.inner());
      if (!equal_kinds(got, want)) {
        throw Error(ErrorClass::kIllFormedKind,
                    std::string(el ? "El" : "Prf") + " applied to '" +
                        print(kind.inner()) + "' of kind " + print(got) +
                        ", expected " + print(want),
                    el ? "El formation" : "Prf formation",
                    judgement(ctx, print(kind.inner()) + " : " + print(want)));
      }
      return;
    }
    case Tag::kPi: {
      check_kind_valid(ctx, kind.domain());
      std::string x = binder_name(ctx, kind.name());
      Expr cod = x == kind.name() ? kind.codomain()
                                  : subst(kind.codomain(), kind.name(), Expr::var(x));
      check_kind_valid(ctx.extended(x, kind.domain()), cod);
      return;
    }
    default:
      throw Error(ErrorClass::kIllFormedKind,
                  "'" + print(kind) + "' is an object, not a kind",
                  "kind formation", judgement(ctx, print(kind) + " kind"));
  }
}

void Kernel::check_context(const Context& ctx) const {
  Context prefix;
  for (const auto& [name, kind] : ctx.entries()) {
    if (prefix.taken(name)) {
      throw Error(ErrorClass::kDuplicateVariable,
                  "variable '" + name + "' is declared twice in the context",
                  "context extension",
                  print_context(ctx.entries()) + " valid");
    }
    check_kind_valid(prefix, kind);
    prefix.push(name, kind);
  }
}

}  // namespace lttw
