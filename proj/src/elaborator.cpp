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

#include "lttw/elaborator.hpp"

#include <algorithm>

#include "lttw/error.hpp"
#include "lttw/printer.hpp"
#include "reduce.hpp"

namespace lttw {

Scope::Scope(Context ctx) : ctx_(std::move(ctx)) {
  for (const auto& [name, kind] : ctx_.entries()) names_.emplace_back(name, name);
}

std::optional<std::string> Scope::resolve(const std::string& surface) const {
  for (auto it = names_.rbegin(); it != names_.rend(); ++it) {
    if (it->first == surface) return it->second;
  }
  return std::nullopt;
}

std::string Scope::bind(const std::string& surface, const Expr& kind,
                        const Signature& sig) {
  std::string core = fresh_name(surface, [&](const std::string& s) {
    return ctx_.taken(s) || sig.contains(s);
  });
  ctx_.push(core, kind);
  names_.emplace_back(surface, core);
  return core;
}

namespace {

std::string avoid_name(const std::string& base, const Context& ctx,
                       const Expr& a, const Expr& b) {
  return fresh_name(base, [&](const std::string& s) {
    return ctx.taken(s) || occurs_free(a, s) || occurs_free(b, s);
  });
}

std::string describe_pair(const Expr& a, const Expr& b) {
  return "cannot unify " + print(a) + " with " + print(b);
}

// Where a term is blocked: the argument at a constructor position of a
// computation rule whose weak-head normal form is headed by an unsolved
// metavariable.
struct Block {
  std::string head;
  std::size_t position;
  Expr arg;
};

}  // namespace

// First-order unification over one elaborator's metavariable state.
class Unifier {
 public:
  Unifier(Elaborator& el, ErrorClass cls, std::string what, SourceSpan span)
      : el_(el), cls_(cls), what_(std::move(what)), span_(std::move(span)) {}

  void kinds(const Context& ctx, const Expr& a0, const Expr& b0) {
    Expr a = el_.zonk(a0);
    Expr b = el_.zonk(b0);
    if (a.tag() != b.tag()) fail(a, b);
    switch (a.tag()) {
      case Tag::kType:
      case Tag::kProp:
        return;
      case Tag::kEl:
      case Tag::kPrf:
        objects(ctx, a.inner(), b.inner());
        return;
      case Tag::kPi: {
        kinds(ctx, a.domain(), b.domain());
        std::string z = avoid_name(a.name(), ctx, a, b);
        Context inner = ctx.extended(z, a.domain());
        kinds(inner, subst(a.codomain(), a.name(), Expr::var(z)),
              subst(b.codomain(), b.name(), Expr::var(z)));
        return;
      }
      default:
        fail(a, b);
    }
  }

  void objects(const Context& ctx, const Expr& a0, const Expr& b0) {
    Expr a = el_.zonk(a0);
    Expr b = el_.zonk(b0);
    if (alpha_eq(a, b)) return;
    if (!a.has_meta() && !b.has_meta()) {
      Reducer r(el_.sig_);
      if (r.conv(a, b)) return;
      fail(a, b);
    }

    Spine sa = decompose(a);
    Spine sb = decompose(b);
    if (sa.head.is(Tag::kConst) && sb.head.is(Tag::kConst) &&
        sa.head.name() == sb.head.name() && sa.args.size() == sb.args.size() &&
        el_.sig_.find_abbrev(sa.head.name())) {
      MetaState saved = el_.st_;
      try {
        for (std::size_t i = 0; i < sa.args.size(); ++i) {
          objects(ctx, sa.args[i], sb.args[i]);
        }
        return;
      } catch (const Error&) {
        el_.st_ = std::move(saved);
      }
    }

    Expr wa = whnf(a);
    Expr wb = whnf(b);
    if (alpha_eq(wa, wb)) return;

    if (wa.is(Tag::kLam) && wb.is(Tag::kLam)) {
      kinds(ctx, wa.domain(), wb.domain());
      std::string z = avoid_name(wa.name(), ctx, wa, wb);
      Context inner = ctx.extended(z, wa.domain());
      objects(inner, subst(wa.body(), wa.name(), Expr::var(z)),
              subst(wb.body(), wb.name(), Expr::var(z)));
      return;
    }
    if (wa.is(Tag::kLam) || wb.is(Tag::kLam)) {
      const Expr& lam = wa.is(Tag::kLam) ? wa : wb;
      const Expr& other = wa.is(Tag::kLam) ? wb : wa;
      std::string z = avoid_name(lam.name(), ctx, lam, other);
      Context inner = ctx.extended(z, lam.domain());
      Expr lhs = subst(lam.body(), lam.name(), Expr::var(z));
      Expr rhs = Expr::app(other, Expr::var(z));
      if (wa.is(Tag::kLam)) {
        objects(inner, lhs, rhs);
      } else {
        objects(inner, rhs, lhs);
      }
      return;
    }

    sa = decompose(wa);
    sb = decompose(wb);
    bool flex_a = sa.head.is(Tag::kMeta);
    bool flex_b = sb.head.is(Tag::kMeta);
    if (flex_a && flex_b && sa.head.meta_id() == sb.head.meta_id()) {
      if (sa.args.size() == sb.args.size()) {
        bool same = true;
        for (std::size_t i = 0; i < sa.args.size() && same; ++i) {
          same = alpha_eq(sa.args[i], sb.args[i]);
        }
        if (same) return;
      }
      postpone(ctx, wa, wb);
      return;
    }
    if (flex_a && solve(sa, wb)) return;
    if (flex_b && solve(sb, wa)) return;
    if (flex_a || flex_b) {
      postpone(ctx, wa, wb);
      return;
    }

    bool blocked = is_blocked(wa) || is_blocked(wb);
    bool same_head = sa.args.size() == sb.args.size() &&
                     sa.head.tag() == sb.head.tag() &&
                     ((sa.head.is(Tag::kVar) || sa.head.is(Tag::kConst)) &&
                      sa.head.name() == sb.head.name());
    if (same_head) {
      if (!blocked) {
        for (std::size_t i = 0; i < sa.args.size(); ++i) {
          objects(ctx, sa.args[i], sb.args[i]);
        }
        return;
      }
      MetaState saved = el_.st_;
      try {
        for (std::size_t i = 0; i < sa.args.size(); ++i) {
          objects(ctx, sa.args[i], sb.args[i]);
        }
        return;
      } catch (const Error&) {
        el_.st_ = std::move(saved);
      }
    }
    if (blocked) {
      postpone(ctx, wa, wb);
      return;
    }
    fail(wa, wb);
  }

  Expr whnf(const Expr& t) {
    Reducer r(el_.sig_);
    return r.whnf(t);
  }

  // The innermost blocked position of a weak-head normal term, if any.
  std::optional<Block> find_block(const Expr& w) {
    Spine sp = decompose(w);
    if (!sp.head.is(Tag::kConst)) return std::nullopt;
    for (const auto& rule : el_.sig_.rules_for(sp.head.name())) {
      if (rule.lhs_args.size() > sp.args.size()) continue;
      for (std::size_t i = 0; i < rule.lhs_args.size(); ++i) {
        if (rule.lhs_args[i].form != Pattern::Form::kConstructor) continue;
        Expr wi = whnf(sp.args[i]);
        Spine si = decompose(wi);
        if (si.head.is(Tag::kMeta)) return Block{sp.head.name(), i, wi};
        if (si.head.is(Tag::kConst) && si.head.name() != rule.lhs_args[i].name) {
          if (auto inner = find_block(wi)) return inner;
        }
      }
    }
    return std::nullopt;
  }

  bool is_blocked(const Expr& w) { return find_block(w).has_value(); }

 private:
  // ?m y1 ... yk := t when the yi are distinct variables.
  bool solve(const Spine& flex, const Expr& t) {
    MetaId m = flex.head.meta_id();
    std::vector<std::string> vars;
    for (const auto& a : flex.args) {
      if (!a.is(Tag::kVar)) return false;
      if (std::find(vars.begin(), vars.end(), a.name()) != vars.end()) return false;
      vars.push_back(a.name());
    }
    const MetaInfo& info = el_.st_.metas[m];
    std::vector<std::pair<std::string, Expr>> binders;
    Expr k = info.kind;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!k.is(Tag::kPi)) return false;
      binders.emplace_back(k.name(), k.domain());
      k = k.codomain();
    }

    Expr rhs = t;
    if (metas_of(rhs).count(m)) {
      rhs = el_.zonk(Reducer(el_.sig_).normalize(rhs));
      if (metas_of(rhs).count(m)) {
        throw Error(ErrorClass::kOccursCheck,
                    what_ + ": ?" + std::to_string(m) + " occurs in " + print(rhs),
                    "unification");
      }
    }
    auto escapes = [&](const Expr& e) {
      for (const auto& v : e.fv()) {
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) return true;
      }
      return false;
    };
    if (escapes(rhs)) {
      rhs = Reducer(el_.sig_).normalize(rhs);
      if (escapes(rhs)) {
        if (rhs.has_meta()) return false;
        throw Error(ErrorClass::kScopeEscape,
                    what_ + ": solution " + print(rhs) + " for ?" +
                        std::to_string(m) + " mentions a variable out of its scope",
                    "unification");
      }
    }
    std::vector<std::pair<std::string, Expr>> renaming;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] != binders[i].first) {
        renaming.emplace_back(vars[i], Expr::var(binders[i].first));
      }
    }
    Expr sol = renaming.empty() ? rhs : subst_all(rhs, renaming);
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      sol = Expr::lam(it->first, it->second, sol);
    }
    el_.st_.metas[m].solution = sol;
    return true;
  }

  void postpone(const Context& ctx, const Expr& a, const Expr& b) {
    el_.st_.postponed.push_back(Constraint{ctx, a, b, false, cls_, what_, span_});
  }

  [[noreturn]] void fail(const Expr& a, const Expr& b) const {
    Diagnostic d;
    d.error_class = cls_;
    d.message = what_ + " (" + describe_pair(a, b) + ")";
    d.rule = "equality typing";
    d.span = span_;
    throw Error(std::move(d));
  }

  Elaborator& el_;
  ErrorClass cls_;
  std::string what_;
  SourceSpan span_;
};

Elaborator::Elaborator(const Signature& sig, ElabOptions opts)
    : sig_(sig), opts_(std::move(opts)) {}

std::size_t Elaborator::solved_count() const {
  return static_cast<std::size_t>(
      std::count_if(st_.metas.begin(), st_.metas.end(),
                    [](const MetaInfo& m) { return m.solution.has_value(); }));
}

void Elaborator::unify(const Context& ctx, const Expr& a, const Expr& b,
                       bool kinds, ErrorClass on_failure,
                       const std::string& what, const SourceSpan& span) {
  std::size_t before = solved_count();
  Unifier u(*this, on_failure, what, span);
  if (kinds) {
    u.kinds(ctx, a, b);
  } else {
    u.objects(ctx, a, b);
  }
  if (solved_count() != before) wake();
}

void Elaborator::wake() {
  while (!st_.postponed.empty()) {
    std::size_t before = solved_count();
    std::vector<Constraint> todo;
    todo.swap(st_.postponed);
    for (const auto& c : todo) {
      Unifier u(*this, c.on_failure, c.what, c.span);
      if (c.kinds) {
        u.kinds(c.ctx, c.lhs, c.rhs);
      } else {
        u.objects(c.ctx, c.lhs, c.rhs);
      }
    }
    if (solved_count() == before) break;
  }
}

// Tries each constructor for the first stuck constraint blocked under an
// invertible head. Commits only a unique success.
bool Elaborator::invert_stuck(int depth) {
  if (depth <= 0) return false;
  for (std::size_t ci = 0; ci < st_.postponed.size(); ++ci) {
    Constraint c = st_.postponed[ci];
    Unifier probe(*this, c.on_failure, c.what, c.span);
    std::optional<Block> block;
    for (const Expr* side : {&c.lhs, &c.rhs}) {
      Expr w = probe.whnf(zonk(*side));
      block = probe.find_block(w);
      if (block && opts_.inversion_heads.count(block->head)) break;
      block.reset();
    }
    if (!block) continue;

    std::vector<std::string> ctors;
    for (const auto& rule : sig_.rules_for(block->head)) {
      if (block->position >= rule.lhs_args.size()) continue;
      const Pattern& p = rule.lhs_args[block->position];
      if (p.form != Pattern::Form::kConstructor) continue;
      if (std::find(ctors.begin(), ctors.end(), p.name) == ctors.end()) {
        ctors.push_back(p.name);
      }
    }

    MetaState base = st_;
    base.postponed.erase(base.postponed.begin() + static_cast<std::ptrdiff_t>(ci));
    std::optional<MetaState> winner;
    int successes = 0;
    for (const auto& ctor : ctors) {
      st_ = base;
      try {
        Expr cand = Expr::constant(ctor);
        Expr k = *sig_.kind_of(ctor);
        while (k.is(Tag::kPi)) {
          Expr m = fresh_meta(c.ctx, k.domain(), c.span);
          cand = Expr::app(cand, m);
          k = subst(k.codomain(), k.name(), m);
        }
        unify(c.ctx, block->arg, cand, false, c.on_failure, c.what, c.span);
        unify(c.ctx, c.lhs, c.rhs, c.kinds, c.on_failure, c.what, c.span);
        wake();
        while (invert_stuck(depth - 1)) wake();
        ++successes;
        winner = st_;
      } catch (const Error&) {
      }
    }
    if (successes == 1) {
      st_ = std::move(*winner);
      return true;
    }
    st_ = std::move(base);
    st_.postponed.insert(st_.postponed.begin() + static_cast<std::ptrdiff_t>(ci), c);
  }
  return false;
}

void Elaborator::finish() {
  wake();
  while (invert_stuck(opts_.inversion_depth)) wake();
  if (!st_.postponed.empty()) {
    const Constraint& c = st_.postponed.front();
    Diagnostic d;
    d.error_class = ErrorClass::kUnificationFailure;
    d.message = c.what + " (could not solve " + print(zonk(c.lhs)) +
                " =?= " + print(zonk(c.rhs)) + ")";
    d.rule = "unification";
    d.span = c.span;
    throw Error(std::move(d));
  }
  for (std::size_t i = 0; i < st_.metas.size(); ++i) {
    const MetaInfo& m = st_.metas[i];
    if (m.solution) continue;
    Expr k = zonk(m.kind);
    Diagnostic d;
    d.error_class = ErrorClass::kUnsolvedMeta;
    d.message = "could not infer the value of this hole (?" + std::to_string(i) +
                " : " + print(k) + ")";
    d.rule = "unification";
    d.span = m.span;
    throw Error(std::move(d));
  }
}

Expr Elaborator::zonk(const Expr& e) const {
  if (!e || !e.has_meta()) return e;
  switch (e.tag()) {
    case Tag::kMeta: {
      const auto& sol = st_.metas[e.meta_id()].solution;
      return sol ? zonk(*sol) : e;
    }
    case Tag::kApp: {
      Spine sp = decompose(e);
      std::vector<Expr> args;
      args.reserve(sp.args.size());
      for (const auto& a : sp.args) args.push_back(zonk(a));
      if (sp.head.is(Tag::kMeta) && st_.metas[sp.head.meta_id()].solution) {
        Expr r = zonk(sp.head);
        std::size_t i = 0;
        for (; i < args.size() && r.is(Tag::kLam); ++i) {
          r = subst(r.body(), r.name(), args[i]);
        }
        for (; i < args.size(); ++i) r = Expr::app(r, args[i]);
        return r;
      }
      return Expr::apps(zonk(sp.head), args);
    }
    case Tag::kLam:
      return Expr::lam(e.name(), zonk(e.domain()), zonk(e.body()));
    case Tag::kPi:
      return Expr::pi(e.name(), zonk(e.domain()), zonk(e.codomain()));
    case Tag::kEl:
      return Expr::el(zonk(e.inner()));
    case Tag::kPrf:
      return Expr::prf(zonk(e.inner()));
    default:
      return e;
  }
}

Expr Elaborator::fresh_meta(const Context& ctx, const Expr& kind,
                            const SourceSpan& span) {
  const auto& entries = ctx.entries();
  Expr k = kind;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    k = Expr::pi(it->first, it->second, k);
  }
  auto id = static_cast<MetaId>(st_.metas.size());
  st_.metas.push_back(MetaInfo{k, std::nullopt, span});
  Expr t = Expr::meta(id);
  for (const auto& [name, _] : entries) t = Expr::app(t, Expr::var(name));
  return t;
}

namespace {

void attach_span(Error& e, const SourceSpan& span) {
  if (!e.diagnostic().span.valid()) e.diagnostic().span = span;
}

[[noreturn]] void throw_at(ErrorClass c, const std::string& msg,
                           const SourceSpan& span, std::string rule = {}) {
  Diagnostic d;
  d.error_class = c;
  d.message = msg;
  d.rule = std::move(rule);
  d.span = span;
  throw Error(std::move(d));
}

bool is_prop_universe(const Expr& k) {
  return (k.is(Tag::kPrf) || k.is(Tag::kEl)) && k.inner().is_const("prop");
}

}  // namespace

Expr Elaborator::numeral(const STermPtr& s) {
  if (!sig_.find_constant("zero") || !sig_.find_constant("succ")) {
    throw_at(ErrorClass::kUnknownConstant,
             "numeral '" + s->name + "' needs 'zero' and 'succ' in the signature",
             s->span);
  }
  if (s->name.size() > 6) {
    throw_at(ErrorClass::kSyntaxError, "numeral '" + s->name + "' is too large",
             s->span);
  }
  int n = std::stoi(s->name);
  Expr t = Expr::constant("zero");
  Expr succ = Expr::constant("succ");
  for (int i = 0; i < n; ++i) t = Expr::app(succ, t);
  return t;
}

std::pair<Expr, Expr> Elaborator::infer(Scope& scope, const STermPtr& s) {
  using F = STerm::Form;
  try {
    switch (s->form) {
      case F::kDotted:
        if (!allow_dotted_) {
          throw_at(ErrorClass::kBadPattern,
                   "inaccessible pattern '." + s->name +
                       "' outside the left-hand side of a rule",
                   s->span);
        }
        [[fallthrough]];
      case F::kIdent: {
        if (auto v = scope.resolve(s->name)) {
          return {Expr::var(*v), *scope.context().lookup(*v)};
        }
        if (s->form == F::kDotted) {
          throw_at(ErrorClass::kBadPattern,
                   "'." + s->name + "' does not name a rule variable", s->span);
        }
        if (auto k = sig_.kind_of(s->name)) return {Expr::constant(s->name), *k};
        throw_at(ErrorClass::kUnknownConstant,
                 "unknown identifier '" + s->name + "'", s->span,
                 "signature lookup");
      }
      case F::kNumeral:
        return {numeral(s), *sig_.kind_of("zero")};
      case F::kHole:
        throw_at(ErrorClass::kUnsolvedMeta,
                 "cannot infer a hole here; holes need an expected kind", s->span);
      case F::kApp: {
        auto [f, kf] = infer(scope, s->a);
        kf = zonk(kf);
        if (!kf.is(Tag::kPi)) {
          throw_at(ErrorClass::kNotAProduct,
                   "'" + print_surface(s->a) + "' has kind " + print(kf) +
                       ", which is not a dependent product",
                   s->span, "application");
        }
        Expr arg = check_inner(scope, s->b, kf.domain(), ErrorClass::kDomainMismatch);
        return {Expr::app(f, arg), subst(kf.codomain(), kf.name(), arg)};
      }
      case F::kLam: {
        if (!s->a) {
          throw_at(ErrorClass::kUnsolvedMeta,
                   "binder '" + s->name + "' needs a kind annotation here",
                   s->span);
        }
        Expr dom = kind(scope, s->a);
        Scope inner = scope;
        std::string x = inner.bind(s->name, dom, sig_);
        auto [b, kb] = infer(inner, s->b);
        return {Expr::lam(x, dom, b), Expr::pi(x, dom, kb)};
      }
      default:
        throw_at(ErrorClass::kIllTyped,
                 "kind '" + print_surface(s) + "' used where an object is expected",
                 s->span, "object formation");
    }
  } catch (Error& e) {
    attach_span(e, s->span);
    throw;
  }
}

Expr Elaborator::check(Scope& scope, const STermPtr& s, const Expr& k) {
  return check_inner(scope, s, k, ErrorClass::kKindMismatch);
}

Expr Elaborator::check_inner(Scope& scope, const STermPtr& s, const Expr& k0,
                             ErrorClass on_mismatch) {
  using F = STerm::Form;
  try {
    Expr k = zonk(k0);
    const Context& ctx = scope.context();
    if (s->form == F::kHole) return fresh_meta(ctx, k, s->span);
    if (s->form == F::kLam) {
      if (!k.is(Tag::kPi)) {
        throw_at(ErrorClass::kKindMismatch,
                 "abstraction '" + print_surface(s) + "' checked against " +
                     print(k) + ", which is not a dependent product",
                 s->span, "abstraction");
      }
      Expr dom = k.domain();
      if (s->a) {
        dom = kind(scope, s->a);
        unify(ctx, dom, k.domain(), true, on_mismatch,
              "binder '" + s->name + "' is annotated " + print(dom) +
                  " but " + print(zonk(k.domain())) + " was expected",
              s->span);
      }
      Scope inner = scope;
      std::string x = inner.bind(s->name, dom, sig_);
      Expr cod = x == k.name() ? k.codomain()
                               : subst(k.codomain(), k.name(), Expr::var(x));
      Expr body = check_inner(inner, s->b, cod, ErrorClass::kKindMismatch);
      return Expr::lam(x, dom, body);
    }
    auto [t, kt] = infer(scope, s);
    kt = zonk(kt);
    if (opts_.reflect_props && kt.is(Tag::kProp) && is_prop_universe(k)) {
      return reflect(ctx, zonk(t), s->span);
    }
    unify(ctx, kt, k, true, on_mismatch,
          "'" + print_surface(s) + "' has kind " + print(kt) + " but " +
              print(k) + " was expected",
          s->span);
    return t;
  } catch (Error& e) {
    attach_span(e, s->span);
    throw;
  }
}

Expr Elaborator::kind(Scope& scope, const STermPtr& s) {
  using F = STerm::Form;
  try {
    switch (s->form) {
      case F::kType:
        return Expr::type();
      case F::kProp:
        return Expr::prop();
      case F::kEl:
        return Expr::el(check_inner(scope, s->a, Expr::type(),
                                    ErrorClass::kIllFormedKind));
      case F::kPrf:
        return Expr::prf(check_inner(scope, s->a, Expr::prop(),
                                     ErrorClass::kIllFormedKind));
      case F::kPi: {
        Expr dom = kind(scope, s->a);
        Scope inner = scope;
        std::string x = inner.bind(s->name, dom, sig_);
        return Expr::pi(x, dom, kind(inner, s->b));
      }
      case F::kArrow: {
        Expr dom = kind(scope, s->a);
        return Expr::arrow(dom, kind(scope, s->b));
      }
      case F::kHole:
        throw_at(ErrorClass::kUnsolvedMeta, "cannot infer a kind for '?'", s->span);
      default: {
        auto [t, k] = infer(scope, s);
        k = zonk(k);
        if (k.is(Tag::kType)) return Expr::el(t);
        if (k.is(Tag::kProp)) return Expr::prf(t);
        throw_at(ErrorClass::kIllFormedKind,
                 "'" + print_surface(s) + "' has kind " + print(k) +
                     "; a type or a proposition was expected",
                 s->span, "kind formation");
      }
    }
  } catch (Error& e) {
    attach_span(e, s->span);
    throw;
  }
}

// Maps a Prop-valued term into the proposition universe: forall to
// forallbar, imp to hatImp, bot to hatBot, Eq to hatEq, and V p back to p.
// Definitions are unfolded as needed.
Expr Elaborator::reflect(const Context& ctx, const Expr& t,
                         const SourceSpan& span) {
  auto need = [&](const char* c) {
    if (!sig_.find_constant(c)) {
      throw_at(ErrorClass::kKindMismatch,
               std::string("cannot reflect into prop without '") + c + "'", span);
    }
    return Expr::constant(c);
  };
  Reducer r(sig_);
  Expr cur = t;
  while (true) {
    Spine sp = decompose(cur);
    if (sp.head.is(Tag::kConst)) {
      const std::string& h = sp.head.name();
      std::size_t n = sp.args.size();
      if (h == "bot" && n == 0) return need("hatBot");
      if (h == "V" && n == 1) return sp.args[0];
      if (h == "Eq" && n == 3) return Expr::apps(need("hatEq"), sp.args);
      if (h == "imp" && n == 2) {
        Expr c = need("hatImp");
        return Expr::apps(c, {reflect(ctx, sp.args[0], span),
                              reflect(ctx, sp.args[1], span)});
      }
      if (h == "forall" && n == 2) {
        Expr c = need("forallbar");
        const Expr& a = sp.args[0];
        const Expr& p = sp.args[1];
        std::string x = fresh_name(p.is(Tag::kLam) ? p.name() : "x",
                                   [&](const std::string& s) {
                                     return ctx.taken(s) || occurs_free(p, s);
                                   });
        Expr body = p.is(Tag::kLam) ? subst(p.body(), p.name(), Expr::var(x))
                                    : Expr::app(p, Expr::var(x));
        Context inner = ctx.extended(x, Expr::el(a));
        Expr pred = Expr::lam(x, Expr::el(a), reflect(inner, body, span));
        return Expr::apps(c, {a, pred});
      }
      if (sig_.find_abbrev(h)) {
        cur = *r.step(cur);
        // Unfolding leaves a redex; contract it before looking again.
        while (decompose(cur).head.is(Tag::kLam) && cur.is(Tag::kApp)) {
          cur = *r.step(cur);
        }
        continue;
      }
    }
    throw_at(ErrorClass::kKindMismatch,
             "proposition " + print(t) + " has kind Prop and is not reflected " +
                 "by the proposition universe",
             span, "equality typing");
  }
}

}  // namespace lttw
