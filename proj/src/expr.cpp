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

#include "lttw/expr.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <optional>
#include <utility>

namespace lttw {

Expr Expr::make(Tag tag, std::string name, Expr a, Expr b, MetaId meta) {
  auto n = std::make_shared<Node>();
  n->tag = tag;
  n->name = std::move(name);
  n->meta = meta;
  n->a = std::move(a);
  n->b = std::move(b);
  auto merge = [](const std::vector<std::string>& x,
                  const std::vector<std::string>& y) {
    std::vector<std::string> out;
    out.reserve(x.size() + y.size());
    std::set_union(x.begin(), x.end(), y.begin(), y.end(),
                   std::back_inserter(out));
    return out;
  };
  switch (tag) {
    case Tag::kVar:
      n->fv = {n->name};
      break;
    case Tag::kMeta:
      n->has_meta = true;
      break;
    case Tag::kLam:
    case Tag::kPi: {
      n->has_meta = n->a.has_meta() || n->b.has_meta();
      std::vector<std::string> body_fv = n->b.fv();
      auto it = std::lower_bound(body_fv.begin(), body_fv.end(), n->name);
      if (it != body_fv.end() && *it == n->name) body_fv.erase(it);
      n->fv = merge(n->a.fv(), body_fv);
      break;
    }
    case Tag::kApp:
      n->has_meta = n->a.has_meta() || n->b.has_meta();
      n->fv = merge(n->a.fv(), n->b.fv());
      break;
    case Tag::kEl:
    case Tag::kPrf:
      n->has_meta = n->a.has_meta();
      n->fv = n->a.fv();
      break;
    default:
      break;
  }
  return Expr(std::move(n));
}

Expr Expr::var(std::string name) { return make(Tag::kVar, std::move(name), {}, {}); }
Expr Expr::constant(std::string name) {
  return make(Tag::kConst, std::move(name), {}, {});
}
Expr Expr::meta(MetaId id) {
  return make(Tag::kMeta, "?" + std::to_string(id), {}, {}, id);
}
Expr Expr::lam(std::string binder, Expr domain, Expr body) {
  return make(Tag::kLam, std::move(binder), std::move(domain), std::move(body));
}
Expr Expr::app(Expr fun, Expr arg) {
  return make(Tag::kApp, {}, std::move(fun), std::move(arg));
}
Expr Expr::apps(Expr head, std::span<const Expr> args) {
  for (const auto& a : args) head = app(std::move(head), a);
  return head;
}
Expr Expr::apps(Expr head, std::initializer_list<Expr> args) {
  return apps(std::move(head), std::span<const Expr>(args.begin(), args.size()));
}
Expr Expr::type() {
  static const Expr t = make(Tag::kType, {}, {}, {});
  return t;
}
Expr Expr::prop() {
  static const Expr p = make(Tag::kProp, {}, {}, {});
  return p;
}
Expr Expr::el(Expr type) { return make(Tag::kEl, {}, std::move(type), {}); }
Expr Expr::prf(Expr proposition) {
  return make(Tag::kPrf, {}, std::move(proposition), {});
}
Expr Expr::pi(std::string binder, Expr domain, Expr codomain) {
  return make(Tag::kPi, std::move(binder), std::move(domain),
              std::move(codomain));
}
Expr Expr::arrow(Expr domain, Expr codomain) {
  std::string binder = "_";
  if (!codomain.closed()) {
    binder = fresh_name("_", free_vars(codomain));
  }
  return pi(std::move(binder), std::move(domain), std::move(codomain));
}

bool Expr::is_kind() const {
  switch (tag()) {
    case Tag::kType:
    case Tag::kProp:
    case Tag::kEl:
    case Tag::kPrf:
    case Tag::kPi:
      return true;
    default:
      return false;
  }
}

Spine decompose(const Expr& e) {
  Spine s;
  Expr cur = e;
  while (cur.is(Tag::kApp)) {
    s.args.push_back(cur.arg());
    cur = cur.fun();
  }
  std::reverse(s.args.begin(), s.args.end());
  s.head = cur;
  return s;
}

std::set<std::string> free_vars(const Expr& e) {
  return std::set<std::string>(e.fv().begin(), e.fv().end());
}

bool occurs_free(const Expr& e, const std::string& var) {
  return std::binary_search(e.fv().begin(), e.fv().end(), var);
}

namespace {

void collect_metas(const Expr& e, std::set<MetaId>& out) {
  if (!e.has_meta()) return;
  switch (e.tag()) {
    case Tag::kMeta:
      out.insert(e.meta_id());
      return;
    case Tag::kLam:
    case Tag::kPi:
    case Tag::kApp:
      collect_metas(e.domain(), out);
      collect_metas(e.body(), out);
      return;
    case Tag::kEl:
    case Tag::kPrf:
      collect_metas(e.inner(), out);
      return;
    default:
      return;
  }
}

class Substituter {
 public:
  Substituter(const std::string& var, const Expr& repl)
      : var_(var), repl_(repl) {}

  // Returns nullopt when var does not occur free, so callers can share the
  // original node.
  std::optional<Expr> run(const Expr& e) {
    if (!occurs_free(e, var_)) return std::nullopt;
    switch (e.tag()) {
      case Tag::kVar:
        if (e.name() == var_) return repl_;
        return std::nullopt;
      case Tag::kApp: {
        auto f = run(e.fun());
        auto a = run(e.arg());
        if (!f && !a) return std::nullopt;
        return Expr::app(f ? *f : e.fun(), a ? *a : e.arg());
      }
      case Tag::kEl:
      case Tag::kPrf: {
        auto i = run(e.inner());
        if (!i) return std::nullopt;
        return e.tag() == Tag::kEl ? Expr::el(*i) : Expr::prf(*i);
      }
      case Tag::kLam:
      case Tag::kPi:
        return binder(e);
      default:
        return std::nullopt;
    }
  }

 private:
  std::optional<Expr> binder(const Expr& e) {
    auto dom = run(e.domain());
    std::optional<Expr> body;
    std::string name = e.name();
    if (name != var_ && occurs_free(e.body(), var_)) {
      if (repl_fv().count(name)) {
        std::set<std::string> avoid = repl_fv();
        auto body_fv = free_vars(e.body());
        avoid.insert(body_fv.begin(), body_fv.end());
        avoid.insert(var_);
        std::string fresh = fresh_name(name, avoid);
        Expr renamed = subst(e.body(), name, Expr::var(fresh));
        name = fresh;
        body = run(renamed);
        if (!body) body = renamed;
      } else {
        body = run(e.body());
      }
    }
    if (!dom && !body) return std::nullopt;
    Expr d = dom ? *dom : e.domain();
    Expr b = body ? *body : e.body();
    return e.tag() == Tag::kLam ? Expr::lam(name, d, b) : Expr::pi(name, d, b);
  }

  const std::set<std::string>& repl_fv() {
    if (!repl_fv_) repl_fv_ = free_vars(repl_);
    return *repl_fv_;
  }

  const std::string& var_;
  const Expr& repl_;
  std::optional<std::set<std::string>> repl_fv_;
};

bool alpha_rec(const Expr& a, const Expr& b, std::vector<std::string>& ea,
               std::vector<std::string>& eb) {
  if (a.same_node(b) && a.closed()) return true;
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Tag::kVar: {
      auto ia = std::find(ea.rbegin(), ea.rend(), a.name());
      auto ib = std::find(eb.rbegin(), eb.rend(), b.name());
      bool fa = ia == ea.rend();
      bool fb = ib == eb.rend();
      if (fa || fb) return fa && fb && a.name() == b.name();
      return (ia - ea.rbegin()) == (ib - eb.rbegin());
    }
    case Tag::kConst:
      return a.name() == b.name();
    case Tag::kMeta:
      return a.meta_id() == b.meta_id();
    case Tag::kType:
    case Tag::kProp:
      return true;
    case Tag::kEl:
    case Tag::kPrf:
      return alpha_rec(a.inner(), b.inner(), ea, eb);
    case Tag::kApp:
      return alpha_rec(a.fun(), b.fun(), ea, eb) &&
             alpha_rec(a.arg(), b.arg(), ea, eb);
    case Tag::kLam:
    case Tag::kPi: {
      if (!alpha_rec(a.domain(), b.domain(), ea, eb)) return false;
      ea.push_back(a.name());
      eb.push_back(b.name());
      bool r = alpha_rec(a.body(), b.body(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return r;
    }
  }
  return false;
}

}  // namespace

std::set<MetaId> metas_of(const Expr& e) {
  std::set<MetaId> out;
  collect_metas(e, out);
  return out;
}

Expr subst(const Expr& e, const std::string& var, const Expr& replacement) {
  Substituter s(var, replacement);
  auto r = s.run(e);
  return r ? *r : e;
}

Expr subst_all(const Expr& e,
               const std::vector<std::pair<std::string, Expr>>& bindings) {
  if (bindings.size() == 1) {
    return subst(e, bindings[0].first, bindings[0].second);
  }
  // Route through names no parser can produce, so later replacements never
  // see variables introduced by earlier ones.
  Expr cur = e;
  for (std::size_t i = 0; i < bindings.size(); ++i) {
    cur = subst(cur, bindings[i].first, Expr::var("%" + std::to_string(i)));
  }
  for (std::size_t i = 0; i < bindings.size(); ++i) {
    cur = subst(cur, "%" + std::to_string(i), bindings[i].second);
  }
  return cur;
}

bool alpha_eq(const Expr& a, const Expr& b) {
  std::vector<std::string> ea, eb;
  return alpha_rec(a, b, ea, eb);
}

std::string fresh_name(const std::string& base,
                       const std::function<bool(const std::string&)>& taken) {
  if (!taken(base)) return base;
  std::string stem = base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) {
    stem.pop_back();
  }
  if (stem.empty()) stem = base;
  for (unsigned i = 1;; ++i) {
    std::string cand = stem + std::to_string(i);
    if (!taken(cand)) return cand;
  }
}

std::string fresh_name(const std::string& base,
                       const std::set<std::string>& taken) {
  return fresh_name(base,
                    [&](const std::string& s) { return taken.count(s) > 0; });
}

std::size_t expr_size(const Expr& e) {
  if (!e) return 0;
  switch (e.tag()) {
    case Tag::kLam:
    case Tag::kPi:
    case Tag::kApp:
      return 1 + expr_size(e.domain()) + expr_size(e.body());
    case Tag::kEl:
    case Tag::kPrf:
      return 1 + expr_size(e.inner());
    default:
      return 1;
  }
}

}  // namespace lttw
