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

// Framework syntax. Objects (variables, constants, abstractions,
// applications) and kinds (Type, El, Prop, Prf, dependent products) share
// one immutable node type so that substitution and alpha-equivalence are
// written once. Binders are named; the Church-style kind annotation on a
// binder is part of the node.

#ifndef LTTW_EXPR_HPP_
#define LTTW_EXPR_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lttw {

enum class Tag : std::uint8_t {
  kVar,
  kConst,
  kMeta,
  kLam,
  kApp,
  kType,
  kProp,
  kEl,
  kPrf,
  kPi,
};

using MetaId = std::uint32_t;

class Expr {
 public:
  Expr() = default;

  static Expr var(std::string name);
  static Expr constant(std::string name);
  static Expr meta(MetaId id);
  static Expr lam(std::string binder, Expr domain, Expr body);
  static Expr app(Expr fun, Expr arg);
  static Expr apps(Expr head, std::span<const Expr> args);
  static Expr apps(Expr head, std::initializer_list<Expr> args);
  static Expr type();
  static Expr prop();
  static Expr el(Expr type);
  static Expr prf(Expr proposition);
  static Expr pi(std::string binder, Expr domain, Expr codomain);
  // Non-dependent product; the binder is `_`, freshened if it would clash.
  static Expr arrow(Expr domain, Expr codomain);

  explicit operator bool() const { return node_ != nullptr; }
  Tag tag() const;

  // Variable/constant name, or binder name for Lam and Pi.
  const std::string& name() const;
  MetaId meta_id() const;

  // Lam/Pi: binder kind. App: function. El/Prf: the wrapped object.
  const Expr& domain() const;
  const Expr& fun() const;
  const Expr& inner() const;
  // Lam: body. Pi: codomain. App: argument.
  const Expr& body() const;
  const Expr& codomain() const;
  const Expr& arg() const;

  // No free variables (metavariables count as closed).
  bool closed() const;
  // Sorted free variable names.
  const std::vector<std::string>& fv() const;
  bool has_meta() const;
  bool is_kind() const;

  bool is(Tag t) const;
  bool is_const(std::string_view name) const;
  bool same_node(const Expr& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Tag tag, std::string name, Expr a, Expr b, MetaId meta = 0);

  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Tag tag;
  bool has_meta = false;
  MetaId meta = 0;
  std::string name;
  Expr a;
  Expr b;
  std::vector<std::string> fv;
};

inline Tag Expr::tag() const { return node_->tag; }
inline const std::string& Expr::name() const { return node_->name; }
inline MetaId Expr::meta_id() const { return node_->meta; }
inline const Expr& Expr::domain() const { return node_->a; }
inline const Expr& Expr::fun() const { return node_->a; }
inline const Expr& Expr::inner() const { return node_->a; }
inline const Expr& Expr::body() const { return node_->b; }
inline const Expr& Expr::codomain() const { return node_->b; }
inline const Expr& Expr::arg() const { return node_->b; }
inline bool Expr::closed() const { return node_->fv.empty(); }
inline const std::vector<std::string>& Expr::fv() const { return node_->fv; }
inline bool Expr::has_meta() const { return node_->has_meta; }
inline bool Expr::is(Tag t) const { return node_ && node_->tag == t; }
inline bool Expr::is_const(std::string_view name) const {
  return is(Tag::kConst) && node_->name == name;
}

// Head and arguments of an iterated application.
struct Spine {
  Expr head;
  std::vector<Expr> args;
};
Spine decompose(const Expr& e);

std::set<std::string> free_vars(const Expr& e);
bool occurs_free(const Expr& e, const std::string& var);
std::set<MetaId> metas_of(const Expr& e);

// Capture-avoiding substitution [replacement/var]e. Binders that would
// capture a free variable of the replacement are renamed with fresh_name.
Expr subst(const Expr& e, const std::string& var, const Expr& replacement);

// Simultaneous substitution of every (var, replacement) pair.
Expr subst_all(const Expr& e,
               const std::vector<std::pair<std::string, Expr>>& bindings);

// True iff a and b differ only in the names of bound variables. Binder
// annotations are compared too.
bool alpha_eq(const Expr& a, const Expr& b);

// `base` itself if not taken, otherwise `base` with trailing digits stripped
// and the least positive numeric suffix that is not taken.
std::string fresh_name(const std::string& base,
                       const std::function<bool(const std::string&)>& taken);
std::string fresh_name(const std::string& base,
                       const std::set<std::string>& taken);

// Number of nodes; used by generators and fuel heuristics in tests.
std::size_t expr_size(const Expr& e);

}  // namespace lttw

#endif  // LTTW_EXPR_HPP_
