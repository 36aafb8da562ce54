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

// The five judgement forms of the framework:
//
//   Gamma valid            check_context
//   Gamma |- K kind        check_kind_valid
//   Gamma |- k : K         infer_kind / check
//   Gamma |- k = k' : K    convertible
//   Gamma |- K = K'        equal_kinds
//
// Object equality is decided by weak-head normalisation (beta, computation
// rules, abbreviation unfolding) followed by structural comparison, with
// eta-expansion of the non-abstraction side when one side is an
// abstraction. Every public call gets its own fuel budget.

#ifndef LTTW_KERNEL_HPP_
#define LTTW_KERNEL_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lttw/expr.hpp"
#include "lttw/signature.hpp"

namespace lttw {

class Context {
 public:
  Context() = default;
  explicit Context(Telescope entries) : entries_(std::move(entries)) {}

  const Telescope& entries() const { return entries_; }
  std::optional<Expr> lookup(const std::string& name) const;
  bool contains(const std::string& name) const { return lookup(name).has_value(); }
  // Appends without validation.
  Context extended(std::string name, Expr kind) const;
  void push(std::string name, Expr kind) {
    entries_.emplace_back(std::move(name), std::move(kind));
  }
  void pop() { entries_.pop_back(); }
  std::size_t size() const { return entries_.size(); }
  // Names that must be avoided when freshening a binder.
  bool taken(const std::string& name) const;

 private:
  Telescope entries_;
};

class Kernel {
 public:
  explicit Kernel(const Signature& sig) : sig_(sig) {}

  // Weak-head normal form. Throws FuelExhausted.
  Expr whnf(const Expr& t) const;
  // Full normal form, under binders and inside kinds.
  Expr normalize(const Expr& t) const;

  // Gamma |- a = b : at. The decision procedure is untyped beyond the
  // binder annotations; `ctx` and `at` only seed fresh names.
  bool convertible(const Context& ctx, const Expr& a, const Expr& b,
                   const Expr& at) const;
  bool convertible(const Expr& a, const Expr& b) const;

  Expr infer_kind(const Context& ctx, const Expr& t) const;
  // Gamma |- t : K, by inference and kind equality. Throws KindMismatch.
  void check(const Context& ctx, const Expr& t, const Expr& kind) const;
  void check_kind_valid(const Context& ctx, const Expr& kind) const;
  void check_context(const Context& ctx) const;
  bool equal_kinds(const Context& ctx, const Expr& a, const Expr& b) const;
  bool equal_kinds(const Expr& a, const Expr& b) const;

  const Signature& signature() const { return sig_; }

 private:
  const Signature& sig_;
};

}  // namespace lttw

#endif  // LTTW_KERNEL_HPP_
