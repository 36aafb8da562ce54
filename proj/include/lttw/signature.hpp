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

// The global, ordered sequence of constant declarations, computation rules
// and transparent abbreviations. A Signature is a value: the checked
// operations below take one and return the extended copy, leaving the
// argument untouched when they throw.

#ifndef LTTW_SIGNATURE_HPP_
#define LTTW_SIGNATURE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "lttw/expr.hpp"

namespace lttw {

struct ConstDecl {
  std::string name;
  Expr kind;
};

struct Abbrev {
  std::string name;
  Expr definiens;
  Expr kind;
};

// Left-hand-side argument pattern. Constructor patterns are one level deep:
// a constant applied to variables or inaccessible positions. An
// inaccessible position (written `.x`) names a variable bound elsewhere in
// the pattern; it is not matched, since well-kindedness of the redex
// already forces it to be equal to that binding.
struct Pattern {
  enum class Form { kVar, kInaccessible, kConstructor };
  Form form = Form::kVar;
  std::string name;
  std::vector<Pattern> args;

  static Pattern var(std::string n) { return {Form::kVar, std::move(n), {}}; }
  static Pattern inaccessible(std::string n) {
    return {Form::kInaccessible, std::move(n), {}};
  }
  static Pattern constructor(std::string c, std::vector<Pattern> args) {
    return {Form::kConstructor, std::move(c), std::move(args)};
  }
};

using Telescope = std::vector<std::pair<std::string, Expr>>;

struct RewriteRule {
  std::string head;
  std::vector<Pattern> lhs_args;
  Expr rhs;
  Expr result_kind;
  Telescope pattern_vars;

  // The left-hand side as a term; inaccessible positions become the
  // variable they name.
  Expr lhs() const;
};

Expr pattern_to_expr(const Pattern& p);

using SignatureEntry = std::variant<ConstDecl, Abbrev>;

// Options threaded from the run configuration into every kernel call.
struct KernelOptions {
  std::uint64_t fuel = 100000;
};

class Signature {
 public:
  bool contains(const std::string& name) const {
    return entries_.count(name) > 0;
  }
  const ConstDecl* find_constant(const std::string& name) const;
  const Abbrev* find_abbrev(const std::string& name) const;
  // Kind of a constant or abbreviation.
  std::optional<Expr> kind_of(const std::string& name) const;
  const std::vector<RewriteRule>& rules_for(const std::string& head) const;

  const std::vector<std::string>& order() const { return order_; }
  std::size_t constant_count() const { return constants_; }
  std::size_t abbrev_count() const { return order_.size() - constants_; }
  std::size_t rule_count() const { return rule_count_; }
  // All rules in declaration order.
  std::vector<const RewriteRule*> rules() const;

  const KernelOptions& options() const { return options_; }
  void set_options(KernelOptions o) { options_ = o; }

  // Unchecked insertion; the checked wrappers below are the public way in.
  void insert(SignatureEntry e);
  void insert_rule(RewriteRule r);

 private:
  std::unordered_map<std::string, SignatureEntry> entries_;
  std::vector<std::string> order_;
  std::size_t constants_ = 0;
  std::unordered_map<std::string, std::vector<RewriteRule>> rules_;
  std::vector<std::pair<std::string, std::size_t>> rule_order_;
  std::size_t rule_count_ = 0;
  KernelOptions options_;
};

// Throws DuplicateName or IllFormedKind.
Signature declare_constant(Signature sig, const std::string& name,
                           const Expr& kind);

// Throws NonLinearPattern, HeadNotConstant, UnknownConstant, BadPattern,
// OverlappingRule, KindMismatch.
Signature declare_rewrite(Signature sig, RewriteRule rule);

// Throws DuplicateName, plus kernel errors for an ill-kinded body, and
// AscriptionMismatch when the inferred kind differs from the ascription.
Signature define(Signature sig, const std::string& name, const Expr& body,
                 const std::optional<Expr>& ascription);

// Throws NotFound.
SignatureEntry lookup(const Signature& sig, const std::string& name);

}  // namespace lttw

#endif  // LTTW_SIGNATURE_HPP_
