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

// Surface syntax of proof scripts, as produced by the parser and consumed by
// the elaborator. Identifiers are not yet resolved to variables or
// constants, and kind positions may hold plain objects (`Nat` standing for
// `El Nat`).

#ifndef LTTW_SYNTAX_HPP_
#define LTTW_SYNTAX_HPP_

#include <memory>
#include <string>
#include <vector>

#include "lttw/error.hpp"

namespace lttw {

struct STerm;
using STermPtr = std::shared_ptr<const STerm>;

struct STerm {
  enum class Form {
    kIdent,    // name
    kNumeral,  // name holds the decimal digits
    kHole,     // ?
    kDotted,   // .x, only meaningful on the left of a rule
    kApp,      // a b
    kLam,      // [name : a] b; a may be null
    kPi,       // (name : a) b
    kArrow,    // a -> b
    kType,
    kProp,
    kEl,       // El a
    kPrf,      // Prf a
  };
  Form form;
  std::string name;
  STermPtr a;
  STermPtr b;
  SourceSpan span;
};

STermPtr make_sterm(STerm::Form form, std::string name, STermPtr a, STermPtr b,
                    SourceSpan span);

// One `[x : K]` entry of a telescope. A null kind means the annotation was
// omitted.
struct Binder {
  std::string name;
  STermPtr kind;
  SourceSpan span;
};

struct Command {
  enum class Kind {
    kDeclare,    // [c binders : K]
    kDefine,     // [c binders = body] or [c binders = body : K]
    kRule,       // [rule binders lhs = rhs] or [... : K]
    kLoad,       // Load "path"
    kTypeOf,     // TypeOf t
    kReduce,     // Reduce t
    kCheck,      // Check t : K
    kSetOption,  // SetOption name value
  };
  Kind kind;
  std::string name;  // constant, option name or Load path
  std::string value; // option value
  std::vector<Binder> binders;
  STermPtr term;     // declared kind, body, rule lhs or directive subject
  STermPtr rhs;      // rule right-hand side
  STermPtr ascription;
  SourceSpan span;
};

// Renders a surface term in script syntax; used in diagnostics.
std::string print_surface(const STermPtr& t);

}  // namespace lttw

#endif  // LTTW_SYNTAX_HPP_
