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

#ifndef LTTW_SRC_REDUCE_HPP_
#define LTTW_SRC_REDUCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lttw/expr.hpp"
#include "lttw/signature.hpp"

namespace lttw {

enum class MatchResult { kMatch, kFail, kBlocked };

// Reduction engine shared by the kernel and the elaborator. Holds the fuel
// budget of one top-level question; metavariables are opaque heads.
class Reducer {
 public:
  explicit Reducer(const Signature& sig)
      : sig_(sig), fuel_(sig.options().fuel) {}

  Expr whnf(const Expr& t);
  Expr normalize(const Expr& t);
  bool conv(const Expr& a, const Expr& b);
  bool conv_kinds(const Expr& a, const Expr& b);

  // Matches `rule` against `args` (weak-head normalising constructor
  // positions in place). On kBlocked, `blocker` names the metavariable at
  // the head of a constructor position.
  MatchResult match(const RewriteRule& rule, std::vector<Expr>& args,
                    std::vector<std::pair<std::string, Expr>>& bindings,
                    std::optional<MetaId>* blocker = nullptr);

  // One head step (beta, abbreviation or computation rule); nullopt when t
  // is already in weak-head normal form.
  std::optional<Expr> step(const Expr& t);

  std::uint64_t fuel_left() const { return fuel_; }

 private:
  void tick();
  std::optional<Expr> try_rules(const Spine& sp, std::vector<Expr>& args);

  const Signature& sig_;
  std::uint64_t fuel_;
};

}  // namespace lttw

#endif  // LTTW_SRC_REDUCE_HPP_
