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

// Weyl's categories and the equality relation defined on each of them.

#ifndef LTTW_CATEGORY_HPP_
#define LTTW_CATEGORY_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lttw/expr.hpp"

namespace lttw {

class Category {
 public:
  enum class Form { kBaseN, kProd, kFun, kSetOf };

  static Category base_n();
  static Category prod(Category a, Category b);
  static Category fun(Category a, Category b);
  static Category set_of(Category a);

  Form form() const { return form_; }
  const Category& left() const { return *left_; }
  const Category& right() const { return *right_; }

  // Basic: Nat and products of basics. Everything else is ideal.
  bool basic() const;
  // Number of category formers on the longest path, Nat counting as 1.
  int depth() const;
  std::string to_string() const;

 private:
  Form form_ = Form::kBaseN;
  std::shared_ptr<const Category> left_;
  std::shared_ptr<const Category> right_;
};

// The type a category denotes: Nat, Times, Arrow or Set.
Expr carrier(const Category& c);
// The name in U of a basic category; nullopt for ideal ones.
std::optional<Expr> universe_name(const Category& c);

// The proposition a =_c b, for terms a, b of type carrier(c).
Expr equality_on(const Category& c, const Expr& a, const Expr& b);
// [a : carrier] [b : carrier] a =_c b, of kind carrier -> carrier -> Prop.
Expr generate_equality(const Category& c);
// [a : carrier] (proof of a =_c a), of kind (a : carrier) Prf (a =_c a).
Expr reflexivity_proof(const Category& c);

// Every category of depth at most `max_depth`, shallowest first.
std::vector<Category> enumerate_categories(int max_depth);

}  // namespace lttw

#endif  // LTTW_CATEGORY_HPP_
