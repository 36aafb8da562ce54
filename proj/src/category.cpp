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

#include "lttw/category.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace lttw {

Category Category::base_n() { return Category(); }

Category Category::prod(Category a, Category b) {
  Category c;
  c.form_ = Form::kProd;
  c.left_ = std::make_shared<const Category>(std::move(a));
  c.right_ = std::make_shared<const Category>(std::move(b));
  return c;
}

Category Category::fun(Category a, Category b) {
  Category c = prod(std::move(a), std::move(b));
  c.form_ = Form::kFun;
  return c;
}

Category Category::set_of(Category a) {
  Category c;
  c.form_ = Form::kSetOf;
  c.left_ = std::make_shared<const Category>(std::move(a));
  return c;
}

bool Category::basic() const {
  switch (form_) {
    case Form::kBaseN:
      return true;
    case Form::kProd:
      return left_->basic() && right_->basic();
    default:
      return false;
  }
}

int Category::depth() const {
  switch (form_) {
    case Form::kBaseN:
      return 1;
    case Form::kSetOf:
      return 1 + left_->depth();
    default:
      return 1 + std::max(left_->depth(), right_->depth());
  }
}

std::string Category::to_string() const {
  switch (form_) {
    case Form::kBaseN:
      return "N";
    case Form::kProd:
      return "(" + left_->to_string() + " x " + right_->to_string() + ")";
    case Form::kFun:
      return "(" + left_->to_string() + " => " + right_->to_string() + ")";
    case Form::kSetOf:
      return "Set(" + left_->to_string() + ")";
  }
  return "?";
}

Expr carrier(const Category& c) {
  switch (c.form()) {
    case Category::Form::kBaseN:
      return Expr::constant("Nat");
    case Category::Form::kProd:
      return Expr::apps(Expr::constant("Times"), {carrier(c.left()), carrier(c.right())});
    case Category::Form::kFun:
      return Expr::apps(Expr::constant("Arrow"), {carrier(c.left()), carrier(c.right())});
    case Category::Form::kSetOf:
      return Expr::app(Expr::constant("Set"), carrier(c.left()));
  }
  return Expr::constant("Nat");
}

std::optional<Expr> universe_name(const Category& c) {
  if (!c.basic()) return std::nullopt;
  if (c.form() == Category::Form::kBaseN) return Expr::constant("hatNat");
  return Expr::apps(Expr::constant("hatTimes"),
                    {*universe_name(c.left()), *universe_name(c.right())});
}

namespace {

Expr c(const char* name) { return Expr::constant(name); }

std::string fresh_for(const std::string& base, std::initializer_list<Expr> terms) {
  std::set<std::string> taken;
  for (const auto& t : terms) taken.insert(t.fv().begin(), t.fv().end());
  return fresh_name(base, taken);
}

// Projections and application through the eliminators, so that the
// generated terms need nothing beyond the core signature.
Expr project(const Category& p, const Expr& t, bool first) {
  Expr a = carrier(p.left());
  Expr b = carrier(p.right());
  Expr pair_t = Expr::apps(c("Times"), {a, b});
  std::string x = fresh_for("x", {t});
  std::string y = fresh_for("y", {t, Expr::var(x)});
  Expr motive = Expr::lam("_", Expr::el(pair_t), first ? a : b);
  Expr method = Expr::lam(x, Expr::el(a),
                          Expr::lam(y, Expr::el(b), Expr::var(first ? x : y)));
  return Expr::apps(c("E_Times"), {a, b, motive, method, t});
}

Expr apply(const Category& f, const Expr& t, const Expr& arg) {
  Expr a = carrier(f.left());
  Expr b = carrier(f.right());
  std::string g = fresh_for("g", {t, arg});
  Expr motive = Expr::lam("_", Expr::el(Expr::apps(c("Arrow"), {a, b})), b);
  Expr method = Expr::lam(g, Expr::arrow(Expr::el(a), Expr::el(b)),
                          Expr::app(Expr::var(g), arg));
  return Expr::apps(c("E_Arrow"), {a, b, motive, method, t});
}

Expr member(const Category& s, const Expr& x, const Expr& set) {
  return Expr::apps(c("In"), {carrier(s.left()), x, set});
}

Expr identity_proof(const Expr& p) {
  std::string h = fresh_for("h", {p});
  return Expr::apps(c("impI"), {p, p, Expr::lam(h, Expr::prf(p), Expr::var(h))});
}

}  // namespace

Expr equality_on(const Category& cat, const Expr& a, const Expr& b) {
  if (cat.basic()) return Expr::apps(c("Eq"), {*universe_name(cat), a, b});
  switch (cat.form()) {
    case Category::Form::kProd:
      return Expr::apps(
          c("And"),
          {equality_on(cat.left(), project(cat, a, true), project(cat, b, true)),
           equality_on(cat.right(), project(cat, a, false), project(cat, b, false))});
    case Category::Form::kFun: {
      std::string x = fresh_for("x", {a, b});
      Expr body = equality_on(cat.right(), apply(cat, a, Expr::var(x)),
                              apply(cat, b, Expr::var(x)));
      Expr dom = carrier(cat.left());
      return Expr::apps(c("forall"), {dom, Expr::lam(x, Expr::el(dom), body)});
    }
    case Category::Form::kSetOf: {
      std::string x = fresh_for("x", {a, b});
      Expr dom = carrier(cat.left());
      Expr body = Expr::apps(c("Iff"), {member(cat, Expr::var(x), a),
                                        member(cat, Expr::var(x), b)});
      return Expr::apps(c("forall"), {dom, Expr::lam(x, Expr::el(dom), body)});
    }
    case Category::Form::kBaseN:
      break;
  }
  return Expr::prop();  // unreachable: BaseN is basic
}

namespace {

Expr refl_on(const Category& cat, const Expr& a) {
  if (cat.basic()) return Expr::apps(c("EqI"), {*universe_name(cat), a});
  switch (cat.form()) {
    case Category::Form::kProd: {
      Expr l = project(cat, a, true);
      Expr r = project(cat, a, false);
      return Expr::apps(c("AndI"), {equality_on(cat.left(), l, l),
                                    equality_on(cat.right(), r, r),
                                    refl_on(cat.left(), l), refl_on(cat.right(), r)});
    }
    case Category::Form::kFun:
    case Category::Form::kSetOf: {
      std::string x = fresh_for("x", {a});
      Expr dom = carrier(cat.left());
      Expr vx = Expr::var(x);
      Expr stmt;
      Expr proof;
      if (cat.form() == Category::Form::kFun) {
        Expr ax = apply(cat, a, vx);
        stmt = equality_on(cat.right(), ax, ax);
        proof = refl_on(cat.right(), ax);
      } else {
        Expr p = member(cat, vx, a);
        stmt = Expr::apps(c("Iff"), {p, p});
        proof = Expr::apps(c("IffI"), {p, p, identity_proof(p), identity_proof(p)});
      }
      return Expr::apps(c("forallI"), {dom, Expr::lam(x, Expr::el(dom), stmt),
                                       Expr::lam(x, Expr::el(dom), proof)});
    }
    case Category::Form::kBaseN:
      break;
  }
  return Expr::prop();  // unreachable
}

}  // namespace

Expr generate_equality(const Category& cat) {
  Expr k = Expr::el(carrier(cat));
  return Expr::lam("a", k, Expr::lam("b", k, equality_on(cat, Expr::var("a"), Expr::var("b"))));
}

Expr reflexivity_proof(const Category& cat) {
  return Expr::lam("a", Expr::el(carrier(cat)), refl_on(cat, Expr::var("a")));
}

std::vector<Category> enumerate_categories(int max_depth) {
  // by_depth[d] holds the categories of depth exactly d + 1.
  std::vector<std::vector<Category>> by_depth;
  if (max_depth < 1) return {};
  by_depth.push_back({Category::base_n()});
  for (int d = 2; d <= max_depth; ++d) {
    std::vector<Category> level;
    std::vector<Category> below;
    for (const auto& l : by_depth) below.insert(below.end(), l.begin(), l.end());
    const auto& top = by_depth.back();
    auto deep = [&](const Category& x) { return x.depth() == d - 1; };
    for (auto form : {Category::Form::kProd, Category::Form::kFun}) {
      for (const auto& a : below) {
        for (const auto& b : below) {
          if (!deep(a) && !deep(b)) continue;
          level.push_back(form == Category::Form::kProd ? Category::prod(a, b)
                                                        : Category::fun(a, b));
        }
      }
    }
    for (const auto& a : top) level.push_back(Category::set_of(a));
    by_depth.push_back(std::move(level));
  }
  std::vector<Category> out;
  for (const auto& l : by_depth) out.insert(out.end(), l.begin(), l.end());
  return out;
}

}  // namespace lttw
