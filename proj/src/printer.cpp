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

#include "lttw/printer.hpp"

namespace lttw {

namespace {

enum class Prec { kTop, kArrowDomain, kAppFun, kAtom };

bool is_atomic(const Expr& e) {
  switch (e.tag()) {
    case Tag::kVar:
    case Tag::kConst:
    case Tag::kMeta:
    case Tag::kType:
    case Tag::kProp:
      return true;
    case Tag::kEl:
      return is_atomic(e.inner());
    default:
      return false;
  }
}

class Printer {
 public:
  std::string out;

  void expr(const Expr& e, Prec p) {
    switch (e.tag()) {
      case Tag::kVar:
      case Tag::kConst:
        out += e.name();
        return;
      case Tag::kMeta:
        out += "?" + std::to_string(e.meta_id());
        return;
      case Tag::kType:
        out += "Type";
        return;
      case Tag::kProp:
        out += "Prop";
        return;
      case Tag::kEl:
        expr(e.inner(), p);
        return;
      case Tag::kPrf:
        wrap(p >= Prec::kAppFun, [&] {
          out += "Prf ";
          expr(e.inner(), Prec::kAtom);
        });
        return;
      case Tag::kApp: {
        wrap(p == Prec::kAtom, [&] {
          Spine s = decompose(e);
          expr(s.head, Prec::kAppFun);
          for (const auto& a : s.args) {
            out += ' ';
            expr(a, Prec::kAtom);
          }
        });
        return;
      }
      case Tag::kLam:
        wrap(p != Prec::kTop, [&] {
          out += "[" + e.name() + " : ";
          expr(e.domain(), Prec::kTop);
          out += "] ";
          expr(e.body(), Prec::kTop);
        });
        return;
      case Tag::kPi:
        wrap(p != Prec::kTop, [&] { pi(e); });
        return;
    }
  }

 private:
  template <typename F>
  void wrap(bool parens, F&& f) {
    if (parens) out += '(';
    f();
    if (parens) out += ')';
  }

  void pi(const Expr& e) {
    if (!occurs_free(e.codomain(), e.name())) {
      expr(e.domain(), Prec::kArrowDomain);
      out += " -> ";
      expr(e.codomain(), Prec::kTop);
      return;
    }
    // Group (x : D) (y : D) ... while the domain repeats and does not mention
    // an earlier binder of the group.
    std::vector<std::string> names{e.name()};
    Expr cur = e.codomain();
    while (cur.is(Tag::kPi) && occurs_free(cur.codomain(), cur.name()) &&
           alpha_eq(cur.domain(), e.domain())) {
      bool mentions = false;
      for (const auto& n : names) {
        if (occurs_free(cur.domain(), n) || n == cur.name()) mentions = true;
      }
      if (mentions) break;
      names.push_back(cur.name());
      cur = cur.codomain();
    }
    out += '(';
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out += ", ";
      out += names[i];
    }
    out += " : ";
    expr(e.domain(), Prec::kTop);
    out += ") ";
    expr(cur, Prec::kTop);
  }
};

}  // namespace

std::string print(const Expr& e) {
  if (!e) return "<null>";
  Printer p;
  p.expr(e, Prec::kTop);
  return p.out;
}

std::string print_context(
    const std::vector<std::pair<std::string, Expr>>& entries) {
  std::string out;
  for (const auto& [name, kind] : entries) {
    if (!out.empty()) out += ", ";
    out += name + " : " + print(kind);
  }
  return out.empty() ? "<>" : out;
}

}  // namespace lttw
