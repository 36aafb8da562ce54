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

// Script format: only lines whose first character is `>` are read; every
// other line is a comment. Commands end with `;` and may span several `>`
// lines.
//
//   > [c [x : K] ... : K];            declaration
//   > [c [x : K] ... = k];            definition (`: K` optional)
//   > [rule [x : K] ... l = r];       computation rule (`: K` optional)
//   > Load "file.lf";  TypeOf t;  Reduce t;  Check t : K;
//   > SetOption name value;
//
// Terms: juxtaposition is application, `[x : K] e` abstraction (`[x]` and
// `[x, y : K]` allowed), `(x : K) K'` product, `K -> K'` arrow, `?` hole,
// `.x` inaccessible pattern. `0` and decimal numerals are sugar for `zero`
// and iterated `succ`.

#ifndef LTTW_PARSER_HPP_
#define LTTW_PARSER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "lttw/syntax.hpp"

namespace lttw {

// Throws SyntaxError or UnterminatedCommand, with a span inside `text`.
std::vector<Command> parse_script(std::string_view text,
                                  const std::string& file = {});

// Parses a bare term (no leading `>`, no terminating `;`).
STermPtr parse_term(std::string_view text, const std::string& file = {});

}  // namespace lttw

#endif  // LTTW_PARSER_HPP_
