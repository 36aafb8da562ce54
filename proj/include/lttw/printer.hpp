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

#ifndef LTTW_PRINTER_HPP_
#define LTTW_PRINTER_HPP_

#include <string>
#include <utility>
#include <vector>

#include "lttw/expr.hpp"

namespace lttw {

// Renders terms and kinds in script syntax. El is left implicit, Prf is
// written out, non-dependent products print as `->`, and consecutive
// dependent binders with the same domain are grouped as `(p, q : Prop)`.
std::string print(const Expr& e);

std::string print_context(
    const std::vector<std::pair<std::string, Expr>>& entries);

}  // namespace lttw

#endif  // LTTW_PRINTER_HPP_
