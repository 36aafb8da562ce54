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

#ifndef LTTW_ERROR_HPP_
#define LTTW_ERROR_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lttw {

// Stable error classes. The names are part of the manifest format
// (`reject:<ErrorClass>`) and of the C API, so append only.
enum class ErrorClass {
  kSyntaxError,
  kUnterminatedCommand,
  kDuplicateName,
  kIllFormedKind,
  kNonLinearPattern,
  kHeadNotConstant,
  kKindMismatch,
  kUnknownConstant,
  kUnboundVariable,
  kNotAProduct,
  kDomainMismatch,
  kAscriptionMismatch,
  kIllTyped,
  kNotFound,
  kFuelExhausted,
  kDuplicateVariable,
  kUnsolvedMeta,
  kUnificationFailure,
  kOccursCheck,
  kScopeEscape,
  kOverlappingRule,
  kBadPattern,
  kIoError,
  kMismatchedOutcome,
};

std::string_view error_class_name(ErrorClass c);
std::optional<ErrorClass> error_class_from_name(std::string_view name);

struct SourceSpan {
  std::string file;
  int line = 0;
  int column = 0;
  int end_line = 0;
  int end_column = 0;

  bool valid() const { return line > 0; }
  std::string to_string() const;
};

// Every rejection carries one of these. `judgement` is the failing judgement
// rendered in script syntax; `rule` names the rule of deduction that could
// not be applied.
struct Diagnostic {
  ErrorClass error_class = ErrorClass::kIllTyped;
  std::string judgement;
  std::string rule;
  std::string message;
  SourceSpan span;

  std::string render() const;
};

class Error : public std::runtime_error {
 public:
  explicit Error(Diagnostic d);
  Error(ErrorClass c, std::string message, std::string rule = {},
        std::string judgement = {});

  const Diagnostic& diagnostic() const { return diag_; }
  Diagnostic& diagnostic() { return diag_; }
  ErrorClass error_class() const { return diag_.error_class; }

 private:
  Diagnostic diag_;
};

}  // namespace lttw

#endif  // LTTW_ERROR_HPP_
