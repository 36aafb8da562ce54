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

#include "lttw/error.hpp"

#include <array>
#include <utility>

namespace lttw {

namespace {

constexpr std::array<std::pair<ErrorClass, std::string_view>, 24> kNames = {{
    {ErrorClass::kSyntaxError, "SyntaxError"},
    {ErrorClass::kUnterminatedCommand, "UnterminatedCommand"},
    {ErrorClass::kDuplicateName, "DuplicateName"},
    {ErrorClass::kIllFormedKind, "IllFormedKind"},
    {ErrorClass::kNonLinearPattern, "NonLinearPattern"},
    {ErrorClass::kHeadNotConstant, "HeadNotConstant"},
    {ErrorClass::kKindMismatch, "KindMismatch"},
    {ErrorClass::kUnknownConstant, "UnknownConstant"},
    {ErrorClass::kUnboundVariable, "UnboundVariable"},
    {ErrorClass::kNotAProduct, "NotAProduct"},
    {ErrorClass::kDomainMismatch, "DomainMismatch"},
    {ErrorClass::kAscriptionMismatch, "AscriptionMismatch"},
    {ErrorClass::kIllTyped, "IllTyped"},
    {ErrorClass::kNotFound, "NotFound"},
    {ErrorClass::kFuelExhausted, "FuelExhausted"},
    {ErrorClass::kDuplicateVariable, "DuplicateVariable"},
    {ErrorClass::kUnsolvedMeta, "UnsolvedMeta"},
    {ErrorClass::kUnificationFailure, "UnificationFailure"},
    {ErrorClass::kOccursCheck, "OccursCheck"},
    {ErrorClass::kScopeEscape, "ScopeEscape"},
    {ErrorClass::kOverlappingRule, "OverlappingRule"},
    {ErrorClass::kBadPattern, "BadPattern"},
    {ErrorClass::kIoError, "IoError"},
    {ErrorClass::kMismatchedOutcome, "MismatchedOutcome"},
}};

}  // namespace

std::string_view error_class_name(ErrorClass c) {
  for (const auto& [cls, name] : kNames) {
    if (cls == c) return name;
  }
  return "Unknown";
}

std::optional<ErrorClass> error_class_from_name(std::string_view name) {
  for (const auto& [cls, n] : kNames) {
    if (n == name) return cls;
  }
  return std::nullopt;
}

std::string SourceSpan::to_string() const {
  std::string out = file.empty() ? "<input>" : file;
  if (valid()) {
    out += ":" + std::to_string(line) + ":" + std::to_string(column);
  }
  return out;
}

std::string Diagnostic::render() const {
  std::string out;
  if (span.valid() || !span.file.empty()) out += span.to_string() + ": ";
  out += "error[";
  out += error_class_name(error_class);
  out += "]: ";
  out += message;
  if (!judgement.empty()) out += "\n  judgement: " + judgement;
  if (!rule.empty()) out += "\n  rule: " + rule;
  return out;
}

Error::Error(Diagnostic d) : std::runtime_error(d.message), diag_(std::move(d)) {}

Error::Error(ErrorClass c, std::string message, std::string rule,
             std::string judgement)
    : std::runtime_error(message) {
  diag_.error_class = c;
  diag_.message = std::move(message);
  diag_.rule = std::move(rule);
  diag_.judgement = std::move(judgement);
}

}  // namespace lttw
