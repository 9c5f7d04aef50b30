/* Copyright 2026 The holkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "holkit/error.h"

namespace holkit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIllTypedApplication: return "IllTypedApplication";
    case ErrorCode::kNotARedex: return "NotARedex";
    case ErrorCode::kBadSubstitution: return "BadSubstitution";
    case ErrorCode::kNotAnEquation: return "NotAnEquation";
    case ErrorCode::kMidpointMismatch: return "MidpointMismatch";
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kVarFreeInHyps: return "VarFreeInHyps";
    case ErrorCode::kNotBoolean: return "NotBoolean";
    case ErrorCode::kAntecedentMismatch: return "AntecedentMismatch";
    case ErrorCode::kWrongMode: return "WrongMode";
    case ErrorCode::kNotAnImplication: return "NotAnImplication";
    case ErrorCode::kNotAForall: return "NotAForall";
    case ErrorCode::kNameClash: return "NameClash";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kTypeVarEscape: return "TypeVarEscape";
    case ErrorCode::kNonEmptyHyps: return "NonEmptyHyps";
    case ErrorCode::kMissingAxiom: return "MissingAxiom";
    case ErrorCode::kUndeclared: return "Undeclared";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnknownCommand: return "UnknownCommand";
    case ErrorCode::kStackUnderflow: return "StackUnderflow";
    case ErrorCode::kOperandKindMismatch: return "OperandKindMismatch";
    case ErrorCode::kDialectTooWeak: return "DialectTooWeak";
    case ErrorCode::kExportMismatch: return "ExportMismatch";
    case ErrorCode::kUnknownTypeOp: return "UnknownTypeOp";
    case ErrorCode::kUnregisteredConstant: return "UnregisteredConstant";
    case ErrorCode::kUnsupportedTraceNode: return "UnsupportedTraceNode";
    case ErrorCode::kTypeError: return "TypeError";
    case ErrorCode::kUnboundName: return "UnboundName";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& detail,
                           int line) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  out += error_code_name(code);
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(format_message(code, message, line)),
      code_(code),
      line_(line),
      detail_(message) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace holkit
