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

#ifndef HOLKIT_ERROR_H_
#define HOLKIT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace holkit {

enum class ErrorCode {
  // Syntax layer.
  kIllTypedApplication,
  kNotARedex,
  kBadSubstitution,
  // Kernel.
  kNotAnEquation,
  kMidpointMismatch,
  kTypeMismatch,
  kVarFreeInHyps,
  kNotBoolean,
  kAntecedentMismatch,
  kWrongMode,
  kNotAnImplication,
  kNotAForall,
  kNameClash,
  kNotClosed,
  kTypeVarEscape,
  kNonEmptyHyps,
  kMissingAxiom,
  kUndeclared,
  // Derived rules.
  kSchemaMismatch,
  // Articles.
  kSyntaxError,
  kUnknownCommand,
  kStackUnderflow,
  kOperandKindMismatch,
  kDialectTooWeak,
  kExportMismatch,
  // LP translation and checking.
  kUnknownTypeOp,
  kUnregisteredConstant,
  kUnsupportedTraceNode,
  kTypeError,
  kUnboundName,
  kBudgetExceeded,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// All failures raised by holkit carry a code. `line` is 1-based and zero when
// the error is not tied to an input location.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const { return code_; }
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

  // Returns a copy of this error located at `line`.
  Error at_line(int line) const { return Error(code_, detail_, line); }

 private:
  ErrorCode code_;
  int line_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace holkit

#endif  // HOLKIT_ERROR_H_
