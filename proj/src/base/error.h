// src/base/error.h

// Copyright 2026  The phonacq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef PHONACQ_BASE_ERROR_H_
#define PHONACQ_BASE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace phonacq {

enum class ErrorCode {
  kMissingFile,
  kMalformedHeader,
  kUnsupportedEncoding,
  kInvalidArgument,
  kParse,
  kOverlappingInterval,
  kReversedInterval,
  kUnwritable,
  kShortAudio,
  kVersionMismatch,
  kTruncated,
  kEmptyInput,
  kDimensionMismatch,
  kInsufficientData,
  kDegenerate,
  kSplitOverlap,
  kUnknownLabel,
};

std::string_view ErrorCodeName(ErrorCode code);

/// Exception type used throughout the library.  The code is stable and is
/// what the command-line tool prints in its machine-readable error line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string &what) {
  throw Error(code, what);
}

}  // namespace phonacq

#endif  // PHONACQ_BASE_ERROR_H_
