// src/base/log.h

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

#ifndef PHONACQ_BASE_LOG_H_
#define PHONACQ_BASE_LOG_H_

#include <iostream>
#include <sstream>

namespace phonacq {

// 0 = warnings only, 1 = progress (default), 2 = per-epoch detail.
int GetVerbosity();
void SetVerbosity(int v);

class LogMessage {
 public:
  LogMessage(const char *level, const char *func) {
    ss_ << level << " (" << func << ") ";
  }
  ~LogMessage() { std::cerr << ss_.str() << '\n'; }
  std::ostream &stream() { return ss_; }

 private:
  std::ostringstream ss_;
};

}  // namespace phonacq

#define PHONACQ_LOG \
  if (::phonacq::GetVerbosity() >= 1) \
  ::phonacq::LogMessage("LOG", __func__).stream()
#define PHONACQ_VLOG(v) \
  if (::phonacq::GetVerbosity() >= (v)) \
  ::phonacq::LogMessage("VLOG", __func__).stream()
#define PHONACQ_WARN ::phonacq::LogMessage("WARNING", __func__).stream()

#endif  // PHONACQ_BASE_LOG_H_
