// Copyright 2026 The Sanitizer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sanitizer/common.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace sanitizer {

namespace {

LogLevel parse_level() {
  const char* env = std::getenv("SANITIZER_LOG");
  if (env == nullptr) return LogLevel::kInfo;
  const std::string s(env);
  if (s == "error") return LogLevel::kError;
  if (s == "debug") return LogLevel::kDebug;
  return LogLevel::kInfo;
}

std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level();
  return level;
}

void log_message(LogLevel level, const std::string& msg) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  const char* tag = level == LogLevel::kError   ? "error"
                    : level == LogLevel::kDebug ? "debug"
                                                : "info";
  std::lock_guard<std::mutex> lock(log_mutex());
  std::cerr << "[" << tag << "] " << msg << "\n";
}

}  // namespace sanitizer
