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

#ifndef SANITIZER_COMMON_HPP_
#define SANITIZER_COMMON_HPP_

#include <stdexcept>
#include <string>

namespace sanitizer {

// Error taxonomy shared by the library and the CLI. The CLI maps each
// category to a distinct process exit code (config=2, io=3, numeric=4,
// mechanism=5).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

class MechanismError : public std::runtime_error {
 public:
  explicit MechanismError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

// Level is read once from the SANITIZER_LOG environment variable
// (error|info|debug, default info).
LogLevel log_level();
void log_message(LogLevel level, const std::string& msg);

inline void log_info(const std::string& msg) { log_message(LogLevel::kInfo, msg); }
inline void log_debug(const std::string& msg) { log_message(LogLevel::kDebug, msg); }
inline void log_error(const std::string& msg) { log_message(LogLevel::kError, msg); }

}  // namespace sanitizer

#endif  // SANITIZER_COMMON_HPP_
