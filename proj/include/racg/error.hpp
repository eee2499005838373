// Copyright 2026 the racg authors
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

#ifndef RACG_ERROR_HPP
#define RACG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace racg {

enum class ErrorKind {
  InvalidInput,        // malformed documents, unknown names, violated input invariants
  Precondition,        // operation called outside its contract
  InvariantViolation,  // a certified invariant failed; internal defect or corrupt data
  Budget,              // size/effort guard exceeded
  Truncation,          // needed cells lie outside the ambient ball
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::InvariantViolation: return "invariant_violation";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::Truncation: return "truncation";
  }
  return "unknown";
}

struct Error : std::runtime_error {
  ErrorKind kind;
  nlohmann::json detail;

  Error(ErrorKind k, const std::string& msg, nlohmann::json d = nlohmann::json::object())
      : std::runtime_error(msg), kind(k), detail(std::move(d)) {}

  nlohmann::json to_json() const {
    return nlohmann::json{{"error", {{"kind", to_string(kind)}, {"message", what()}, {"detail", detail}}}};
  }
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg,
                              nlohmann::json detail = nlohmann::json::object()) {
  throw Error(k, msg, std::move(detail));
}

inline void require(bool cond, ErrorKind k, const std::string& msg,
                    nlohmann::json detail = nlohmann::json::object()) {
  if (!cond) fail(k, msg, std::move(detail));
}

}  // namespace racg

#endif  // RACG_ERROR_HPP
