// Copyright 2026 The Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace tutte {

// All library failures derive from Error and carry a stable code string so
// callers (CLI, suites) can report them uniformly.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct FractionalSubstitution : Error {
  explicit FractionalSubstitution(const std::string& w)
      : Error("FractionalSubstitution", w) {}
};

struct NonSquareBase : Error {
  explicit NonSquareBase(const std::string& w) : Error("NonSquareBase", w) {}
};

struct UnboundVariable : Error {
  explicit UnboundVariable(const std::string& w) : Error("UnboundVariable", w) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& w) : Error("CapExceeded", w) {}
};

struct WrongGrade : Error {
  explicit WrongGrade(const std::string& w) : Error("WrongGrade", w) {}
};

struct ProfileMismatch : Error {
  explicit ProfileMismatch(const std::string& w) : Error("ProfileMismatch", w) {}
};

struct OverlappingSets : Error {
  explicit OverlappingSets(const std::string& w) : Error("OverlappingSets", w) {}
};

struct NotAMatroid : Error {
  explicit NotAMatroid(const std::string& w) : Error("NotAMatroid", w) {}
};

struct NotAPerspective : Error {
  explicit NotAPerspective(const std::string& w) : Error("NotAPerspective", w) {}
};

struct NotADeltaMatroid : Error {
  explicit NotADeltaMatroid(const std::string& w)
      : Error("NotADeltaMatroid", w) {}
};

struct SelectorIncompatible : Error {
  explicit SelectorIncompatible(const std::string& w)
      : Error("SelectorIncompatible", w) {}
};

struct NotCellular : Error {
  explicit NotCellular(const std::string& w) : Error("NotCellular", w) {}
};

struct UnknownSuite : Error {
  explicit UnknownSuite(const std::string& w) : Error("UnknownSuite", w) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error("ParseError", w) {}
};

}  // namespace tutte
