// Copyright 2026 The GDM Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace gdm {

enum class Errc {
  kInvalidParams,
  kContextMismatch,
  kNonInvertible,
  kNotAUnit,
  kNoSuchRoot,
  kNoRationalization,
  kLengthMismatch,
  kNotGroundField,
  kNotCoprime,
  kUnsupportedParams,
  kInconsistentFrame,
  kBadMagic,
  kBadLength,
  kParamMismatch,
  kExtensionNotEmbeddable,
  kParseError,
};

inline const char* to_string(Errc code) {
  switch (code) {
    case Errc::kInvalidParams: return "InvalidParams";
    case Errc::kContextMismatch: return "ContextMismatch";
    case Errc::kNonInvertible: return "NonInvertible";
    case Errc::kNotAUnit: return "NotAUnit";
    case Errc::kNoSuchRoot: return "NoSuchRoot";
    case Errc::kNoRationalization: return "NoRationalization";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kNotGroundField: return "NotGroundField";
    case Errc::kNotCoprime: return "NotCoprime";
    case Errc::kUnsupportedParams: return "UnsupportedParams";
    case Errc::kInconsistentFrame: return "InconsistentFrame";
    case Errc::kBadMagic: return "BadMagic";
    case Errc::kBadLength: return "BadLength";
    case Errc::kParamMismatch: return "ParamMismatch";
    case Errc::kExtensionNotEmbeddable: return "ExtensionNotEmbeddable";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

  Errc code() const noexcept { return code_; }
  /// The description without the code name.
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace gdm
