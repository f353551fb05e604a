/*
   Copyright 2026 The combcool Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace combcool {

/// Bad user input: config schema violations, out-of-range parameters,
/// dimension mismatches. CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Unit/dimension mismatch in a conversion.
class UnitError : public ValidationError {
public:
    explicit UnitError(const std::string& msg) : ValidationError(msg) {}
};

/// Failure while running an otherwise valid request (I/O, resolution
/// checks, ...). CLI maps this to exit code 3.
class RuntimeFailure : public std::runtime_error {
public:
    explicit RuntimeFailure(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace combcool
