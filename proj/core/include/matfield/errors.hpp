/*
   Copyright 2026 The matfield authors

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

#ifndef MATFIELD_ERRORS_HPP
#define MATFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matfield {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad literals, rank mismatches, unknown ids, bad spec files.
class InputError : public Error {
public:
    using Error::Error;
};

/// Undefined arithmetic, e.g. division by zero.
class ArithError : public Error {
public:
    using Error::Error;
};

/// Inverting a matrix whose determinant is zero.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// A closure or search exceeded its configured caps.
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// Spec-file parse failure with position information.
class SpecParseError : public InputError {
public:
    SpecParseError(const std::string& what, int line, int column)
        : InputError(what), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace matfield

#endif
