/*
   Copyright 2026 The apnforge Authors

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

#ifndef APNFORGE_ERROR_HPP
#define APNFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace apnforge {

/// Root of every exception thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad input: malformed literal, reducible modulus, out-of-range parameter.
struct InvalidArgument : Error {
    using Error::Error;
};

struct ParseError : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

/// A catalog family's published constraint is not met.
struct ConstraintViolation : InvalidArgument {
    ConstraintViolation(std::string constraint_name, const std::string& what)
        : InvalidArgument(what), constraint(std::move(constraint_name)) {}
    std::string constraint;
};

/// Operands live in different FieldCtx instances.
struct FieldMismatch : Error {
    FieldMismatch() : Error("operands belong to different fields") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// Exact division left a nonzero remainder.
struct NotDivisible : Error {
    using Error::Error;
};

/// An exponent or field size exceeds the configured limit.
struct CapExceeded : Error {
    using Error::Error;
};

/// Specialization y = g(x) lost degree, so it cannot witness anything.
struct DegreeCollapse : Error {
    using Error::Error;
};

/// The hypothesis of an elimination rule does not hold for this input.
struct Inapplicable : Error {
    using Error::Error;
};

struct BudgetExhausted : Error {
    using Error::Error;
};

}  // namespace apnforge

#endif  // APNFORGE_ERROR_HPP
