// Copyright 2026 The polyreg Authors
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

#include <string>
#include <string_view>

#include "polyreg/field.hpp"

namespace polyreg {

/// Rational function in t as numerator / denominator, before factoring.
struct RationalFunction {
  Polynomial num{1};
  Polynomial den{1};
};

/// Parses the expression grammar: rationals, t, + - * / ^ (integer
/// exponents), parentheses. Throws Error("syntax") with the offending
/// position, or Error("zero") for the zero function / division by zero.
RationalFunction parse_rational_function(std::string_view text);
FieldElement parse_expr(std::string_view text);

/// "t-3", "t^2+1", "inf" (also "infinity").
Place parse_place(std::string_view text);

/// "a+bi", "a-bi", "a", "bi", "i"; decimal and exponent notation allowed.
Complex parse_complex(std::string_view text);
std::string format_complex(Complex z);
std::string format_double(double x);

}  // namespace polyreg
