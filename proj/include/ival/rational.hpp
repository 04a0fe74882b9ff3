// Copyright 2026 The ival Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IVAL_RATIONAL_HPP
#define IVAL_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string_view>

namespace ival {

// Exact rational arithmetic. GMP keeps every mpq_class in canonical
// (reduced, positive denominator) form after each operation.
using Rational = mpq_class;

// Exact value of a finite double. Every finite binary64 value is a dyadic
// rational, so this never rounds.
Rational to_rational(double finite);

// Three-way comparison of a double (possibly infinite) against a rational.
// Signed zeros compare equal to 0. Returns <0, 0, >0.
int compare(double value, const Rational& q);

// Parses an unsigned or signed number literal into its exact value.
// Accepts decimal ("12", "0.1", "1.5e-3") and C99 hexadecimal-significand
// ("0x1.8p-3") forms. Returns nullopt on malformed text or a decimal
// exponent beyond +/-100000.
std::optional<Rational> parse_exact(std::string_view text);

} // namespace ival

#endif // IVAL_RATIONAL_HPP
