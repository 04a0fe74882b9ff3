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

#include "ival/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

namespace ival {

namespace {

constexpr long kMaxDecimalExponent = 100000;

int hex_digit(char c)
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

// Parses an optionally signed decimal exponent; advances pos.
std::optional<long> parse_exponent(std::string_view s, std::size_t& pos)
{
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return std::nullopt;
    long value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        value = value * 10 + (s[pos] - '0');
        if (value > kMaxDecimalExponent * 10) return std::nullopt;
        ++pos;
    }
    return negative ? -value : value;
}

Rational scale_by_power(Rational q, unsigned base, long exponent)
{
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), base, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent >= 0) {
        q *= power;
    } else {
        q /= power;
    }
    q.canonicalize();
    return q;
}

std::optional<Rational> parse_hex(std::string_view s)
{
    // s starts after "0x".
    mpz_class mantissa = 0;
    long fraction_digits = 0;
    bool any_digit = false;
    bool seen_point = false;
    std::size_t pos = 0;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (c == '.') {
            if (seen_point) return std::nullopt;
            seen_point = true;
            continue;
        }
        const int digit = hex_digit(c);
        if (digit < 0) break;
        mantissa = mantissa * 16 + digit;
        any_digit = true;
        if (seen_point) ++fraction_digits;
    }
    if (!any_digit) return std::nullopt;
    long exponent = 0;
    if (pos < s.size() && (s[pos] == 'p' || s[pos] == 'P')) {
        ++pos;
        auto e = parse_exponent(s, pos);
        if (!e) return std::nullopt;
        exponent = *e;
    }
    if (pos != s.size()) return std::nullopt;
    return scale_by_power(Rational(mantissa), 2, exponent - 4 * fraction_digits);
}

std::optional<Rational> parse_decimal(std::string_view s)
{
    mpz_class mantissa = 0;
    long fraction_digits = 0;
    bool any_digit = false;
    bool seen_point = false;
    std::size_t pos = 0;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (c == '.') {
            if (seen_point) return std::nullopt;
            seen_point = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) break;
        mantissa = mantissa * 10 + (c - '0');
        any_digit = true;
        if (seen_point) ++fraction_digits;
    }
    if (!any_digit) return std::nullopt;
    long exponent = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        auto e = parse_exponent(s, pos);
        if (!e) return std::nullopt;
        exponent = *e;
    }
    if (pos != s.size()) return std::nullopt;
    if (exponent > kMaxDecimalExponent || exponent < -kMaxDecimalExponent) return std::nullopt;
    return scale_by_power(Rational(mantissa), 10, exponent - fraction_digits);
}

} // namespace

Rational to_rational(double finite)
{
    return Rational(finite);
}

int compare(double value, const Rational& q)
{
    if (std::isinf(value)) return value < 0 ? -1 : 1;
    const int c = cmp(to_rational(value), q);
    return (c > 0) - (c < 0);
}

std::optional<Rational> parse_exact(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::optional<Rational> value;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        value = parse_hex(text.substr(2));
    } else {
        value = parse_decimal(text);
    }
    if (value && negative) *value = -*value;
    return value;
}

} // namespace ival
