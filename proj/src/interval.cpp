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

#include "ival/interval.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace ival {

Interval Interval::make(double lo, double hi)
{
    if (std::isnan(lo) || std::isnan(hi)) {
        throw std::invalid_argument("interval bound is NaN");
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (lo > hi || lo == inf || hi == -inf) return empty();
    return Interval(normalize_zero_bound(lo, BoundSide::lower), normalize_zero_bound(hi, BoundSide::upper));
}

bool operator==(const Interval& x, const Interval& y) noexcept
{
    if (x.empty_ || y.empty_) return x.empty_ == y.empty_;
    return std::bit_cast<std::uint64_t>(x.lo_) == std::bit_cast<std::uint64_t>(y.lo_)
        && std::bit_cast<std::uint64_t>(x.hi_) == std::bit_cast<std::uint64_t>(y.hi_);
}

Interval make_interval(double lo, double hi)
{
    return Interval::make(lo, hi);
}

IntervalClass classify(const Interval& x)
{
    if (x.is_empty()) throw std::domain_error("classification of empty interval");
    const double u = x.lo();
    const double v = x.hi();
    if (u > 0) return IntervalClass::P1;
    if (v < 0) return IntervalClass::N1;
    if (u == 0) return v == 0 ? IntervalClass::Z : IntervalClass::P0;
    return v == 0 ? IntervalClass::N0 : IntervalClass::M;
}

const char* to_string(IntervalClass c) noexcept
{
    switch (c) {
    case IntervalClass::M: return "M";
    case IntervalClass::Z: return "Z";
    case IntervalClass::P0: return "P0";
    case IntervalClass::P1: return "P1";
    case IntervalClass::N0: return "N0";
    case IntervalClass::N1: return "N1";
    }
    return "?";
}

bool member(const Rational& x, const Interval& set)
{
    if (set.is_empty()) return false;
    return compare(set.lo(), x) <= 0 && compare(set.hi(), x) >= 0;
}

bool is_subset(const Interval& inner, const Interval& outer) noexcept
{
    if (inner.is_empty()) return true;
    if (outer.is_empty()) return false;
    return outer.lo() <= inner.lo() && inner.hi() <= outer.hi();
}

Interval intersect(const Interval& x, const Interval& y)
{
    if (x.is_empty() || y.is_empty()) return Interval::empty();
    return make_interval(std::max(x.lo(), y.lo()), std::min(x.hi(), y.hi()));
}

Interval hull(const Interval& x, const Interval& y)
{
    if (x.is_empty()) return y;
    if (y.is_empty()) return x;
    return make_interval(std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi()));
}

std::string format_bound(double v, Notation notation)
{
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    std::array<char, 64> buf{};
    if (notation == Notation::decimal) {
        auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
        return std::string(buf.data(), end);
    }
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::fabs(v), std::chars_format::hex);
    std::string out = std::signbit(v) ? "-0x" : "0x";
    out.append(buf.data(), end);
    return out;
}

std::string to_string(const Interval& x, Notation notation)
{
    if (x.is_empty()) return "Empty";
    return "[" + format_bound(x.lo(), notation) + "," + format_bound(x.hi(), notation) + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& x)
{
    return os << to_string(x);
}

} // namespace ival
