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

#ifndef IVAL_INTERVAL_HPP
#define IVAL_INTERVAL_HPP

#include "ival/fp_kernel.hpp"
#include "ival/rational.hpp"

#include <iosfwd>
#include <limits>
#include <string>

namespace ival {

// A closed set of reals bounded by floating-point values, or the empty set.
//
// Nonempty intervals satisfy lo <= hi, lo != +inf, hi != -inf, and carry a
// zero lower bound as +0 and a zero upper bound as -0, so {0} is <+0,-0>.
// Infinite bounds only describe unbounded sets; they are never members.
class Interval {
public:
    // The empty set.
    constexpr Interval() noexcept = default;

    // Normalizes zero signs and returns Empty when the bounds describe no
    // reals (lo > hi, lo = +inf or hi = -inf). Throws std::invalid_argument
    // on NaN.
    static Interval make(double lo, double hi);

    static constexpr Interval empty() noexcept { return Interval(); }
    static constexpr Interval entire() noexcept
    {
        return Interval(-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity());
    }
    static constexpr Interval zero() noexcept { return Interval(0.0, -0.0); }

    constexpr bool is_empty() const noexcept { return empty_; }
    // Bounds of a nonempty interval.
    constexpr double lo() const noexcept { return lo_; }
    constexpr double hi() const noexcept { return hi_; }

    // Bitwise equality of the normalized bounds.
    friend bool operator==(const Interval& x, const Interval& y) noexcept;

private:
    constexpr Interval(double lo, double hi) noexcept : empty_(false), lo_(lo), hi_(hi) {}

    bool empty_ = true;
    double lo_ = 0.0;
    double hi_ = -0.0;
};

Interval make_interval(double lo, double hi);

// Sign classification of nonempty intervals.
//   M  : lo < 0 < hi        Z  : lo = hi = 0
//   P0 : lo = 0 < hi        P1 : 0 < lo
//   N0 : lo < 0 = hi        N1 : hi < 0
enum class IntervalClass { M, Z, P0, P1, N0, N1 };

// Throws std::domain_error for Empty.
IntervalClass classify(const Interval& x);

constexpr bool is_positive_class(IntervalClass c) noexcept
{
    return c == IntervalClass::P0 || c == IntervalClass::P1;
}
constexpr bool is_negative_class(IntervalClass c) noexcept
{
    return c == IntervalClass::N0 || c == IntervalClass::N1;
}

const char* to_string(IntervalClass c) noexcept;

bool member(const Rational& x, const Interval& set);
bool is_subset(const Interval& inner, const Interval& outer) noexcept;
Interval intersect(const Interval& x, const Interval& y);
// Least interval containing both arguments.
Interval hull(const Interval& x, const Interval& y);

// Least interval of the format containing the finite rational q.
template <BoundFormat F>
Interval phi_point(const F& format, const Rational& q)
{
    return make_interval(format.round_down(q), format.round_up(q));
}

inline Interval phi_point(const Rational& q)
{
    return phi_point(Binary64{}, q);
}

enum class Notation {
    decimal, // shortest round-trip decimal
    hex,     // C99 hexadecimal significand, exact
};

// "[lo,hi]" with "-inf"/"inf" for infinities and "Empty" for the empty set.
// A zero lower bound prints as 0 and a zero upper bound as -0.
std::string to_string(const Interval& x, Notation notation = Notation::decimal);
std::string format_bound(double v, Notation notation);

std::ostream& operator<<(std::ostream& os, const Interval& x);

} // namespace ival

#endif // IVAL_INTERVAL_HPP
