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

// This translation unit is compiled with -frounding-math and
// -ffp-contract=off so the compiler neither folds nor fuses operations
// across rounding-mode changes.

#include "ival/fp_kernel.hpp"

#include <cfenv>
#include <limits>

namespace ival {

namespace {

class RoundingScope {
public:
    explicit RoundingScope(Rounding dir) : saved_(std::fegetround())
    {
        std::fesetround(dir == Rounding::down ? FE_DOWNWARD : FE_UPWARD);
    }
    ~RoundingScope() { std::fesetround(saved_); }

    RoundingScope(const RoundingScope&) = delete;
    RoundingScope& operator=(const RoundingScope&) = delete;

private:
    int saved_;
};

// The volatile round trip pins the operation between the mode switches.
inline double force(double r)
{
    volatile double pinned = r;
    return pinned;
}

} // namespace

double add_dir(double a, double b, Rounding dir)
{
    IVAL_EXPECTS(!std::isnan(a) && !std::isnan(b) && !undefined_sum(a, b));
    RoundingScope scope(dir);
    volatile double x = a;
    volatile double y = b;
    return force(x + y);
}

double sub_dir(double a, double b, Rounding dir)
{
    IVAL_EXPECTS(!std::isnan(a) && !std::isnan(b) && !undefined_difference(a, b));
    RoundingScope scope(dir);
    volatile double x = a;
    volatile double y = b;
    return force(x - y);
}

double mul_dir(double a, double b, Rounding dir)
{
    IVAL_EXPECTS(!std::isnan(a) && !std::isnan(b) && !undefined_product(a, b));
    RoundingScope scope(dir);
    volatile double x = a;
    volatile double y = b;
    return force(x * y);
}

double div_dir(double a, double b, Rounding dir)
{
    IVAL_EXPECTS(!std::isnan(a) && !std::isnan(b) && !undefined_quotient(a, b));
    RoundingScope scope(dir);
    volatile double x = a;
    volatile double y = b;
    return force(x / y);
}

namespace {

constexpr double kMax = std::numeric_limits<double>::max();
constexpr double kInf = std::numeric_limits<double>::infinity();

// Greatest double <= q, for q within the finite range.
double floor_to_double(const Rational& q)
{
    // mpq_get_d truncates toward zero, so it lands on or next to the answer.
    double d = q.get_d();
    while (cmp(to_rational(d), q) > 0) d = std::nextafter(d, -kInf);
    for (;;) {
        const double next = std::nextafter(d, kInf);
        if (std::isinf(next) || cmp(to_rational(next), q) > 0) break;
        d = next;
    }
    return d;
}

} // namespace

double round_real_down(const Rational& q)
{
    static const Rational max_finite = to_rational(kMax);
    if (q > max_finite) return kMax;
    if (q < -max_finite) return -kInf;
    const double d = floor_to_double(q);
    return d == 0.0 ? 0.0 : d;
}

double round_real_up(const Rational& q)
{
    static const Rational max_finite = to_rational(kMax);
    if (q > max_finite) return kInf;
    if (q < -max_finite) return -kMax;
    double d = floor_to_double(q);
    if (cmp(to_rational(d), q) != 0) d = std::nextafter(d, kInf);
    return d == 0.0 && q < 0 ? -0.0 : d;
}

} // namespace ival
