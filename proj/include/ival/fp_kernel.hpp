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

#ifndef IVAL_FP_KERNEL_HPP
#define IVAL_FP_KERNEL_HPP

#include "ival/rational.hpp"

#include <cmath>
#include <concepts>

// Kernel preconditions (no NaN operands, no undefined extended-real form)
// trap in debug builds. Release builds rely on the interval layer's case
// dispatch, which never produces a violating call.
#if !defined(NDEBUG) || defined(IVAL_CONTRACT_CHECKS)
#include <cstdio>
#include <cstdlib>
#define IVAL_EXPECTS(cond)                                                                         \
    do {                                                                                           \
        if (!(cond)) [[unlikely]] {                                                                \
            std::fprintf(stderr, "%s:%d: kernel contract violated: %s\n", __FILE__, __LINE__, #cond); \
            std::abort();                                                                          \
        }                                                                                          \
    } while (false)
#else
#define IVAL_EXPECTS(cond) ((void)0)
#endif

namespace ival {

enum class Rounding { down, up };

enum class BoundSide { lower, upper };

// A zero lower bound is +0 and a zero upper bound is -0; anything else is
// returned unchanged.
constexpr double normalize_zero_bound(double v, BoundSide side) noexcept
{
    if (v == 0.0) return side == BoundSide::lower ? 0.0 : -0.0;
    return v;
}

// The four forms that have no extended-real value: inf - inf, inf/inf,
// 0 * inf and 0/0 (with all sign variants).
constexpr bool undefined_sum(double a, double b) noexcept
{
    return std::isinf(a) && std::isinf(b) && (a < 0) != (b < 0);
}
constexpr bool undefined_difference(double a, double b) noexcept
{
    return std::isinf(a) && std::isinf(b) && (a < 0) == (b < 0);
}
constexpr bool undefined_product(double a, double b) noexcept
{
    return (a == 0.0 && std::isinf(b)) || (std::isinf(a) && b == 0.0);
}
constexpr bool undefined_quotient(double a, double b) noexcept
{
    return (a == 0.0 && b == 0.0) || (std::isinf(a) && std::isinf(b));
}

// Correctly rounded binary64 operations in a fixed direction. Inputs may be
// infinite or signed zeros but must not be NaN or an undefined form; the
// result is never NaN. Division of a nonzero by a signed zero yields the
// infinity whose sign is the product of the operand signs.
//
// The rounding mode is switched for the duration of one operation and
// restored before returning. Floating-point environments are per-thread,
// so concurrent calls do not interfere.
double add_dir(double a, double b, Rounding dir);
double sub_dir(double a, double b, Rounding dir);
double mul_dir(double a, double b, Rounding dir);
double div_dir(double a, double b, Rounding dir);

// Greatest (least) binary64 value not above (not below) q. Values beyond
// the largest finite magnitude round to the corresponding infinity on the
// outward side.
double round_real_down(const Rational& q);
double round_real_up(const Rational& q);

// A bound format supplies the directed kernels used by the interval layer.
// Both formats in this library carry their values in a double: binary64
// natively, and the miniature verification format as an exact subset.
template <class F>
concept BoundFormat = requires(const F& f, double a, double b, Rounding dir, const Rational& q) {
    { f.add(a, b, dir) } -> std::same_as<double>;
    { f.sub(a, b, dir) } -> std::same_as<double>;
    { f.mul(a, b, dir) } -> std::same_as<double>;
    { f.div(a, b, dir) } -> std::same_as<double>;
    { f.round_down(q) } -> std::same_as<double>;
    { f.round_up(q) } -> std::same_as<double>;
};

struct Binary64 {
    double add(double a, double b, Rounding dir) const { return add_dir(a, b, dir); }
    double sub(double a, double b, Rounding dir) const { return sub_dir(a, b, dir); }
    double mul(double a, double b, Rounding dir) const { return mul_dir(a, b, dir); }
    double div(double a, double b, Rounding dir) const { return div_dir(a, b, dir); }
    double round_down(const Rational& q) const { return round_real_down(q); }
    double round_up(const Rational& q) const { return round_real_up(q); }
};

static_assert(BoundFormat<Binary64>);

} // namespace ival

#endif // IVAL_FP_KERNEL_HPP
