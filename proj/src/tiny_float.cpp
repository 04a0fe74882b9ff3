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

#include "ival/tiny_float.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ival {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Ascending order that places -0 before +0.
bool signed_less(double x, double y)
{
    if (x == y) return std::signbit(x) && !std::signbit(y);
    return x < y;
}

double zero_with_sign(bool negative)
{
    return negative ? -0.0 : 0.0;
}

double inf_with_sign(bool negative)
{
    return negative ? -kInf : kInf;
}

} // namespace

TinyFormat::TinyFormat(TinyParams params) : params_(params)
{
    if (params.precision < 1 || params.precision > 16 || params.emin < -64 || params.emax > 64
        || params.emin > params.emax) {
        throw std::invalid_argument("unsupported tiny format parameters");
    }
    const int p = params.precision;
    const long half = 1L << (p - 1);

    std::vector<double> positive;
    for (long m = 1; m < half; ++m) positive.push_back(std::ldexp(static_cast<double>(m), params.emin - p + 1));
    for (int e = params.emin; e <= params.emax; ++e) {
        for (long m = half; m < 2 * half; ++m) positive.push_back(std::ldexp(static_cast<double>(m), e - p + 1));
    }

    values_.push_back(-kInf);
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) values_.push_back(-*it);
    values_.push_back(-0.0);
    values_.push_back(0.0);
    values_.insert(values_.end(), positive.begin(), positive.end());
    values_.push_back(kInf);

    for (auto it = positive.rbegin(); it != positive.rend(); ++it) reals_.push_back(-*it);
    reals_.push_back(0.0);
    reals_.insert(reals_.end(), positive.begin(), positive.end());
    exact_reals_.reserve(reals_.size());
    for (double r : reals_) exact_reals_.push_back(to_rational(r));

    const std::size_t n = values_.size();
    for (int op = 0; op < 4; ++op) {
        for (int dir = 0; dir < 2; ++dir) {
            auto& table = tables_[op][dir];
            table.resize(n * n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    table[i * n + j] = compute(static_cast<Op>(op), values_[i], values_[j],
                                               dir == 0 ? Rounding::down : Rounding::up);
                }
            }
        }
    }
}

std::size_t TinyFormat::real_count(const TinyParams& params) noexcept
{
    const std::size_t per_sign =
        static_cast<std::size_t>(params.emax - params.emin + 2) * (std::size_t{1} << (params.precision - 1)) - 1;
    return 2 * per_sign + 1;
}

double TinyFormat::smallest_subnormal() const noexcept
{
    return std::ldexp(1.0, params_.emin - params_.precision + 1);
}

bool TinyFormat::contains(double v) const noexcept
{
    return std::binary_search(values_.begin(), values_.end(), v, signed_less);
}

std::size_t TinyFormat::index_of(double v) const
{
    auto it = std::lower_bound(values_.begin(), values_.end(), v, signed_less);
    if (it == values_.end() || signed_less(v, *it)) {
        throw std::invalid_argument("value is not a member of the tiny format");
    }
    return static_cast<std::size_t>(it - values_.begin());
}

double TinyFormat::lookup(Op op, double a, double b, Rounding dir) const
{
    IVAL_EXPECTS(!std::isnan(a) && !std::isnan(b));
    const std::size_t n = values_.size();
    const double r = tables_[static_cast<int>(op)][dir == Rounding::down ? 0 : 1][index_of(a) * n + index_of(b)];
    IVAL_EXPECTS(!std::isnan(r));
    return r;
}

double TinyFormat::round(const Rational& q, Rounding dir) const
{
    // First real strictly above q, and last real not above q.
    auto above = std::upper_bound(exact_reals_.begin(), exact_reals_.end(), q,
                                  [](const Rational& x, const Rational& y) { return x < y; });
    double result;
    if (dir == Rounding::down) {
        result = above == exact_reals_.begin() ? -kInf : reals_[static_cast<std::size_t>(above - exact_reals_.begin()) - 1];
    } else {
        auto at_or_above = std::lower_bound(exact_reals_.begin(), exact_reals_.end(), q,
                                            [](const Rational& x, const Rational& y) { return x < y; });
        result = at_or_above == exact_reals_.end() ? kInf : reals_[static_cast<std::size_t>(at_or_above - exact_reals_.begin())];
    }
    if (result == 0.0) return zero_with_sign(sgn(q) < 0);
    return result;
}

double TinyFormat::round_down(const Rational& q) const
{
    const double r = round(q, Rounding::down);
    return r == 0.0 ? 0.0 : r;
}

double TinyFormat::round_up(const Rational& q) const
{
    const double r = round(q, Rounding::up);
    return r == 0.0 && sgn(q) == 0 ? 0.0 : r;
}

// IEEE 754 semantics transplanted to the tiny format. Undefined forms map to
// NaN in the table and trip the lookup contract.
double TinyFormat::compute(Op op, double a, double b, Rounding dir) const
{
    const bool neg_a = std::signbit(a);
    const bool neg_b = std::signbit(b);
    switch (op) {
    case Op::sub:
        return compute(Op::add, a, -b, dir);
    case Op::add:
        if (undefined_sum(a, b)) return kNaN;
        if (std::isinf(a)) return a;
        if (std::isinf(b)) return b;
        if (a == 0.0 && b == 0.0) {
            if (neg_a == neg_b) return a;
            return zero_with_sign(dir == Rounding::down);
        }
        {
            const Rational exact = to_rational(a) + to_rational(b);
            if (sgn(exact) == 0) return zero_with_sign(dir == Rounding::down);
            return round(exact, dir);
        }
    case Op::mul:
        if (undefined_product(a, b)) return kNaN;
        if (std::isinf(a) || std::isinf(b)) return inf_with_sign(neg_a != neg_b);
        if (a == 0.0 || b == 0.0) return zero_with_sign(neg_a != neg_b);
        return round(to_rational(a) * to_rational(b), dir);
    case Op::div:
        if (undefined_quotient(a, b)) return kNaN;
        if (std::isinf(a)) return inf_with_sign(neg_a != neg_b);
        if (std::isinf(b)) return zero_with_sign(neg_a != neg_b);
        if (b == 0.0) return inf_with_sign(neg_a != neg_b);
        if (a == 0.0) return zero_with_sign(neg_a != neg_b);
        return round(to_rational(a) / to_rational(b), dir);
    }
    return kNaN;
}

} // namespace ival
