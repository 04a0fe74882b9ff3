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

#ifndef IVAL_TINY_FLOAT_HPP
#define IVAL_TINY_FLOAT_HPP

#include "ival/fp_kernel.hpp"
#include "ival/interval.hpp"
#include "ival/rational.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace ival {

// Parameters of a miniature binary format: p significand bits (including
// the leading bit), normal exponents in [emin, emax], gradual underflow
// below 2^emin, signed zeros and infinities.
struct TinyParams {
    int precision = 3;
    int emin = -2;
    int emax = 2;
};

// A binary floating-point format small enough to enumerate. Values are
// carried in doubles (each is exactly representable there). The directed
// kernels follow IEEE 754 semantics for the format: exact result, then
// rounding toward -inf or +inf, with IEEE signed-zero and infinity rules.
//
// Throws std::invalid_argument unless 1 <= precision <= 16 and
// -64 <= emin <= emax <= 64.
class TinyFormat {
public:
    explicit TinyFormat(TinyParams params = {});

    const TinyParams& params() const noexcept { return params_; }

    double add(double a, double b, Rounding dir) const { return lookup(Op::add, a, b, dir); }
    double sub(double a, double b, Rounding dir) const { return lookup(Op::sub, a, b, dir); }
    double mul(double a, double b, Rounding dir) const { return lookup(Op::mul, a, b, dir); }
    double div(double a, double b, Rounding dir) const { return lookup(Op::div, a, b, dir); }

    // Directed rounding of an exact rational into the format. An exact zero
    // rounds to +0.
    double round_down(const Rational& q) const;
    double round_up(const Rational& q) const;

    // Every value of the format in ascending order: -inf, negative finite
    // values, -0, +0, positive finite values, +inf.
    std::span<const double> values() const noexcept { return values_; }
    // Distinct finite reals of the format (one zero), ascending.
    std::span<const double> reals() const noexcept { return reals_; }

    double largest_finite() const noexcept { return reals_.back(); }
    double smallest_subnormal() const noexcept;
    bool contains(double v) const noexcept;

    // Closed-form size of reals(): 2 * ((emax - emin + 2) * 2^(p-1) - 1) + 1.
    static std::size_t real_count(const TinyParams& params) noexcept;

private:
    enum class Op { add, sub, mul, div };

    std::size_t index_of(double v) const;
    double lookup(Op op, double a, double b, Rounding dir) const;
    double compute(Op op, double a, double b, Rounding dir) const;
    double round(const Rational& q, Rounding dir) const;

    TinyParams params_;
    std::vector<double> values_;
    std::vector<double> reals_;
    std::vector<Rational> exact_reals_;
    // tables_[op][dir][i * n + j] for indices into values_.
    std::array<std::array<std::vector<double>, 2>, 4> tables_;
};

static_assert(BoundFormat<TinyFormat>);

} // namespace ival

#endif // IVAL_TINY_FLOAT_HPP
