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

// Test-only helpers: instrumented kernels, random native intervals and
// exact member sampling.

#ifndef IVAL_TESTS_SUPPORT_HPP
#define IVAL_TESTS_SUPPORT_HPP

#include "ival/fp_kernel.hpp"
#include "ival/interval.hpp"
#include "ival/rational.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <iterator>
#include <random>

namespace ival::testing {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kMax = std::numeric_limits<double>::max();
inline constexpr double kMinSub = std::numeric_limits<double>::denorm_min();
inline constexpr double kMinNormal = std::numeric_limits<double>::min();

struct KernelCounts {
    std::uint64_t add = 0;
    std::uint64_t sub = 0;
    std::uint64_t mul = 0;
    std::uint64_t div = 0;
    std::uint64_t undefined = 0; // calls with a NaN operand or an undefined form
    std::uint64_t nan_results = 0;

    std::uint64_t total() const { return add + sub + mul + div; }
};

// Wraps a bound format, counting every kernel call and intercepting
// undefined forms before they reach the wrapped kernel.
template <BoundFormat Base>
class InstrumentedFormat {
public:
    InstrumentedFormat(const Base& base, KernelCounts& counts) : base_(&base), counts_(&counts) {}

    double add(double a, double b, Rounding dir) const
    {
        ++counts_->add;
        return guarded(undefined_sum(a, b), a, b, [&] { return base_->add(a, b, dir); });
    }
    double sub(double a, double b, Rounding dir) const
    {
        ++counts_->sub;
        return guarded(undefined_difference(a, b), a, b, [&] { return base_->sub(a, b, dir); });
    }
    double mul(double a, double b, Rounding dir) const
    {
        ++counts_->mul;
        return guarded(undefined_product(a, b), a, b, [&] { return base_->mul(a, b, dir); });
    }
    double div(double a, double b, Rounding dir) const
    {
        ++counts_->div;
        return guarded(undefined_quotient(a, b), a, b, [&] { return base_->div(a, b, dir); });
    }
    double round_down(const Rational& q) const { return base_->round_down(q); }
    double round_up(const Rational& q) const { return base_->round_up(q); }

private:
    template <class Fn>
    double guarded(bool undefined, double a, double b, Fn&& fn) const
    {
        if (undefined || std::isnan(a) || std::isnan(b)) {
            ++counts_->undefined;
            // A harmless stand-in keeps the caller running so the count is
            // reported rather than crashing the sweep.
            return 0.0;
        }
        const double r = fn();
        if (std::isnan(r)) ++counts_->nan_results;
        return r;
    }

    const Base* base_;
    KernelCounts* counts_;
};

// Random binary64 values weighted toward the cases that matter for
// intervals: signed zeros, infinities, extremes, subnormals, small
// integers, moderate magnitudes and arbitrary bit patterns.
class BoundGenerator {
public:
    explicit BoundGenerator(std::uint64_t seed) : rng_(seed) {}

    double next()
    {
        static constexpr double specials[] = {0.0,   -0.0,    kInf,       -kInf,       kMax, -kMax, kMinSub, -kMinSub,
                                              kMinNormal, -kMinNormal, 1.0, -1.0, 0.5, -0.5};
        const int category = pick(0, 99);
        if (category < 15) return specials[pick(0, std::size(specials) - 1)];
        if (category < 30) return static_cast<double>(pick(-10, 10));
        if (category < 80) {
            const double mantissa = std::uniform_real_distribution<double>(1.0, 2.0)(rng_);
            const double v = std::ldexp(mantissa, pick(-40, 40));
            return pick(0, 1) ? v : -v;
        }
        for (;;) {
            const double v = std::bit_cast<double>(rng_());
            if (std::isfinite(v)) return v;
        }
    }

    std::mt19937_64& rng() { return rng_; }

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    int pick(int lo, std::size_t hi) { return pick(lo, static_cast<int>(hi)); }

private:
    std::mt19937_64 rng_;
};

// Random nonempty binary64 intervals.
class IntervalGenerator {
public:
    explicit IntervalGenerator(std::uint64_t seed) : bounds_(seed) {}

    Interval next()
    {
        for (;;) {
            double a = bounds_.next();
            double b = bounds_.pick(0, 9) == 0 ? a : bounds_.next();
            if (b < a) std::swap(a, b);
            const Interval x = make_interval(a, b);
            if (!x.is_empty()) return x;
        }
    }

    // A random interval containing x.
    Interval widen(const Interval& x)
    {
        double lo = x.lo();
        double hi = x.hi();
        if (bounds_.pick(0, 1)) lo = std::min(lo, bounds_.next());
        if (bounds_.pick(0, 1)) hi = std::max(hi, bounds_.next());
        if (lo == kInf) lo = x.lo();
        if (hi == -kInf) hi = x.hi();
        return make_interval(lo, hi);
    }

    BoundGenerator& bounds() { return bounds_; }

private:
    BoundGenerator bounds_;
};

// A random real member of a nonempty interval, exact. Endpoints and zero are
// drawn often; unbounded sides are sampled up to well past the binary64
// range.
inline Rational sample_member(const Interval& x, BoundGenerator& gen)
{
    const int choice = gen.pick(0, 9);
    if (choice == 0 && std::isfinite(x.lo())) return to_rational(x.lo());
    if (choice == 1 && std::isfinite(x.hi())) return to_rational(x.hi());
    if (choice == 2 && x.lo() <= 0 && 0 <= x.hi()) return Rational(0);

    auto power = [&gen] {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(gen.pick(0, 1100)));
        return Rational(p);
    };
    Rational lo;
    Rational hi;
    if (std::isfinite(x.lo()) && std::isfinite(x.hi())) {
        lo = to_rational(x.lo());
        hi = to_rational(x.hi());
    } else if (std::isfinite(x.lo())) {
        lo = to_rational(x.lo());
        hi = lo + power();
    } else if (std::isfinite(x.hi())) {
        hi = to_rational(x.hi());
        lo = hi - power();
    } else {
        lo = -power();
        hi = power();
    }
    const Rational t(gen.pick(0, 1 << 20), 1 << 20);
    Rational q = lo + t * (hi - lo);
    q.canonicalize();
    return q;
}

} // namespace ival::testing

#endif // IVAL_TESTS_SUPPORT_HPP
