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

#ifndef IVAL_OPS_HPP
#define IVAL_OPS_HPP

#include "ival/fp_kernel.hpp"
#include "ival/interval.hpp"

#include <algorithm>
#include <iosfwd>
#include <limits>
#include <string>

namespace ival {

// Exact shape of a relational quotient before any hulling.
class DivResult {
public:
    enum class Kind { empty, single, split };

    constexpr DivResult() noexcept = default;

    static DivResult none() noexcept { return DivResult(); }
    // A single empty interval collapses to Kind::empty.
    static DivResult single(const Interval& x) noexcept;
    // Both parts must be nonempty with neg.hi() <= 0 <= pos.lo().
    static DivResult split(const Interval& neg, const Interval& pos) noexcept;

    Kind kind() const noexcept { return kind_; }
    bool is_empty() const noexcept { return kind_ == Kind::empty; }
    bool is_split() const noexcept { return kind_ == Kind::split; }

    // Single payload, or the negative part of a split.
    const Interval& first() const noexcept { return first_; }
    // Positive part of a split.
    const Interval& second() const noexcept { return second_; }

    Interval hull() const;

    friend bool operator==(const DivResult&, const DivResult&) noexcept;

private:
    Kind kind_ = Kind::empty;
    Interval first_;
    Interval second_;
};

struct RenderOptions {
    Notation notation = Notation::decimal;
    bool ascii = false;
};

// "Empty", "[a,b]" or "[a,b] ∪ [c,d]" ("U" when ascii is set).
std::string to_string(const DivResult& r, const RenderOptions& options = {});
std::ostream& operator<<(std::ostream& os, const DivResult& r);

namespace detail {

enum class Sign { P, M, N, Z };

constexpr Sign collapse(IntervalClass c) noexcept
{
    switch (c) {
    case IntervalClass::P0:
    case IntervalClass::P1: return Sign::P;
    case IntervalClass::N0:
    case IntervalClass::N1: return Sign::N;
    case IntervalClass::M: return Sign::M;
    case IntervalClass::Z: return Sign::Z;
    }
    return Sign::Z;
}

constexpr int row(Sign x, Sign y) noexcept
{
    return static_cast<int>(x) * 4 + static_cast<int>(y);
}

inline Interval bounds(double lo, double hi)
{
    return make_interval(lo, hi);
}

} // namespace detail

template <BoundFormat F>
Interval add(const F& f, const Interval& x, const Interval& y)
{
    if (x.is_empty() || y.is_empty()) return Interval::empty();
    return make_interval(f.add(x.lo(), y.lo(), Rounding::down), f.add(x.hi(), y.hi(), Rounding::up));
}

template <BoundFormat F>
Interval sub(const F& f, const Interval& x, const Interval& y)
{
    if (x.is_empty() || y.is_empty()) return Interval::empty();
    return make_interval(f.sub(x.lo(), y.hi(), Rounding::down), f.sub(x.hi(), y.lo(), Rounding::up));
}

inline Interval negate(const Interval& x)
{
    if (x.is_empty()) return x;
    return make_interval(-x.hi(), -x.lo());
}

// Sign-classified product. Every row except (M,M) uses one directed
// multiplication per bound; rows involving Z perform none. The class of each
// row keeps 0 * inf out of every kernel call.
template <BoundFormat F>
Interval mul(const F& f, const Interval& x, const Interval& y)
{
    using detail::row;
    using detail::Sign;
    if (x.is_empty() || y.is_empty()) return Interval::empty();

    const double a = x.lo(), b = x.hi();
    const double c = y.lo(), d = y.hi();
    auto down = [&f](double u, double v) { return f.mul(u, v, Rounding::down); };
    auto up = [&f](double u, double v) { return f.mul(u, v, Rounding::up); };

    const Sign sx = detail::collapse(classify(x));
    const Sign sy = detail::collapse(classify(y));
    if (sx == Sign::Z || sy == Sign::Z) return Interval::zero();

    switch (row(sx, sy)) {
    case row(Sign::P, Sign::P): return detail::bounds(down(a, c), up(b, d));
    case row(Sign::P, Sign::M): return detail::bounds(down(b, c), up(b, d));
    case row(Sign::P, Sign::N): return detail::bounds(down(b, c), up(a, d));
    case row(Sign::M, Sign::P): return detail::bounds(down(a, d), up(b, d));
    case row(Sign::M, Sign::M):
        return detail::bounds(std::min(down(a, d), down(b, c)), std::max(up(a, c), up(b, d)));
    case row(Sign::M, Sign::N): return detail::bounds(down(b, c), up(a, c));
    case row(Sign::N, Sign::P): return detail::bounds(down(a, d), up(b, c));
    case row(Sign::N, Sign::M): return detail::bounds(down(a, d), up(a, c));
    case row(Sign::N, Sign::N): return detail::bounds(down(b, d), up(a, c));
    default: break;
    }
    return Interval::zero(); // unreachable
}

// Relational quotient: every z with z*y = x for some x in the dividend and y
// in the divisor. A divisor straddling zero under a zero-free dividend gives
// a split result; "\{0}" punctures are over-approximated by closed bounds.
//
// Zero divisor bounds are +0 (lower) and -0 (upper), so dividing by them
// yields the correctly signed infinity without a test. The dividend classes
// P0 and N0 have a constant 0 bound instead of a quotient and need an
// explicit test against a zero divisor bound.
template <BoundFormat F>
DivResult div(const F& f, const Interval& x, const Interval& y)
{
    using IC = IntervalClass;
    using detail::Sign;
    if (x.is_empty() || y.is_empty()) return DivResult::none();

    constexpr double inf = std::numeric_limits<double>::infinity();
    const double a = x.lo(), b = x.hi();
    const double c = y.lo(), d = y.hi();
    auto down = [&f](double u, double v) { return f.div(u, v, Rounding::down); };
    auto up = [&f](double u, double v) { return f.div(u, v, Rounding::up); };
    auto single = [](double lo, double hi) { return DivResult::single(make_interval(lo, hi)); };
    const DivResult entire = DivResult::single(Interval::entire());

    const IC cx = classify(x);
    const IC cy = classify(y);

    if (cy == IC::Z) {
        if (cx == IC::P1 || cx == IC::N1) return DivResult::none();
        return entire;
    }
    if (cx == IC::Z) {
        if (cy == IC::P1 || cy == IC::N1) return DivResult::single(Interval::zero());
        return entire;
    }

    switch (detail::collapse(cy)) {
    case Sign::P:
        switch (cx) {
        case IC::P1: return single(down(a, d), up(b, c));
        case IC::P0: return c == 0 ? entire : single(0.0, up(b, c));
        case IC::M: return single(down(a, c), up(b, c));
        case IC::N0: return c == 0 ? entire : single(down(a, c), -0.0);
        case IC::N1: return single(down(a, c), up(b, d));
        case IC::Z: break;
        }
        break;
    case Sign::M:
        switch (cx) {
        case IC::P1:
            return DivResult::split(make_interval(-inf, up(a, c)), make_interval(down(a, d), inf));
        case IC::N1:
            return DivResult::split(make_interval(-inf, up(b, d)), make_interval(down(b, c), inf));
        case IC::P0:
        case IC::M:
        case IC::N0: return entire;
        case IC::Z: break;
        }
        break;
    case Sign::N:
        switch (cx) {
        case IC::P1: return single(down(b, d), up(a, c));
        case IC::P0: return d == 0 ? entire : single(down(b, d), -0.0);
        case IC::M: return single(down(b, d), up(a, d));
        case IC::N0: return d == 0 ? entire : single(0.0, up(a, d));
        case IC::N1: return single(down(b, c), up(a, d));
        case IC::Z: break;
        }
        break;
    case Sign::Z: break;
    }
    return entire; // unreachable
}

template <BoundFormat F>
Interval div_hull(const F& f, const Interval& x, const Interval& y)
{
    return div(f, x, y).hull();
}

// Binary64 conveniences.
inline Interval add(const Interval& x, const Interval& y) { return add(Binary64{}, x, y); }
inline Interval sub(const Interval& x, const Interval& y) { return sub(Binary64{}, x, y); }
inline Interval mul(const Interval& x, const Interval& y) { return mul(Binary64{}, x, y); }
inline DivResult div(const Interval& x, const Interval& y) { return div(Binary64{}, x, y); }
inline Interval div_hull(const Interval& x, const Interval& y) { return div_hull(Binary64{}, x, y); }

inline Interval operator+(const Interval& x, const Interval& y) { return add(x, y); }
inline Interval operator-(const Interval& x, const Interval& y) { return sub(x, y); }
inline Interval operator*(const Interval& x, const Interval& y) { return mul(x, y); }
inline Interval operator-(const Interval& x) { return negate(x); }

// Applies negate to every part; the parts of a split swap roles.
DivResult negate(const DivResult& r);

} // namespace ival

#endif // IVAL_OPS_HPP
