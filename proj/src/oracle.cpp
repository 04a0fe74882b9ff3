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

#include "ival/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace ival::oracle {

ExtRational ExtRational::of(double v)
{
    if (std::isinf(v)) return v < 0 ? neg_inf() : pos_inf();
    return finite(to_rational(v));
}

int compare(const ExtRational& x, const ExtRational& y)
{
    if (x.kind != y.kind || !x.is_finite()) {
        return static_cast<int>(x.kind) - static_cast<int>(y.kind);
    }
    const int c = cmp(x.value, y.value);
    return (c > 0) - (c < 0);
}

ExtRational operator-(const ExtRational& x)
{
    switch (x.kind) {
    case ExtRational::Kind::neg_inf: return ExtRational::pos_inf();
    case ExtRational::Kind::pos_inf: return ExtRational::neg_inf();
    case ExtRational::Kind::finite: break;
    }
    return ExtRational::finite(-x.value);
}

RealInterval RealInterval::closed(Rational lo, Rational hi)
{
    return {ExtRational::finite(std::move(lo)), false, ExtRational::finite(std::move(hi)), false};
}

RealInterval RealInterval::entire()
{
    return {ExtRational::neg_inf(), true, ExtRational::pos_inf(), true};
}

bool RealInterval::contains(const Rational& x) const
{
    const ExtRational q = ExtRational::finite(x);
    const int lo_cmp = compare(lo, q);
    const int hi_cmp = compare(q, hi);
    return (lo_cmp < 0 || (lo_cmp == 0 && !lo_open)) && (hi_cmp < 0 || (hi_cmp == 0 && !hi_open));
}

RealSet::RealSet(std::vector<RealInterval> pieces)
{
    std::sort(pieces.begin(), pieces.end(), [](const RealInterval& x, const RealInterval& y) {
        const int c = compare(x.lo, y.lo);
        if (c != 0) return c < 0;
        return !x.lo_open && y.lo_open;
    });
    for (auto& piece : pieces) {
        if (!components_.empty()) {
            RealInterval& last = components_.back();
            const int c = compare(piece.lo, last.hi);
            if (c < 0 || (c == 0 && !(last.hi_open && piece.lo_open))) {
                const int h = compare(piece.hi, last.hi);
                if (h > 0) {
                    last.hi = piece.hi;
                    last.hi_open = piece.hi_open;
                } else if (h == 0) {
                    last.hi_open = last.hi_open && piece.hi_open;
                }
                continue;
            }
        }
        components_.push_back(std::move(piece));
    }
}

RealSet RealSet::entire()
{
    return RealSet({RealInterval::entire()});
}

bool RealSet::contains(const Rational& x) const
{
    return std::any_of(components_.begin(), components_.end(),
                       [&x](const RealInterval& c) { return c.contains(x); });
}

bool RealSet::includes(const RealSet& other) const
{
    // Each component of other must lie inside a single component of this.
    return std::all_of(other.components_.begin(), other.components_.end(), [this](const RealInterval& inner) {
        return std::any_of(components_.begin(), components_.end(), [&inner](const RealInterval& outer) {
            const int lo = compare(outer.lo, inner.lo);
            const int hi = compare(inner.hi, outer.hi);
            const bool lo_ok = lo < 0 || (lo == 0 && (!outer.lo_open || inner.lo_open));
            const bool hi_ok = hi < 0 || (hi == 0 && (!outer.hi_open || inner.hi_open));
            return lo_ok && hi_ok;
        });
    });
}

std::string RealSet::to_string() const
{
    if (components_.empty()) return "{}";
    auto bound = [](const ExtRational& e) -> std::string {
        switch (e.kind) {
        case ExtRational::Kind::neg_inf: return "-inf";
        case ExtRational::Kind::pos_inf: return "inf";
        case ExtRational::Kind::finite: break;
        }
        return e.value.get_str();
    };
    std::ostringstream os;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& c = components_[i];
        if (i) os << " U ";
        os << (c.lo_open ? '(' : '[') << bound(c.lo) << ',' << bound(c.hi) << (c.hi_open ? ')' : ']');
    }
    return os.str();
}

namespace {

// A nonempty set of strictly positive reals between lo and hi. A zero lo is
// always open; hi may be infinite.
struct Magnitude {
    Rational lo;
    bool lo_open;
    bool hi_inf;
    Rational hi;
    bool hi_open;
};

// Operand split by sign: magnitudes of the negative part, whether 0 is a
// member, and the positive part.
struct SignParts {
    std::optional<Magnitude> neg;
    bool zero;
    std::optional<Magnitude> pos;
};

SignParts split_by_sign(const Interval& x)
{
    const ExtRational a = ExtRational::of(x.lo());
    const ExtRational b = ExtRational::of(x.hi());
    const ExtRational zero = ExtRational::finite(0);
    SignParts parts{std::nullopt, compare(a, zero) <= 0 && compare(zero, b) <= 0, std::nullopt};
    if (compare(b, zero) > 0) {
        const bool from_zero = compare(a, zero) <= 0;
        parts.pos = Magnitude{from_zero ? Rational(0) : a.value, from_zero, !b.is_finite(),
                              b.is_finite() ? b.value : Rational(0), !b.is_finite()};
    }
    if (compare(a, zero) < 0) {
        const bool from_zero = compare(b, zero) >= 0;
        parts.neg = Magnitude{from_zero ? Rational(0) : Rational(-b.value), from_zero, !a.is_finite(),
                              a.is_finite() ? Rational(-a.value) : Rational(0), !a.is_finite()};
    }
    return parts;
}

Magnitude product(const Magnitude& p, const Magnitude& q)
{
    Magnitude r{p.lo * q.lo, p.lo_open || q.lo_open, p.hi_inf || q.hi_inf, 0, true};
    if (!r.hi_inf) {
        r.hi = p.hi * q.hi;
        r.hi_open = p.hi_open || q.hi_open;
    }
    return r;
}

Magnitude quotient(const Magnitude& p, const Magnitude& q)
{
    Magnitude r{0, true, true, 0, true};
    if (!q.hi_inf) {
        r.lo = p.lo / q.hi;
        r.lo_open = p.lo_open || q.hi_open || sgn(r.lo) == 0;
    }
    if (!p.hi_inf && sgn(q.lo) != 0) {
        r.hi_inf = false;
        r.hi = p.hi / q.lo;
        r.hi_open = p.hi_open || q.lo_open;
    }
    return r;
}

RealInterval signed_piece(const Magnitude& m, bool negative)
{
    RealInterval r{ExtRational::finite(m.lo), m.lo_open,
                   m.hi_inf ? ExtRational::pos_inf() : ExtRational::finite(m.hi), m.hi_open};
    if (!negative) return r;
    return {-r.hi, r.hi_open, -r.lo, r.lo_open};
}

RealInterval point_zero()
{
    return RealInterval::closed(0, 0);
}

RealSet multiply(const Interval& x, const Interval& y)
{
    const SignParts px = split_by_sign(x);
    const SignParts py = split_by_sign(y);
    std::vector<RealInterval> pieces;
    // x*0 = 0 for every real x.
    if (px.zero || py.zero) pieces.push_back(point_zero());
    const std::optional<Magnitude>* xs[2] = {&px.neg, &px.pos};
    const std::optional<Magnitude>* ys[2] = {&py.neg, &py.pos};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (*xs[i] && *ys[j]) pieces.push_back(signed_piece(product(**xs[i], **ys[j]), i != j));
        }
    }
    return RealSet(std::move(pieces));
}

RealSet divide(const Interval& x, const Interval& y, bool relational)
{
    const SignParts px = split_by_sign(x);
    const SignParts py = split_by_sign(y);
    // z*0 = x has a solution (every z) exactly when x = 0 is available.
    if (relational && py.zero && px.zero) return RealSet::entire();
    std::vector<RealInterval> pieces;
    // 0/y = 0 for every nonzero y.
    if (px.zero && (py.neg || py.pos)) pieces.push_back(point_zero());
    const std::optional<Magnitude>* xs[2] = {&px.neg, &px.pos};
    const std::optional<Magnitude>* ys[2] = {&py.neg, &py.pos};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (*xs[i] && *ys[j]) pieces.push_back(signed_piece(quotient(**xs[i], **ys[j]), i != j));
        }
    }
    return RealSet(std::move(pieces));
}

ExtRational sum(const ExtRational& u, const ExtRational& v)
{
    // Callers never pair opposite infinities.
    if (!u.is_finite()) return u;
    if (!v.is_finite()) return v;
    return ExtRational::finite(u.value + v.value);
}

// {x + y} spans from the sum of the infima to the sum of the suprema.
RealSet sum_set(const ExtRational& inf_x, const ExtRational& sup_x, const ExtRational& inf_y,
                const ExtRational& sup_y)
{
    const ExtRational lo = sum(inf_x, inf_y);
    const ExtRational hi = sum(sup_x, sup_y);
    return RealSet({{lo, !lo.is_finite(), hi, !hi.is_finite()}});
}

} // namespace

RealSet apply(Op op, const Interval& x, const Interval& y)
{
    if (x.is_empty() || y.is_empty()) return RealSet();
    switch (op) {
    case Op::add:
        return sum_set(ExtRational::of(x.lo()), ExtRational::of(x.hi()), ExtRational::of(y.lo()),
                       ExtRational::of(y.hi()));
    case Op::sub:
        // z + y = x  <=>  z = x + (-y)
        return sum_set(ExtRational::of(x.lo()), ExtRational::of(x.hi()), -ExtRational::of(y.hi()),
                       -ExtRational::of(y.lo()));
    case Op::mul: return multiply(x, y);
    case Op::div_rel: return divide(x, y, true);
    case Op::div_fun: return divide(x, y, false);
    }
    return RealSet();
}

const char* to_string(Op op) noexcept
{
    switch (op) {
    case Op::add: return "add";
    case Op::sub: return "sub";
    case Op::mul: return "mul";
    case Op::div_rel: return "div";
    case Op::div_fun: return "div_fun";
    }
    return "?";
}

Phi::Phi(const TinyFormat& format) : reals_(format.reals().begin(), format.reals().end())
{
    exact_.reserve(reals_.size());
    for (double r : reals_) exact_.push_back(to_rational(r));
}

Interval Phi::operator()(const RealInterval& s) const
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    auto less = [](const Rational& u, const Rational& v) { return u < v; };
    double lo = -inf;
    if (s.lo.kind == ExtRational::Kind::pos_inf) {
        lo = inf;
    } else if (s.lo.is_finite()) {
        // Greatest real not above s.lo.
        auto it = std::upper_bound(exact_.begin(), exact_.end(), s.lo.value, less);
        if (it != exact_.begin()) lo = reals_[static_cast<std::size_t>(it - exact_.begin()) - 1];
    }
    double hi = inf;
    if (s.hi.kind == ExtRational::Kind::neg_inf) {
        hi = -inf;
    } else if (s.hi.is_finite()) {
        // Least real not below s.hi.
        auto it = std::lower_bound(exact_.begin(), exact_.end(), s.hi.value, less);
        if (it != exact_.end()) hi = reals_[static_cast<std::size_t>(it - exact_.begin())];
    }
    return make_interval(lo, hi);
}

std::optional<DivResult> Phi::operator()(const RealSet& s) const
{
    const auto& parts = s.components();
    switch (parts.size()) {
    case 0: return DivResult::none();
    case 1: return DivResult::single((*this)(parts[0]));
    case 2: return DivResult::split((*this)(parts[0]), (*this)(parts[1]));
    default: return std::nullopt;
    }
}

std::vector<Interval> enumerate_intervals(const TinyFormat& format)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> lowers{-inf};
    lowers.insert(lowers.end(), format.reals().begin(), format.reals().end());
    std::vector<double> uppers(format.reals().begin(), format.reals().end());
    uppers.push_back(inf);

    std::vector<Interval> out;
    out.reserve(interval_count(format.reals().size()));
    for (double lo : lowers) {
        for (double hi : uppers) {
            if (lo <= hi) out.push_back(make_interval(lo, hi));
        }
    }
    out.push_back(Interval::empty());
    return out;
}

std::size_t interval_count(std::size_t real_count) noexcept
{
    return (real_count + 2) * (real_count + 3) / 2 - 2 + 1;
}

} // namespace ival::oracle
