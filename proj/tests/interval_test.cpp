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
#include "ival/oracle.hpp"
#include "ival/tiny_float.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

namespace {

using namespace ival;
using ival::testing::kInf;

bool is_plus_zero(double v)
{
    return v == 0.0 && !std::signbit(v);
}
bool is_minus_zero(double v)
{
    return v == 0.0 && std::signbit(v);
}

TEST(Interval, ZeroSingletonIsNormalized)
{
    const Interval z = make_interval(-0.0, 0.0);
    ASSERT_FALSE(z.is_empty());
    EXPECT_TRUE(is_plus_zero(z.lo()));
    EXPECT_TRUE(is_minus_zero(z.hi()));
    EXPECT_EQ(z, Interval::zero());
}

TEST(Interval, ReversedBoundsAreEmpty)
{
    EXPECT_TRUE(make_interval(3.0, 2.0).is_empty());
    EXPECT_TRUE(make_interval(kInf, kInf).is_empty());
    EXPECT_TRUE(make_interval(-kInf, -kInf).is_empty());
}

TEST(Interval, EntireLine)
{
    const Interval r = make_interval(-kInf, kInf);
    EXPECT_EQ(r, Interval::entire());
    EXPECT_EQ(to_string(r), "[-inf,inf]");
}

TEST(Interval, NaNIsAConstructorError)
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(make_interval(nan, 1.0), std::invalid_argument);
    EXPECT_THROW(make_interval(0.0, nan), std::invalid_argument);
}

TEST(Interval, EqualityDistinguishesEmpty)
{
    EXPECT_EQ(Interval::empty(), Interval());
    EXPECT_NE(Interval::empty(), Interval::zero());
    EXPECT_EQ(make_interval(1, 2), make_interval(1, 2));
}

TEST(Classify, Examples)
{
    EXPECT_EQ(classify(Interval::zero()), IntervalClass::Z);
    EXPECT_EQ(classify(make_interval(0.0, 5.0)), IntervalClass::P0);
    EXPECT_EQ(classify(make_interval(-kInf, -3.0)), IntervalClass::N1);
    EXPECT_EQ(classify(make_interval(-1.0, 1.0)), IntervalClass::M);
    EXPECT_EQ(classify(make_interval(-1.0, 0.0)), IntervalClass::N0);
    EXPECT_EQ(classify(make_interval(2.0, kInf)), IntervalClass::P1);
}

TEST(Classify, EmptyIsAnError)
{
    EXPECT_THROW(classify(Interval::empty()), std::domain_error);
}

// Classes follow from which signs of reals are members, independently of
// the endpoint tests used by classify.
TEST(Classify, PartitionsEveryTinyInterval)
{
    const TinyFormat f;
    for (const Interval& x : oracle::enumerate_intervals(f)) {
        if (x.is_empty()) continue;
        const bool has_negative = x.lo() < 0;
        const bool has_positive = x.hi() > 0;
        const bool has_zero = member(0, x);
        IntervalClass expected;
        if (has_negative && has_positive) {
            expected = IntervalClass::M;
        } else if (has_positive) {
            expected = has_zero ? IntervalClass::P0 : IntervalClass::P1;
        } else if (has_negative) {
            expected = has_zero ? IntervalClass::N0 : IntervalClass::N1;
        } else {
            expected = IntervalClass::Z;
        }
        EXPECT_EQ(classify(x), expected) << x;
    }
}

TEST(Interval, ConstructorIsIdempotentOnTinyIntervals)
{
    const TinyFormat f;
    for (const Interval& x : oracle::enumerate_intervals(f)) {
        if (x.is_empty()) continue;
        EXPECT_EQ(make_interval(x.lo(), x.hi()), x);
        EXPECT_FALSE(is_minus_zero(x.lo()));
        EXPECT_FALSE(is_plus_zero(x.hi()));
    }
}

TEST(Member, Examples)
{
    EXPECT_TRUE(member(0, Interval::zero()));
    EXPECT_FALSE(member(0, Interval::empty()));
    EXPECT_TRUE(member(Rational("-123456789012345678901234567890"), Interval::entire()));
    const Rational third(1, 3);
    EXPECT_TRUE(member(third, make_interval(round_real_down(third), round_real_up(third))));
    EXPECT_FALSE(member(Rational(5, 2), make_interval(1, 2)));
}

TEST(Intersect, Examples)
{
    EXPECT_EQ(intersect(make_interval(1, 5), make_interval(3, 8)), make_interval(3, 5));
    EXPECT_TRUE(intersect(make_interval(1, 2), make_interval(3, 4)).is_empty());
    EXPECT_EQ(intersect(make_interval(-1, 0), make_interval(0, 1)), Interval::zero());
    EXPECT_TRUE(intersect(Interval::empty(), Interval::entire()).is_empty());
}

TEST(Hull, Examples)
{
    EXPECT_EQ(hull(make_interval(1, 2), make_interval(4, 5)), make_interval(1, 5));
    EXPECT_EQ(hull(Interval::empty(), make_interval(4, 5)), make_interval(4, 5));
    EXPECT_EQ(hull(make_interval(-kInf, -1), make_interval(1, kInf)), Interval::entire());
}

TEST(SetLaws, IntersectAndHullOnTinyIntervals)
{
    const TinyFormat f;
    const auto all = oracle::enumerate_intervals(f);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (const Interval& x : all) {
        EXPECT_EQ(intersect(x, Interval::entire()), x);
        EXPECT_EQ(hull(x, Interval::empty()), x);
        EXPECT_EQ(intersect(x, x), x);
        EXPECT_EQ(hull(x, x), x);
    }
    for (int i = 0; i < 200000; ++i) {
        const Interval& x = all[pick(rng)];
        const Interval& y = all[pick(rng)];
        const Interval& z = all[pick(rng)];
        ASSERT_EQ(intersect(x, y), intersect(y, x));
        ASSERT_EQ(hull(x, y), hull(y, x));
        ASSERT_EQ(intersect(intersect(x, y), z), intersect(x, intersect(y, z)));
        ASSERT_EQ(hull(hull(x, y), z), hull(x, hull(y, z)));
        ASSERT_TRUE(is_subset(x, hull(x, y)));
        ASSERT_TRUE(is_subset(intersect(x, y), x));
    }
}

TEST(PhiPoint, Examples)
{
    EXPECT_EQ(phi_point(Rational(0)), Interval::zero());
    EXPECT_EQ(phi_point(Rational(1, 2)), make_interval(0.5, 0.5));
    const Interval tenth = phi_point(Rational(1, 10));
    EXPECT_TRUE(member(Rational(1, 10), tenth));
    EXPECT_EQ(std::nextafter(tenth.lo(), kInf), tenth.hi());
}

// Brute force: the least enumerated interval containing q is the one that
// is a subset of every other enumerated interval containing q.
TEST(PhiPoint, MinimalAmongAllTinyIntervals)
{
    const TinyFormat f;
    const auto all = oracle::enumerate_intervals(f);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-1000, 1000);
    std::uniform_int_distribution<int> den(1, 128);
    for (int i = 0; i < 1000; ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        std::vector<Interval> containing;
        for (const Interval& x : all) {
            if (member(q, x)) containing.push_back(x);
        }
        const Interval* least = nullptr;
        for (const Interval& c : containing) {
            if (std::all_of(containing.begin(), containing.end(),
                            [&c](const Interval& other) { return is_subset(c, other); })) {
                least = &c;
            }
        }
        ASSERT_NE(least, nullptr) << q;
        EXPECT_EQ(phi_point(f, q), *least) << q;
    }
}

TEST(Render, DecimalAndHex)
{
    EXPECT_EQ(to_string(Interval::empty()), "Empty");
    EXPECT_EQ(to_string(Interval::zero()), "[0,-0]");
    EXPECT_EQ(to_string(make_interval(-kInf, 2.5)), "[-inf,2.5]");
    EXPECT_EQ(to_string(make_interval(0.25, 1), Notation::hex), "[0x1p-2,0x1p+0]");
    EXPECT_EQ(to_string(Interval::zero(), Notation::hex), "[0x0p+0,-0x0p+0]");
    std::ostringstream os;
    os << make_interval(-3, -1);
    EXPECT_EQ(os.str(), "[-3,-1]");
}

} // namespace
