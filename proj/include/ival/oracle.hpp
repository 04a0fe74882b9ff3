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

#ifndef IVAL_ORACLE_HPP
#define IVAL_ORACLE_HPP

#include "ival/interval.hpp"
#include "ival/ops.hpp"
#include "ival/rational.hpp"
#include "ival/tiny_float.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ival::oracle {

// A rational or one of the two infinities.
struct ExtRational {
    enum class Kind { neg_inf, finite, pos_inf };

    Kind kind = Kind::finite;
    Rational value = 0;

    static ExtRational neg_inf() { return {Kind::neg_inf, 0}; }
    static ExtRational pos_inf() { return {Kind::pos_inf, 0}; }
    static ExtRational finite(Rational q) { return {Kind::finite, std::move(q)}; }
    // Exact value of a double; infinities map to the infinite kinds.
    static ExtRational of(double v);

    bool is_finite() const noexcept { return kind == Kind::finite; }
};

int compare(const ExtRational& x, const ExtRational& y);
ExtRational operator-(const ExtRational& x);

// A nonempty connected set of reals. Infinite ends are always open.
struct RealInterval {
    ExtRational lo;
    bool lo_open = false;
    ExtRational hi;
    bool hi_open = false;

    static RealInterval closed(Rational lo, Rational hi);
    static RealInterval entire();

    bool contains(const Rational& x) const;
};

// A finite union of real intervals, stored as maximal disjoint components
// in ascending order. No components means the empty set.
class RealSet {
public:
    RealSet() = default;
    // Merges overlapping and touching pieces into components.
    explicit RealSet(std::vector<RealInterval> pieces);

    static RealSet entire();

    const std::vector<RealInterval>& components() const noexcept { return components_; }
    bool is_empty() const noexcept { return components_.empty(); }
    bool contains(const Rational& x) const;
    bool includes(const RealSet& other) const;

    std::string to_string() const;

private:
    std::vector<RealInterval> components_;
};

enum class Op { add, sub, mul, div_rel, div_fun };

// The exact set of results of op over the real members of two nonempty
// intervals, computed by splitting each operand into its negative, zero and
// positive parts and combining the parts pairwise.
//   div_rel: { z | z*y = x for some x in X, y in Y }
//   div_fun: { x/y | x in X, y in Y, y != 0 }
RealSet apply(Op op, const Interval& x, const Interval& y);

const char* to_string(Op op) noexcept;

// Least-interval operator for one tiny format, found by searching the
// enumerated reals.
class Phi {
public:
    explicit Phi(const TinyFormat& format);

    Interval operator()(const RealInterval& s) const;
    // Empty for the empty set, Single for one component, Split for two. Sets
    // with more components are not representable and return nullopt.
    std::optional<DivResult> operator()(const RealSet& s) const;

private:
    std::vector<double> reals_;
    std::vector<Rational> exact_;
};

// All nonempty intervals of the format in lexicographic bound order,
// followed by Empty.
std::vector<Interval> enumerate_intervals(const TinyFormat& format);

// Closed form for enumerate_intervals(format).size() given n distinct
// finite reals: (n + 2)(n + 3)/2 - 2 nonempty intervals, plus Empty.
std::size_t interval_count(std::size_t real_count) noexcept;

} // namespace ival::oracle

#endif // IVAL_ORACLE_HPP
