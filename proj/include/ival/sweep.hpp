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

#ifndef IVAL_SWEEP_HPP
#define IVAL_SWEEP_HPP

#include "ival/interval.hpp"
#include "ival/tiny_float.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace ival::verify {

enum class SweepOp { add, sub, mul, div };

const char* to_string(SweepOp op) noexcept;

struct Counterexample {
    Interval x;
    Interval y;
    std::string expected;
    std::string actual;
};

struct SweepReport {
    SweepOp op = SweepOp::add;
    std::uint64_t checked = 0;
    std::uint64_t counterexamples = 0;
    std::optional<Counterexample> first;
    // Division only: pairs where the least intervals of the relational and
    // functional quotients differ (informational), and pairs where the
    // functional quotient is not a subset of the relational one (a failure).
    std::uint64_t functional_differences = 0;
    std::uint64_t functional_escapes = 0;
    double seconds = 0.0;

    bool passed() const noexcept { return counterexamples == 0 && functional_escapes == 0; }
};

// Compares the library result against the exact oracle for every ordered
// pair drawn from `operands` (nonempty intervals of `format`).
SweepReport sweep(const TinyFormat& format, SweepOp op, std::span<const Interval> operands);

// One JSON object on a single line.
std::string to_json_line(const SweepReport& report, const TinyParams& params, std::size_t operand_count);

} // namespace ival::verify

#endif // IVAL_SWEEP_HPP
