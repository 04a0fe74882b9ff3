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

#include "ival/sweep.hpp"

#include "ival/ops.hpp"
#include "ival/oracle.hpp"

#include <json.hpp>

#include <chrono>

namespace ival::verify {

const char* to_string(SweepOp op) noexcept
{
    switch (op) {
    case SweepOp::add: return "add";
    case SweepOp::sub: return "sub";
    case SweepOp::mul: return "mul";
    case SweepOp::div: return "div";
    }
    return "?";
}

namespace {

DivResult library_result(const TinyFormat& f, SweepOp op, const Interval& x, const Interval& y)
{
    switch (op) {
    case SweepOp::add: return DivResult::single(add(f, x, y));
    case SweepOp::sub: return DivResult::single(sub(f, x, y));
    case SweepOp::mul: return DivResult::single(mul(f, x, y));
    case SweepOp::div: return div(f, x, y);
    }
    return DivResult::none();
}

oracle::Op oracle_op(SweepOp op)
{
    switch (op) {
    case SweepOp::add: return oracle::Op::add;
    case SweepOp::sub: return oracle::Op::sub;
    case SweepOp::mul: return oracle::Op::mul;
    case SweepOp::div: return oracle::Op::div_rel;
    }
    return oracle::Op::add;
}

} // namespace

SweepReport sweep(const TinyFormat& format, SweepOp op, std::span<const Interval> operands)
{
    const auto start = std::chrono::steady_clock::now();
    const oracle::Phi phi(format);
    SweepReport report;
    report.op = op;

    for (const Interval& x : operands) {
        for (const Interval& y : operands) {
            ++report.checked;
            const oracle::RealSet exact = oracle::apply(oracle_op(op), x, y);
            const std::optional<DivResult> expected = phi(exact);
            const DivResult actual = library_result(format, op, x, y);
            if (!expected || !(*expected == actual)) {
                if (report.counterexamples++ == 0) {
                    report.first = Counterexample{x, y, expected ? to_string(*expected) : exact.to_string(),
                                                  to_string(actual)};
                }
            }
            if (op == SweepOp::div) {
                const oracle::RealSet functional = oracle::apply(oracle::Op::div_fun, x, y);
                if (!exact.includes(functional)) ++report.functional_escapes;
                const std::optional<DivResult> fun = phi(functional);
                if (!fun || fun->hull() != expected.value_or(DivResult()).hull()) ++report.functional_differences;
            }
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string to_json_line(const SweepReport& report, const TinyParams& params, std::size_t operand_count)
{
    nlohmann::json j{
        {"record", "sweep"},
        {"op", to_string(report.op)},
        {"p", params.precision},
        {"emin", params.emin},
        {"emax", params.emax},
        {"operands", operand_count},
        {"checked", report.checked},
        {"counterexamples", report.counterexamples},
        {"seconds", report.seconds},
        {"passed", report.passed()},
    };
    if (report.op == SweepOp::div) {
        j["functional_differences"] = report.functional_differences;
        j["functional_escapes"] = report.functional_escapes;
    }
    if (report.first) {
        j["first_counterexample"] = {
            {"x", to_string(report.first->x, Notation::hex)},
            {"y", to_string(report.first->y, Notation::hex)},
            {"expected", report.first->expected},
            {"actual", report.first->actual},
        };
    }
    return j.dump();
}

} // namespace ival::verify
