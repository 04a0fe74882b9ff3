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

#include "ival/expr.hpp"
#include "ival/oracle.hpp"
#include "ival/sweep.hpp"
#include "ival/tiny_float.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitEmpty = 2;
constexpr int kExitSweepFailed = 3;

int run_eval(std::string input, bool split_div, bool hex, bool ascii)
{
    if (input.empty()) {
        input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    ival::expr::NodePtr tree;
    try {
        tree = ival::expr::parse(input);
    } catch (const ival::expr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n  " << input << "\n  " << std::string(e.position(), ' ') << "^\n";
        return kExitUsage;
    }
    const auto result = ival::expr::eval(*tree, split_div ? ival::expr::DivMode::split : ival::expr::DivMode::hull);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
    const ival::RenderOptions options{hex ? ival::Notation::hex : ival::Notation::decimal, ascii};
    std::cout << ival::to_string(result.value, options) << '\n';
    return result.value.is_empty() ? kExitEmpty : kExitOk;
}

int run_exhaust(const ival::TinyParams& params, const std::string& op_name)
{
    using ival::verify::SweepOp;
    std::vector<SweepOp> ops;
    if (op_name == "all") {
        ops = {SweepOp::add, SweepOp::sub, SweepOp::mul, SweepOp::div};
    } else if (op_name == "add") {
        ops = {SweepOp::add};
    } else if (op_name == "sub") {
        ops = {SweepOp::sub};
    } else if (op_name == "mul") {
        ops = {SweepOp::mul};
    } else {
        ops = {SweepOp::div};
    }

    std::optional<ival::TinyFormat> format;
    try {
        format.emplace(params);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::vector<ival::Interval> operands = ival::oracle::enumerate_intervals(*format);
    operands.pop_back(); // Empty

    bool passed = true;
    for (SweepOp op : ops) {
        const auto report = ival::verify::sweep(*format, op, operands);
        std::cout << ival::verify::to_json_line(report, params, operands.size()) << std::endl;
        passed = passed && report.passed();
    }
    return passed ? kExitOk : kExitSweepFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Interval arithmetic with relational division"};
    app.set_version_flag("--version", std::string("ival ") + IVAL_VERSION);
    app.require_subcommand(1);

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an interval expression ('/' is relational division)");
    std::string expression;
    bool split_div = false;
    bool hex = false;
    bool ascii = false;
    eval_cmd->add_option("expr", expression, "Expression; read from stdin when omitted");
    eval_cmd->add_flag("--split-div", split_div, "Print a top-level quotient as a union of two intervals");
    eval_cmd->add_flag("--hex", hex, "Print bounds as exact hexadecimal significands");
    eval_cmd->add_flag("--ascii", ascii, "Use 'U' instead of the union glyph");

    auto* exhaust_cmd = app.add_subcommand("exhaust", "Check every operation against the exact oracle on a tiny format");
    ival::TinyParams params;
    std::string op = "all";
    exhaust_cmd->add_option("--p", params.precision, "Significand bits")->check(CLI::Range(1, 16));
    exhaust_cmd->add_option("--emin", params.emin, "Minimum normal exponent")->check(CLI::Range(-64, 64));
    exhaust_cmd->add_option("--emax", params.emax, "Maximum normal exponent")->check(CLI::Range(-64, 64));
    exhaust_cmd->add_option("--op", op, "Operation to sweep")
        ->check(CLI::IsMember({"add", "sub", "mul", "div", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*eval_cmd) return run_eval(expression, split_div, hex, ascii);
    return run_exhaust(params, op);
}
