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

#include "cli_runner.hpp"

#include <gtest/gtest.h>

namespace {

using ival::testing::run_cli;
using ival::testing::shell_quote;

TEST(Cli, EvalPrintsResult)
{
    const auto r = run_cli("eval " + shell_quote("[1,2]*[3,4]"));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "[3,8]\n");
    EXPECT_EQ(r.err, "");
}

TEST(Cli, SplitDivisionUnion)
{
    auto r = run_cli("eval " + shell_quote("[1,2]/[-1,1]") + " --split-div");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "[-inf,-1] ∪ [1,inf]\n");
    r = run_cli("eval --split-div --ascii " + shell_quote("[1,2]/[-1,1]"));
    EXPECT_EQ(r.out, "[-inf,-1] U [1,inf]\n");
    r = run_cli("eval " + shell_quote("[1,2]/[-1,1]"));
    EXPECT_EQ(r.out, "[-inf,inf]\n");
}

TEST(Cli, WarningGoesToErrorStream)
{
    const auto r = run_cli("eval --split-div " + shell_quote("[1,2]/[-1,1]+3"));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "[-inf,inf]\n");
    EXPECT_NE(r.err.find("warning:"), std::string::npos);
}

TEST(Cli, EmptyExitsWithTwo)
{
    const auto r = run_cli("eval " + shell_quote("[1,2]/[0,0]"));
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_EQ(r.out, "Empty\n");
}

TEST(Cli, ParseErrorExitsWithOne)
{
    const auto r = run_cli("eval " + shell_quote("[1,2]*"));
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(r.out, "");
    EXPECT_NE(r.err.find("position 6"), std::string::npos);
}

TEST(Cli, UsageErrorExitsWithOne)
{
    EXPECT_EQ(run_cli("eval --no-such-flag " + shell_quote("1")).exit_code, 1);
    EXPECT_EQ(run_cli("").exit_code, 1);
    EXPECT_EQ(run_cli("exhaust --op pow").exit_code, 1);
}

TEST(Cli, HexOutputRoundTrips)
{
    const auto first = run_cli("eval --hex " + shell_quote("0.1"));
    ASSERT_EQ(first.exit_code, 0);
    EXPECT_EQ(first.out, "[0x1.9999999999999p-4,0x1.999999999999ap-4]\n");
    std::string text = first.out;
    text.pop_back();
    const auto second = run_cli("eval --hex " + shell_quote(text));
    EXPECT_EQ(second.out, first.out);
}

TEST(Cli, ReadsExpressionFromStdin)
{
    const auto r = run_cli("eval", "[1,2]+[3,4]\n");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "[4,6]\n");
}

TEST(Cli, LeadingMinusAfterSeparator)
{
    const auto r = run_cli("eval -- " + shell_quote("-[1,2]"));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "[-2,-1]\n");
}

TEST(Cli, Version)
{
    const auto r = run_cli("--version");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.rfind("ival ", 0), 0u);
}

TEST(Cli, ExhaustEmitsOneRecordPerOperation)
{
    const auto r = run_cli("exhaust --p 2 --emin -1 --emax 1");
    EXPECT_EQ(r.exit_code, 0);
    std::size_t lines = 0;
    for (char c : r.out) lines += c == '\n';
    EXPECT_EQ(lines, 4u);
    EXPECT_NE(r.out.find("\"op\":\"div\""), std::string::npos);
    const auto one = run_cli("exhaust --p 2 --emin -1 --emax 1 --op mul");
    EXPECT_EQ(one.exit_code, 0);
    EXPECT_NE(one.out.find("\"op\":\"mul\""), std::string::npos);
    EXPECT_EQ(one.out.find("\"op\":\"add\""), std::string::npos);
}

TEST(Cli, ExhaustRejectsBadFormat)
{
    EXPECT_EQ(run_cli("exhaust --p 3 --emin 2 --emax -2").exit_code, 1);
}

} // namespace
