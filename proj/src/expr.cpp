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

#include "ival/rational.hpp"

#include <cctype>
#include <limits>

namespace ival::expr {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message), position_(position)
{
}

namespace {

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

bool is_alpha(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

class Parser {
public:
    explicit Parser(std::string_view input) : in_(input) {}

    NodePtr parse_all()
    {
        NodePtr node = expression();
        skip_space();
        if (pos_ != in_.size()) fail("unexpected '" + std::string(1, in_[pos_]) + "'");
        return node;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

    void skip_space()
    {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < in_.size() && in_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(pos_ < in_.size() ? "expected '" + std::string(1, c) + "'"
                                   : "expected '" + std::string(1, c) + "' before end of input");
        }
    }

    NodePtr expression()
    {
        NodePtr lhs = term();
        for (;;) {
            BinaryOp op;
            if (accept('+')) {
                op = BinaryOp::add;
            } else if (accept('-')) {
                op = BinaryOp::sub;
            } else {
                return lhs;
            }
            NodePtr rhs = term();
            lhs = std::make_unique<Node>(Node{BinOp{op, std::move(lhs), std::move(rhs)}});
        }
    }

    NodePtr term()
    {
        NodePtr lhs = factor();
        for (;;) {
            BinaryOp op;
            if (accept('*')) {
                op = BinaryOp::mul;
            } else if (accept('/')) {
                op = BinaryOp::div;
            } else {
                return lhs;
            }
            NodePtr rhs = factor();
            lhs = std::make_unique<Node>(Node{BinOp{op, std::move(lhs), std::move(rhs)}});
        }
    }

    NodePtr factor()
    {
        if (accept('-')) return std::make_unique<Node>(Node{Neg{factor()}});
        if (accept('(')) {
            NodePtr inner = expression();
            expect(')');
            return inner;
        }
        if (accept('[')) {
            std::string lo = bound();
            expect(',');
            std::string hi = bound();
            expect(']');
            return std::make_unique<Node>(Node{IntervalLit{std::move(lo), std::move(hi)}});
        }
        skip_space();
        if (pos_ >= in_.size()) fail("unexpected end of input");
        if (is_alpha(in_[pos_])) fail("infinity is only allowed as an interval bound");
        return std::make_unique<Node>(Node{PointLit{number()}});
    }

    std::string bound()
    {
        skip_space();
        std::string sign;
        if (pos_ < in_.size() && (in_[pos_] == '-' || in_[pos_] == '+')) {
            sign = in_[pos_] == '-' ? "-" : "";
            ++pos_;
        }
        if (in_.substr(pos_, 3) == "inf") {
            const std::size_t after = pos_ + 3;
            if (after >= in_.size() || !std::isalnum(static_cast<unsigned char>(in_[after]))) {
                pos_ = after;
                return sign + "inf";
            }
        }
        return sign + number();
    }

    // Scans the longest run that can belong to a number literal and checks
    // it as a whole.
    std::string number()
    {
        const std::size_t start = pos_;
        const bool hex = in_.substr(pos_, 2) == "0x" || in_.substr(pos_, 2) == "0X";
        if (hex) pos_ += 2;
        while (pos_ < in_.size()) {
            const char c = in_[pos_];
            const char prev = pos_ > start ? in_[pos_ - 1] : '\0';
            const bool exponent_mark = hex ? (prev == 'p' || prev == 'P') : (prev == 'e' || prev == 'E');
            if (std::isxdigit(static_cast<unsigned char>(c)) || c == '.' || ((c == 'p' || c == 'P') && hex)
                || (exponent_mark && (c == '+' || c == '-'))) {
                if (!hex && is_alpha(c) && c != 'e' && c != 'E') break;
                ++pos_;
                continue;
            }
            break;
        }
        const std::string_view text = in_.substr(start, pos_ - start);
        if (text.empty()) {
            pos_ = start;
            fail("expected a number");
        }
        if (!is_digit(text.front()) && text.front() != '.') {
            pos_ = start;
            fail("expected a number");
        }
        if (!parse_exact(text)) {
            pos_ = start;
            fail("malformed number '" + std::string(text) + "'");
        }
        return std::string(text);
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

const char* symbol(BinaryOp op)
{
    switch (op) {
    case BinaryOp::add: return "+";
    case BinaryOp::sub: return "-";
    case BinaryOp::mul: return "*";
    case BinaryOp::div: return "/";
    }
    return "?";
}

double lower_bound_of(const std::string& text)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (text == "inf") return inf;
    if (text == "-inf") return -inf;
    return round_real_down(*parse_exact(text));
}

double upper_bound_of(const std::string& text)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (text == "inf") return inf;
    if (text == "-inf") return -inf;
    return round_real_up(*parse_exact(text));
}

class Evaluator {
public:
    explicit Evaluator(DivMode mode) : mode_(mode) {}

    DivResult operator()(const Node& node)
    {
        return std::visit([this](const auto& n) { return visit(n); }, node.value);
    }

    std::vector<std::string> warnings;

private:
    DivResult visit(const IntervalLit& lit)
    {
        return DivResult::single(make_interval(lower_bound_of(lit.lo), upper_bound_of(lit.hi)));
    }

    DivResult visit(const PointLit& lit) { return DivResult::single(phi_point(*parse_exact(lit.text))); }

    DivResult visit(const Neg& neg) { return DivResult::single(negate(operand(*neg.operand))); }

    DivResult visit(const BinOp& bin)
    {
        const Interval lhs = operand(*bin.lhs);
        const Interval rhs = operand(*bin.rhs);
        switch (bin.op) {
        case BinaryOp::add: return DivResult::single(add(lhs, rhs));
        case BinaryOp::sub: return DivResult::single(sub(lhs, rhs));
        case BinaryOp::mul: return DivResult::single(mul(lhs, rhs));
        case BinaryOp::div: {
            const DivResult q = div(lhs, rhs);
            return mode_ == DivMode::hull ? DivResult::single(q.hull()) : q;
        }
        }
        return DivResult::none();
    }

    Interval operand(const Node& node)
    {
        const DivResult r = (*this)(node);
        if (r.is_split()) {
            warnings.push_back("split quotient " + to_string(r) + " hulled to " + to_string(r.hull())
                               + " before further use");
        }
        return r.hull();
    }

    DivMode mode_;
};

} // namespace

NodePtr parse(std::string_view input)
{
    return Parser(input).parse_all();
}

std::string to_string(const Node& node)
{
    struct Printer {
        std::string operator()(const IntervalLit& lit) const { return "[" + lit.lo + "," + lit.hi + "]"; }
        std::string operator()(const PointLit& lit) const { return lit.text; }
        std::string operator()(const Neg& neg) const { return "(neg " + to_string(*neg.operand) + ")"; }
        std::string operator()(const BinOp& bin) const
        {
            return std::string("(") + symbol(bin.op) + " " + to_string(*bin.lhs) + " " + to_string(*bin.rhs) + ")";
        }
    };
    return std::visit(Printer{}, node.value);
}

Evaluation eval(const Node& node, DivMode mode)
{
    Evaluator evaluator(mode);
    DivResult value = evaluator(node);
    return {value, std::move(evaluator.warnings)};
}

} // namespace ival::expr
