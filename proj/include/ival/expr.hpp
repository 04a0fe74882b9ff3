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

#ifndef IVAL_EXPR_HPP
#define IVAL_EXPR_HPP

#include "ival/ops.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ival::expr {

struct Node;
using NodePtr = std::unique_ptr<Node>;

// "[lo,hi]"; bound texts are number literals, "inf" or "-inf".
struct IntervalLit {
    std::string lo;
    std::string hi;
};

// A bare number, evaluated to the least interval containing its exact value.
struct PointLit {
    std::string text;
};

struct Neg {
    NodePtr operand;
};

enum class BinaryOp { add, sub, mul, div };

struct BinOp {
    BinaryOp op;
    NodePtr lhs;
    NodePtr rhs;
};

struct Node {
    std::variant<IntervalLit, PointLit, Neg, BinOp> value;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message);
    // Zero-based byte offset into the input.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Grammar, with the usual precedence and left associativity:
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | '(' expr ')' | literal
//   literal := '[' bound ',' bound ']' | number
//   bound   := ['+' | '-'] (number | 'inf')
// Numbers are decimal or hexadecimal-significand. '/' is relational
// division. Throws ParseError.
NodePtr parse(std::string_view input);

// Fully parenthesized prefix form, e.g. "(* [1,2] [3,4])".
std::string to_string(const Node& node);

enum class DivMode {
    hull,  // every quotient is hulled to a single interval
    split, // a top-level quotient may stay split; inner splits are hulled
};

struct Evaluation {
    DivResult value;
    std::vector<std::string> warnings;
};

// Never fails on a parsed tree. Literal bounds round outward and point
// literals become the least enclosing interval.
Evaluation eval(const Node& node, DivMode mode = DivMode::hull);

} // namespace ival::expr

#endif // IVAL_EXPR_HPP
