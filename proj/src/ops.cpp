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

#include "ival/ops.hpp"

#include <ostream>

namespace ival {

DivResult DivResult::single(const Interval& x) noexcept
{
    DivResult r;
    if (!x.is_empty()) {
        r.kind_ = Kind::single;
        r.first_ = x;
    }
    return r;
}

DivResult DivResult::split(const Interval& neg, const Interval& pos) noexcept
{
    DivResult r;
    r.kind_ = Kind::split;
    r.first_ = neg;
    r.second_ = pos;
    return r;
}

Interval DivResult::hull() const
{
    switch (kind_) {
    case Kind::empty: return Interval::empty();
    case Kind::single: return first_;
    case Kind::split: return ival::hull(first_, second_);
    }
    return Interval::empty();
}

bool operator==(const DivResult& x, const DivResult& y) noexcept
{
    if (x.kind_ != y.kind_) return false;
    switch (x.kind_) {
    case DivResult::Kind::empty: return true;
    case DivResult::Kind::single: return x.first_ == y.first_;
    case DivResult::Kind::split: return x.first_ == y.first_ && x.second_ == y.second_;
    }
    return false;
}

DivResult negate(const DivResult& r)
{
    switch (r.kind()) {
    case DivResult::Kind::empty: return r;
    case DivResult::Kind::single: return DivResult::single(negate(r.first()));
    case DivResult::Kind::split: return DivResult::split(negate(r.second()), negate(r.first()));
    }
    return r;
}

std::string to_string(const DivResult& r, const RenderOptions& options)
{
    switch (r.kind()) {
    case DivResult::Kind::empty: return "Empty";
    case DivResult::Kind::single: return to_string(r.first(), options.notation);
    case DivResult::Kind::split:
        return to_string(r.first(), options.notation) + (options.ascii ? " U " : " ∪ ")
            + to_string(r.second(), options.notation);
    }
    return "Empty";
}

std::ostream& operator<<(std::ostream& os, const DivResult& r)
{
    return os << to_string(r);
}

} // namespace ival
