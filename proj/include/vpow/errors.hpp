// Copyright (c) the vpow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace vpow {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct MinOfEmpty : Error {
    MinOfEmpty() : Error("min of an empty set") {}
};

struct CardOfInfinite : Error {
    CardOfInfinite() : Error("cardinality of an infinite set") {}
};

struct EmptyBasic : Error {
    EmptyBasic() : Error("basic open set is empty") {}
};

struct PointInsideClosedSet : Error {
    PointInsideClosedSet() : Error("point lies inside the closed set") {}
};

struct NotFiniteRange : Error {
    NotFiniteRange() : Error("sequence does not have finite range") {}
};

struct InfiniteRangeUnsupported : Error {
    InfiniteRangeUnsupported() : Error("operation requires a finite-range sequence") {}
};

struct PreimageNotFinite : Error {
    PreimageNotFinite() : Error("target range sets must be finite") {}
};

struct PointNotInTarget : Error {
    PointNotInTarget() : Error("point does not map into the target set") {}
};

struct PointOutsideBasic : Error {
    PointOutsideBasic() : Error("point lies outside the basic set") {}
};

struct TooFar : Error {
    TooFar() : Error("distance is not below the requested radius") {}
};

struct BadDepth : Error {
    BadDepth() : Error("depth limit is smaller than the root word") {}
};

struct BadBound : Error {
    BadBound() : Error("enumeration bound is unusable") {}
};

struct BadSize : Error {
    BadSize() : Error("family size must be at least 2") {}
};

struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

struct IllegalMove : Error {
    std::string offender;
    IllegalMove(std::string who, const std::string& what)
        : Error(what), offender(std::move(who)) {}
};

struct T1Violation : Error {
    explicit T1Violation(const std::string& what) : Error(what) {}
};

struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& name) : Error("unknown suite: " + name) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace vpow
