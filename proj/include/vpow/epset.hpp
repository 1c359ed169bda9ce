// Copyright (c) the vpow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vpow {

/// An eventually periodic subset of the naturals: an explicit bit block over
/// [0, N) followed by a repeating bit pattern of length p, so membership of
/// n >= N is pattern[(n - N) mod p].
///
/// Values are kept in canonical form (minimal N, primitive pattern, pattern
/// rotated to the smallest possible start), so two EpSets denote the same
/// subset of omega iff they compare structurally equal.  The class is closed
/// under the boolean operations and contains every finite and cofinite set.
class EpSet {
  public:
    /// The empty set.
    EpSet();

    /// Builds from raw bits and canonicalizes.  An empty pattern is treated
    /// as all-zero (a finite set).
    EpSet(std::vector<std::uint8_t> explicitBits, std::vector<std::uint8_t> pattern);

    static EpSet empty();
    static EpSet naturals();
    static EpSet finite(const std::vector<std::uint64_t>& values);
    static EpSet singleton(std::uint64_t v);
    /// [0, n)
    static EpSet below(std::uint64_t n);
    /// The arithmetic progression {first + step*k : k in omega}; step >= 1.
    static EpSet arithmetic(std::uint64_t first, std::uint64_t step);

    bool member(std::uint64_t n) const;

    bool isEmpty() const;
    /// True iff the repeating pattern is all-zero.
    bool isFinite() const;
    std::uint64_t min() const;           // throws MinOfEmpty
    std::uint64_t cardIfFinite() const;  // throws CardOfInfinite
    /// All members of a finite set, ascending.  Throws CardOfInfinite.
    std::vector<std::uint64_t> finiteValues() const;
    /// The first `count` members, ascending (fewer if the set is smaller).
    std::vector<std::uint64_t> firstValues(std::size_t count) const;

    bool subsetOf(const EpSet& other) const;

    EpSet complement() const;
    friend EpSet operator|(const EpSet& a, const EpSet& b);
    friend EpSet operator&(const EpSet& a, const EpSet& b);
    friend EpSet operator-(const EpSet& a, const EpSet& b);
    EpSet operator~() const { return complement(); }

    friend bool operator==(const EpSet& a, const EpSet& b) = default;

    const std::vector<std::uint8_t>& explicitBits() const { return explicit_; }
    const std::vector<std::uint8_t>& pattern() const { return pattern_; }

    /// Human-readable rendering, e.g. "{0,2}" or "{1} + {n>=3 : n%2 in {0}}".
    std::string describe() const;

  private:
    std::vector<std::uint8_t> explicit_;
    std::vector<std::uint8_t> pattern_;  // nonempty after canonicalization

    void canonicalize();
};

} // namespace vpow
