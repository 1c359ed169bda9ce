// Copyright (c) the vpow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vpow/epset.hpp"

namespace vpow {

/// A quasi-affine-periodic sequence omega -> omega: a finite prefix of length
/// L, then a cycle of length c whose values shift by a constant drift D each
/// period:
///
///     f(n) = prefix[n]                                , n <  L
///     f(n) = cycle[(n-L) mod c] + D * floor((n-L)/c)  , n >= L
///
/// Values are canonical (minimal prefix, primitive cycle/drift pair), so two
/// QSeqs denote the same function iff they compare structurally equal.
/// drift == 0 iff the range is finite iff the point has compact (finite)
/// image.
class QSeq {
  public:
    /// The constant zero sequence.
    QSeq();

    QSeq(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> cycle,
         std::uint64_t drift);

    static QSeq constant(std::uint64_t v);
    /// n |-> n.
    static QSeq identity();
    /// A drift-0 sequence cycling through `values` in order (surjects onto
    /// the value set).  `values` must be nonempty.
    static QSeq cycling(const std::vector<std::uint64_t>& values);
    /// The concatenation s^f: the word s followed by f.
    static QSeq concat(const std::vector<std::uint64_t>& word, const QSeq& f);

    std::uint64_t eval(std::uint64_t n) const;
    /// The exact image {f(n) : n in omega} as an EpSet.
    EpSet image() const;
    bool finiteRange() const { return drift_ == 0; }

    /// f restricted to [0, n) as a word.
    std::vector<std::uint64_t> window(std::uint64_t n) const;
    /// The same function re-represented with prefix length >= n.
    QSeq withPrefixLength(std::uint64_t n) const;
    /// The function equal to f except at position `pos`, where it takes `v`.
    QSeq withValueAt(std::uint64_t pos, std::uint64_t v) const;
    /// n |-> f(n + k).
    QSeq dropFirst(std::uint64_t k) const;

    const std::vector<std::uint64_t>& prefix() const { return prefix_; }
    const std::vector<std::uint64_t>& cycle() const { return cycle_; }
    std::uint64_t drift() const { return drift_; }

    friend bool operator==(const QSeq& a, const QSeq& b) = default;

    std::string describe() const;

  private:
    std::vector<std::uint64_t> prefix_;
    std::vector<std::uint64_t> cycle_;  // nonempty
    std::uint64_t drift_ = 0;

    void canonicalize();
};

/// The least n with f(n) != g(n), or nullopt when f = g as functions.  The
/// scan is bounded: with M = max prefix length and l = lcm of cycle lengths,
/// agreement on [0, M + l] together with equal per-step growth rates implies
/// equality everywhere, and differing growth rates force a difference at
/// n = M + l at the latest.
std::optional<std::uint64_t> firstDifference(const QSeq& f, const QSeq& g);

} // namespace vpow
