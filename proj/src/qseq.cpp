// Copyright (c) the vpow contributors
// SPDX-License-Identifier: Apache-2.0
#include "vpow/qseq.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vpow {

namespace {

// Smallest q dividing c such that (cycle, drift) is the (c/q)-fold unrolling
// of (cycle[0..q), drift*q/c).  Requires (c/q) | drift and the unrolled
// values to match.
std::size_t primitiveCycleLength(const std::vector<std::uint64_t>& cycle,
                                 std::uint64_t drift) {
    const std::size_t c = cycle.size();
    for (std::size_t q = 1; q < c; ++q) {
        if (c % q != 0) continue;
        const std::uint64_t k = c / q;
        if (drift % k != 0) continue;
        const std::uint64_t d = drift / k;
        bool ok = true;
        for (std::size_t j = 0; j < c && ok; ++j)
            ok = cycle[j] == cycle[j % q] + d * (j / q);
        if (ok) return q;
    }
    return c;
}

} // namespace

QSeq::QSeq() : cycle_{0} {}

QSeq::QSeq(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> cycle,
           std::uint64_t drift)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)), drift_(drift) {
    if (cycle_.empty()) throw std::invalid_argument("QSeq cycle must be nonempty");
    canonicalize();
}

void QSeq::canonicalize() {
    for (;;) {
        const std::size_t q = primitiveCycleLength(cycle_, drift_);
        if (q < cycle_.size()) {
            drift_ /= cycle_.size() / q;
            cycle_.resize(q);
            continue;
        }
        // Absorb prefix values that agree with the cycle extended one step
        // to the left (rotate right, the wrapped entry loses one drift).
        if (!prefix_.empty() && cycle_.back() >= drift_ &&
            prefix_.back() == cycle_.back() - drift_) {
            prefix_.pop_back();
            std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
            cycle_.front() -= drift_;
            continue;
        }
        break;
    }
}

QSeq QSeq::constant(std::uint64_t v) { return QSeq({}, {v}, 0); }

QSeq QSeq::identity() { return QSeq({}, {0}, 1); }

QSeq QSeq::cycling(const std::vector<std::uint64_t>& values) {
    return QSeq({}, values, 0);
}

QSeq QSeq::concat(const std::vector<std::uint64_t>& word, const QSeq& f) {
    std::vector<std::uint64_t> prefix = word;
    prefix.insert(prefix.end(), f.prefix_.begin(), f.prefix_.end());
    return QSeq(std::move(prefix), f.cycle_, f.drift_);
}

std::uint64_t QSeq::eval(std::uint64_t n) const {
    if (n < prefix_.size()) return prefix_[n];
    const std::uint64_t i = n - prefix_.size();
    return cycle_[i % cycle_.size()] + drift_ * (i / cycle_.size());
}

EpSet QSeq::image() const {
    if (drift_ == 0) {
        std::vector<std::uint64_t> values = prefix_;
        values.insert(values.end(), cycle_.begin(), cycle_.end());
        return EpSet::finite(values);
    }
    // Tail values form arithmetic progressions cycle[r] + drift*m.  Beyond
    // every cycle value the image is periodic with period `drift` (membership
    // depends only on the residue); below that bound bits are set explicitly.
    const std::uint64_t maxCycle = *std::max_element(cycle_.begin(), cycle_.end());
    std::uint64_t bound = maxCycle;
    for (std::uint64_t v : prefix_) bound = std::max(bound, v + 1);
    auto inTail = [&](std::uint64_t v) {
        for (std::uint64_t a : cycle_)
            if (v >= a && (v - a) % drift_ == 0) return true;
        return false;
    };
    std::vector<std::uint8_t> explicitBits(bound, 0);
    for (std::uint64_t v = 0; v < bound; ++v)
        explicitBits[v] =
            (inTail(v) || std::find(prefix_.begin(), prefix_.end(), v) != prefix_.end()) ? 1 : 0;
    std::vector<std::uint8_t> pattern(drift_, 0);
    for (std::uint64_t j = 0; j < drift_; ++j)
        pattern[j] = inTail(bound + j) ? 1 : 0;
    return EpSet(std::move(explicitBits), std::move(pattern));
}

std::vector<std::uint64_t> QSeq::window(std::uint64_t n) const {
    std::vector<std::uint64_t> out(n);
    for (std::uint64_t i = 0; i < n; ++i) out[i] = eval(i);
    return out;
}

QSeq QSeq::withPrefixLength(std::uint64_t n) const {
    if (n <= prefix_.size()) return *this;
    QSeq out;
    out.prefix_ = window(n);
    const std::uint64_t shift = n - prefix_.size();
    out.cycle_.resize(cycle_.size());
    for (std::size_t j = 0; j < cycle_.size(); ++j) {
        const std::uint64_t i = shift + j;
        out.cycle_[j] = cycle_[i % cycle_.size()] + drift_ * (i / cycle_.size());
    }
    out.drift_ = drift_;
    // Intentionally not canonicalized by the caller's request: callers edit
    // the prefix and re-canonicalize via the public constructor.
    return out;
}

QSeq QSeq::withValueAt(std::uint64_t pos, std::uint64_t v) const {
    QSeq wide = withPrefixLength(std::max<std::uint64_t>(pos + 1, prefix_.size()));
    wide.prefix_[pos] = v;
    return QSeq(std::move(wide.prefix_), std::move(wide.cycle_), wide.drift_);
}

QSeq QSeq::dropFirst(std::uint64_t k) const {
    if (k <= prefix_.size())
        return QSeq(std::vector<std::uint64_t>(prefix_.begin() + k, prefix_.end()), cycle_,
                    drift_);
    const std::uint64_t shift = k - prefix_.size();
    std::vector<std::uint64_t> cycle(cycle_.size());
    for (std::size_t j = 0; j < cycle_.size(); ++j) {
        const std::uint64_t i = shift + j;
        cycle[j] = cycle_[i % cycle_.size()] + drift_ * (i / cycle_.size());
    }
    return QSeq({}, std::move(cycle), drift_);
}

std::string QSeq::describe() const {
    std::string out = "(";
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(prefix_[i]);
    }
    out += " | ";
    for (std::size_t i = 0; i < cycle_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(cycle_[i]);
    }
    if (drift_ != 0) out += " +%" + std::to_string(drift_);
    out += ")";
    return out;
}

std::optional<std::uint64_t> firstDifference(const QSeq& f, const QSeq& g) {
    if (f == g) return std::nullopt;
    const std::uint64_t m = std::max(f.prefix().size(), g.prefix().size());
    const std::uint64_t l = std::lcm(f.cycle().size(), g.cycle().size());
    for (std::uint64_t n = 0; n <= m + l; ++n)
        if (f.eval(n) != g.eval(n)) return n;
    // Unreachable: agreement through m + l with equal growth over the common
    // period forces equality, contradicting canonical inequality.
    return std::nullopt;
}

} // namespace vpow
