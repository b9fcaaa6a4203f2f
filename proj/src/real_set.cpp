// SPDX-License-Identifier: Apache-2.0

#include "diffconvex/real_set.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace diffconvex {

RealSet::RealSet(std::vector<ExactScalar> elements) : elements_(std::move(elements)) {
    for (std::size_t t = 1; t < elements_.size(); ++t) {
        if (!(elements_[t - 1] < elements_[t])) {
            throw Error(ErrorKind::invalid_input,
                        "set elements must be strictly increasing (position " +
                            std::to_string(t) + ")");
        }
    }
}

RealSet RealSet::from_unsorted(std::vector<ExactScalar> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return RealSet(std::move(elements));
}

RealSet RealSet::from_integers(std::span<const std::int64_t> values) {
    return RealSet(std::vector<ExactScalar>(values.begin(), values.end()));
}

bool RealSet::contains(const ExactScalar& x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::size_t RealSet::index_of(const ExactScalar& x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || *it != x) {
        return elements_.size();
    }
    return static_cast<std::size_t>(it - elements_.begin());
}

Matching::Matching(std::size_t base_size, std::vector<IndexPair> pairs)
    : base_size_(base_size), pairs_(std::move(pairs)) {
    std::vector<bool> used(base_size + 1, false);
    for (const auto& p : pairs_) {
        if (p.lo < 1 || p.hi > base_size || p.lo >= p.hi) {
            throw Error(ErrorKind::invalid_matching,
                        "pair (" + std::to_string(p.lo) + ", " + std::to_string(p.hi) +
                            ") is not 1 <= lo < hi <= " + std::to_string(base_size));
        }
        for (std::size_t idx : {p.lo, p.hi}) {
            if (used[idx]) {
                throw Error(ErrorKind::invalid_matching,
                            "index " + std::to_string(idx) + " used twice");
            }
            used[idx] = true;
        }
    }
}

std::vector<IndexPair> Matching::canonical_pairs() const {
    std::vector<IndexPair> out(pairs_.begin(), pairs_.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool is_convex(std::span<const ExactScalar> s) {
    for (std::size_t t = 1; t + 1 < s.size(); ++t) {
        if (!(s[t + 1] - s[t] > s[t] - s[t - 1])) {
            return false;
        }
    }
    return true;
}

bool is_convex(const RealSet& s) { return is_convex(s.elements()); }

bool is_weakly_convex(std::span<const ExactScalar> s) {
    for (std::size_t t = 1; t + 1 < s.size(); ++t) {
        if (s[t + 1] - s[t] < s[t] - s[t - 1]) {
            return false;
        }
    }
    return true;
}

bool is_weakly_convex(const RealSet& s) { return is_weakly_convex(s.elements()); }

namespace {

void require_nonempty(const RealSet& a, const char* op) {
    if (a.empty()) {
        throw Error(ErrorKind::invalid_input, std::string(op) + " of an empty set");
    }
}

void require_matching_over(const RealSet& a, const Matching& m) {
    if (m.base_size() != a.size()) {
        throw Error(ErrorKind::invalid_matching,
                    "matching base size " + std::to_string(m.base_size()) +
                        " does not match set size " + std::to_string(a.size()));
    }
}

} // namespace

RealSet difference_set(const RealSet& a) {
    require_nonempty(a, "difference set");
    std::vector<ExactScalar> out;
    out.reserve(a.size() * a.size());
    for (const auto& x : a) {
        for (const auto& y : a) {
            out.push_back(x - y);
        }
    }
    return RealSet::from_unsorted(std::move(out));
}

RealSet sum_set(const RealSet& a) {
    require_nonempty(a, "sum set");
    std::vector<ExactScalar> out;
    out.reserve(a.size() * (a.size() + 1) / 2);
    for (std::size_t s = 0; s < a.size(); ++s) {
        for (std::size_t t = s; t < a.size(); ++t) {
            out.push_back(a[s] + a[t]);
        }
    }
    return RealSet::from_unsorted(std::move(out));
}

RealSet restricted_difference_set(const RealSet& a, const Matching& m) {
    require_matching_over(a, m);
    std::vector<ExactScalar> out;
    out.reserve(m.size());
    for (const auto& p : m.pairs()) {
        out.push_back(a.nth(p.hi) - a.nth(p.lo));
    }
    return RealSet::from_unsorted(std::move(out));
}

RealSet restricted_sum_set(const RealSet& a, const Matching& m) {
    require_matching_over(a, m);
    std::vector<ExactScalar> out;
    out.reserve(m.size());
    for (const auto& p : m.pairs()) {
        out.push_back(a.nth(p.lo) + a.nth(p.hi));
    }
    return RealSet::from_unsorted(std::move(out));
}

std::size_t count_representations(const RealSet& a, const ExactScalar& x, PairOp op) {
    std::size_t count = 0;
    for (const auto& b : a) {
        // a - b == x  <=>  a == b + x;   a + b == x  <=>  a == x - b
        if (a.contains(op == PairOp::difference ? b + x : x - b)) {
            ++count;
        }
    }
    return count;
}

RealSet gen_convex_random(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw Error(ErrorKind::invalid_input, "gen_convex_random needs n >= 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> den_dist(1, 16);
    std::uniform_int_distribution<std::int64_t> start_dist(-50, 50);
    std::uniform_int_distribution<std::int64_t> step_dist(1, 8);

    const mpz_class den(static_cast<long>(den_dist(rng)));
    std::int64_t gap = step_dist(rng);
    ExactScalar current(mpz_class(static_cast<long>(start_dist(rng))), den);

    std::vector<ExactScalar> out;
    out.reserve(n);
    out.push_back(current);
    while (out.size() < n) {
        current += ExactScalar(mpz_class(static_cast<long>(gap)), den);
        out.push_back(current);
        gap += step_dist(rng);
    }
    return RealSet(std::move(out));
}

DifferenceSetIndex::DifferenceSetIndex(RealSet a) : a_(std::move(a)), convex_(is_convex(a_)) {}

bool DifferenceSetIndex::contains(const ExactScalar& x) const {
    if (a_.empty()) {
        return false;
    }
    switch (x.sign()) {
    case 0: return true;
    case -1: {
        ExactScalar pos = -x;
        return convex_ ? contains_positive_convex(pos) : contains_positive_scan(pos);
    }
    default: return convex_ ? contains_positive_convex(x) : contains_positive_scan(x);
    }
}

bool DifferenceSetIndex::contains_positive_convex(const ExactScalar& x) const {
    const std::size_t n = a_.size();
    if (n < 2) {
        return false;
    }
    auto smallest = [&](std::size_t k) { return a_[k] - a_[0]; };
    auto largest = [&](std::size_t k) { return a_[n - 1] - a_[n - 1 - k]; };

    // First k in [1, n-1] with largest(k) >= x.
    std::size_t lo = 1, hi = n;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (largest(mid) >= x) hi = mid; else lo = mid + 1;
    }
    const std::size_t k_first = lo;
    // First k in [1, n-1] with smallest(k) > x.
    lo = 1;
    hi = n;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (smallest(mid) > x) hi = mid; else lo = mid + 1;
    }
    const std::size_t k_end = lo;

    for (std::size_t k = k_first; k < k_end; ++k) {
        std::size_t i_lo = 0, i_hi = n - k;
        while (i_lo < i_hi) {
            std::size_t mid = i_lo + (i_hi - i_lo) / 2;
            auto cmp = (a_[mid + k] - a_[mid]) <=> x;
            if (cmp == 0) return true;
            if (cmp < 0) i_lo = mid + 1; else i_hi = mid;
        }
    }
    return false;
}

bool DifferenceSetIndex::contains_positive_scan(const ExactScalar& x) const {
    std::size_t i = 0, j = 0;
    while (j < a_.size()) {
        auto cmp = (a_[j] - a_[i]) <=> x;
        if (cmp == 0) return true;
        if (cmp < 0) ++j; else ++i;
    }
    return false;
}

} // namespace diffconvex
