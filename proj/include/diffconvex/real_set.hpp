// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "diffconvex/exact.hpp"

namespace diffconvex {

/// Strictly increasing finite sequence of exact scalars.
class RealSet {
  public:
    RealSet() = default;
    /// Throws Error(invalid_input) unless `elements` is strictly increasing.
    explicit RealSet(std::vector<ExactScalar> elements);

    /// Sorts and deduplicates.
    static RealSet from_unsorted(std::vector<ExactScalar> elements);
    static RealSet from_integers(std::span<const std::int64_t> values);

    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    /// 0-based access.
    const ExactScalar& operator[](std::size_t idx) const { return elements_[idx]; }
    /// 1-based access, matching the a_1 < a_2 < ... < a_n convention.
    const ExactScalar& nth(std::size_t pos) const { return elements_.at(pos - 1); }
    const ExactScalar& front() const { return elements_.front(); }
    const ExactScalar& back() const { return elements_.back(); }

    std::span<const ExactScalar> elements() const noexcept { return elements_; }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    bool contains(const ExactScalar& x) const;
    /// 0-based position of `x`, or size() when absent.
    std::size_t index_of(const ExactScalar& x) const;

    friend bool operator==(const RealSet&, const RealSet&) = default;

  private:
    std::vector<ExactScalar> elements_;
};

struct IndexPair {
    std::size_t lo = 0;
    std::size_t hi = 0;

    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/*
 * Element-disjoint pairs of 1-based indices into a base set of `base_size`
 * elements. Each pair has lo < hi. The pair order is kept as given so that
 * constructions can list pairs in their natural order.
 */
class Matching {
  public:
    Matching() = default;
    /// Throws Error(invalid_matching) on out-of-range, reversed or reused indices.
    Matching(std::size_t base_size, std::vector<IndexPair> pairs);

    std::size_t base_size() const noexcept { return base_size_; }
    std::span<const IndexPair> pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }

    /// The pairs sorted by (lo, hi); used to compare witnesses.
    std::vector<IndexPair> canonical_pairs() const;

    friend bool operator==(const Matching&, const Matching&) = default;

  private:
    std::size_t base_size_ = 0;
    std::vector<IndexPair> pairs_;
};

/// The k-th difference block {a_{i+k} - a_i : 1 <= i <= count}.
struct DifferenceBlock {
    std::int64_t k = 0;
    RealSet values;
    std::size_t first_index = 1;

    std::size_t count() const noexcept { return values.size(); }
};

enum class PairOp { difference, sum };

/// Consecutive gaps strictly increase. Sequences of length <= 2 qualify.
bool is_convex(std::span<const ExactScalar> s);
bool is_convex(const RealSet& s);
/// Consecutive gaps never decrease.
bool is_weakly_convex(std::span<const ExactScalar> s);
bool is_weakly_convex(const RealSet& s);

RealSet difference_set(const RealSet& a);
RealSet sum_set(const RealSet& a);

/// {A[hi] - A[lo]} over the matching's pairs (larger minus smaller).
RealSet restricted_difference_set(const RealSet& a, const Matching& m);
/// {A[lo] + A[hi]} over the matching's pairs.
RealSet restricted_sum_set(const RealSet& a, const Matching& m);

/// Ordered pairs (a, b) in A x A with a - b == x (or a + b == x), a == b included.
std::size_t count_representations(const RealSet& a, const ExactScalar& x, PairOp op);

/// Deterministic convex set of size n built from strictly increasing positive gaps.
RealSet gen_convex_random(std::size_t n, std::uint64_t seed);

/*
 * Membership oracle for A - A without materialising it.
 *
 * For convex A each row i -> a_{i+k} - a_i is increasing, and so are its
 * first and last entries as functions of k. A query is a binary search for
 * the admissible k range plus one binary search per candidate k. Non-convex
 * inputs fall back to a linear two-pointer scan.
 */
class DifferenceSetIndex {
  public:
    explicit DifferenceSetIndex(RealSet a);

    bool contains(const ExactScalar& x) const;
    const RealSet& base() const noexcept { return a_; }

  private:
    bool contains_positive_convex(const ExactScalar& x) const;
    bool contains_positive_scan(const ExactScalar& x) const;

    RealSet a_;
    bool convex_ = false;
};

} // namespace diffconvex
