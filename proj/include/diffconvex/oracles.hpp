// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <variant>

#include "diffconvex/real_set.hpp"

namespace diffconvex {

/// Optimum of an extremal search together with a witness achieving it.
struct OracleResult {
    std::size_t value = 0;
    std::variant<RealSet, Matching> witness;
    bool exhaustive = false;
};

inline constexpr std::size_t kBruteForceGuard = 20;
inline constexpr std::size_t kMatchingGuard = 12;

/*
 * Size of the largest convex subset of B.
 *
 * Backward dynamic programme over pairs: len(h, j) is the longest convex
 * sequence starting with B[h] < B[j]. For a fixed middle j the admissible
 * successors t satisfy B[t] > 2 B[j] - B[h], a suffix of (j, |B|) that shrinks
 * as h decreases, so a running suffix maximum gives O(|B|^2) overall.
 *
 * Values are brought to a common denominator first and the programme runs on
 * native 64-bit integers whenever they fit, otherwise on GMP integers.
 *
 * The witness is the lexicographically smallest optimal subsequence.
 * Throws Error(invalid_input) for empty B.
 */
OracleResult lcs_convex(const RealSet& b);

/// Same quantity by enumerating all 2^|B| subsets. Error(too_large) above `guard`.
OracleResult lcs_convex_bruteforce(const RealSet& b, std::size_t guard = kBruteForceGuard);

/*
 * Largest matching M on convex A whose restricted difference set is convex.
 *
 * Depth-first search over pairs sorted by difference. Differences are only
 * ever appended at the top of the current distinct-value sequence, so a pair
 * is admissible iff it repeats the last value or extends the sequence
 * convexly; a violated triple can never be repaired by larger values. Branches
 * that cannot reach the incumbent size are cut.
 *
 * Counts pairs, not distinct differences. The witness is the optimum whose
 * (lo, hi)-sorted pair list is lexicographically smallest; `threads > 1`
 * splits the top level of the search and returns the same result.
 * Throws Error(too_large) when |A| > limit, Error(invalid_input) for non-convex A.
 */
OracleResult max_convex_matching(const RealSet& a, std::size_t limit = kMatchingGuard,
                                 unsigned threads = 1);

/// Calls `visit` once for every nonempty matching with convex restricted difference set.
void for_each_convex_matching(const RealSet& a, const std::function<void(const Matching&)>& visit,
                              std::size_t limit = kMatchingGuard);

/*
 * Largest K in {1, ..., n} with nondecreasing gaps and no three equal
 * consecutive gaps (no four consecutive elements in arithmetic progression).
 *
 * Solved exactly by a programme over (last two elements, length of the
 * current equal-gap run) in O(n^2) time and memory, so the result is
 * exhaustive for every n. The witness is lexicographically smallest; n <= 0
 * gives the empty set.
 */
OracleResult max_weakly_convex_no4ap(std::int64_t n);

struct EnumerationSummary {
    std::size_t yielded = 0;
    bool truncated = false;
};

/*
 * Visits convex subsets of B with 3 <= size <= size_cap in lexicographic order
 * of their index sequences, stopping after count_cap of them (truncated is
 * then set when more remained).
 */
EnumerationSummary enumerate_convex_subsets(const RealSet& b, std::size_t size_cap,
                                            std::size_t count_cap,
                                            const std::function<void(const RealSet&)>& sink);

} // namespace diffconvex
