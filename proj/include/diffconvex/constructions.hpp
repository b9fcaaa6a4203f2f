// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "diffconvex/exact.hpp"
#include "diffconvex/real_set.hpp"

namespace diffconvex {

/*
 * Parameters of the quadratic-size construction
 *
 *     a_i = i + c1 i^2 + c2 i^3,   c1 = 75 / n^2,   c2 = 1 / n^5,
 *
 * with difference blocks D_k for k in [k_min, k_max], each indexed by
 * 1 <= i <= i_max.
 *
 * Strict mode requires n to be a multiple of 100 with n >= 1000. Lenient
 * mode takes k_min = ceil(0.009 n), k_max = floor(0.01 n), i_max =
 * floor(0.99 n) and accepts any n >= 100 for which the k range is nonempty.
 */
struct Thm1Params {
    std::int64_t n = 0;
    bool strict = false;
    ExactScalar c1;
    ExactScalar c2;
    std::int64_t k_min = 0;
    std::int64_t k_max = 0;
    std::int64_t i_max = 0;

    /// Throws Error(invalid_params).
    static Thm1Params make(std::int64_t n, bool strict);
};

/// a_i for any positive i (the formula extends past n).
ExactScalar thm1_element(const Thm1Params& p, std::int64_t i);
/// Closed form of a_{i+k} - a_i.
ExactScalar thm1_difference(const Thm1Params& p, std::int64_t i, std::int64_t k);

RealSet thm1_set(std::int64_t n, bool strict = false);
/// D_k for k_min <= k <= k_max (lenient parameters); throws Error(invalid_params).
DifferenceBlock thm1_block(std::int64_t n, std::int64_t k);

/// 1-based splice indices: the glued set keeps a_1..a_j and b_{i+1}..b_m.
struct Splice {
    std::size_t i = 0;
    std::size_t j = 0;

    friend bool operator==(const Splice&, const Splice&) = default;
};

struct GluePairResult {
    RealSet set;
    Splice splice;
};

/*
 * Glues convex A onto convex B at an interleaving b_i <= a_j < a_{j+1} <= b_{i+1},
 * producing the convex set {a_1, ..., a_j, b_{i+1}, ..., b_m}.
 *
 * For each j the only candidate i is the last one with b_i <= a_j, so all
 * splices are found in one merge pass. The largest output wins; ties go to the
 * smallest i. Throws Error(no_splice) when no interleaving exists and
 * Error(invalid_input) when either input is not convex.
 */
GluePairResult glue_pair(const RealSet& a, const RealSet& b);

struct SpliceRecord {
    std::int64_t k = 0;  ///< index of the incoming block
    std::size_t j = 0;   ///< last kept position of the running set
    std::size_t i = 0;   ///< the incoming block contributes positions i+1 onwards

    friend bool operator==(const SpliceRecord&, const SpliceRecord&) = default;
};

struct GlueTrace {
    std::vector<SpliceRecord> splices;

    friend bool operator==(const GlueTrace&, const GlueTrace&) = default;
};

struct GlueResult {
    RealSet set;
    GlueTrace trace;
    Thm1Params params;
};

/// Glues D_{k_min}, D_{k_min+1}, ..., D_{k_max} left to right.
GlueResult glue_chain(std::int64_t n, bool strict = false);

/*
 * Matching {(k+1-i, k+1+i(i+1)/2) : 1 <= i <= k} with k = ceil(sqrt(n)), listed
 * in order of i. Needs k + 1 + k(k+1)/2 <= n, otherwise Error(insufficient_n).
 */
Matching thm2_matching(const RealSet& a);

/// a_j = sum_{t<j} (j-t) (2n)^{n-t}; integers whose base-2n digits are j, j-1, ..., 1.
RealSet thm3_set(std::int64_t n);

struct BlockPosition {
    std::int64_t k = 0;
    std::int64_t j = 0;

    friend bool operator==(const BlockPosition&, const BlockPosition&) = default;
};

/// Recovers (k, j) with x = a_{j+k} - a_j for thm3_set(n) by reading base-2n digits.
std::optional<BlockPosition> thm3_block_of(std::int64_t n, const ExactScalar& x);

/// Pairs (t, h+t) for t = 1..h, h = floor(n/2); a_n is left out when n is odd.
Matching thm4_matching(const RealSet& a);

/// {i^2 : 1 <= i <= n}.
RealSet squares_set(std::int64_t n);

} // namespace diffconvex
