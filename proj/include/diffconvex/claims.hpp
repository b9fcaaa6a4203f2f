// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace diffconvex {

/// Outcome of a claim checker. `passed` is false exactly when a counterexample is attached.
struct Report {
    std::string claim_id;
    nlohmann::json params = nlohmann::json::object();
    bool passed = true;
    std::optional<nlohmann::json> counterexample;
    std::map<std::string, std::int64_t> counts;

    void fail(nlohmann::json witness) {
        if (passed) {
            passed = false;
            counterexample = std::move(witness);
        }
    }
};

/// ceil(151 n / 540), the per-block count of exclusively owned differences.
std::int64_t exclusive_block_bound(std::int64_t n);

/// Every adjacent block pair D_k, D_{k+1} admits d_i^{(k+1)} <= d_j^{(k)} < d_{j+1}^{(k)} <= d_{i+1}^{(k+1)}.
Report verify_claim_2_1(std::int64_t n, bool strict = false);

/// |D_k cap (d_max^{(k-1)}, d_min^{(k+1)})| >= ceil(151 n / 540) for every block index k.
Report verify_claim_2_2(std::int64_t n, bool strict = false);

/*
 * Runs the block gluing and re-checks the result from scratch: convexity,
 * membership of every element in A - A, and
 * |S| >= ceil(151 n / 540) * (k_max - k_min - 1).
 */
Report verify_thm1_size(std::int64_t n, bool strict = false);

inline constexpr std::size_t kDefaultSampleCap = 200000;

/*
 * Structural checks on the digit construction for 2 <= n <= 8.
 *
 * Convex subsets S of the positive differences are enumerated (exhaustively
 * for n <= 5, up to `sample_cap` subsets otherwise) and every element is
 * mapped to its block through digit decoding alone. Each S must have at most
 * one block holding two elements, and no earlier block may then be hit; the
 * occupied block indices K(S) must be weakly convex; no block holds three
 * elements; and |S| <= |K(S)| + 1. Every matching with convex restricted
 * difference set is also enumerated and K(S) must avoid four consecutive
 * terms in arithmetic progression.
 */
Report verify_claims_3(std::int64_t n, std::size_t sample_cap = kDefaultSampleCap);

enum class GrowthFamily { thm1_s_size, thm3_cm, squares_c, no4ap_max };

std::optional<GrowthFamily> parse_growth_family(std::string_view name);
std::string_view to_string(GrowthFamily family);

struct GrowthRow {
    GrowthFamily family{};
    std::int64_t n = 0;
    std::optional<std::int64_t> value; ///< empty when the row was skipped
    bool exhaustive = false;
};

struct GrowthOptions {
    std::size_t matching_limit = 12;
    unsigned threads = 1;
};

std::vector<GrowthRow> growth_table(GrowthFamily family, std::span<const std::int64_t> n_list,
                                    const GrowthOptions& options = {});

/// Header `family,n,value,exhaustive`; skipped rows carry value `skipped`.
void write_growth_csv(std::ostream& os, std::span<const GrowthRow> rows);

} // namespace diffconvex
