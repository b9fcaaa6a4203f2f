// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include <sstream>

#include "diffconvex/claims.hpp"
#include "diffconvex/constructions.hpp"
#include "diffconvex/oracles.hpp"
#include "test_support.hpp"

using namespace diffconvex;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::invalid_input;
}

} // namespace

TEST_CASE("exclusive block bound") {
    CHECK(exclusive_block_bound(1000) == 280);
    CHECK(exclusive_block_bound(2000) == 560);
    CHECK(exclusive_block_bound(10000) == 2797);
    CHECK(exclusive_block_bound(540) == 151);
    CHECK(exclusive_block_bound(541) == 152);
}

TEST_CASE("report keeps the first counterexample") {
    Report r;
    CHECK(r.passed);
    r.fail({{"at", 1}});
    r.fail({{"at", 2}});
    CHECK_FALSE(r.passed);
    CHECK((*r.counterexample)["at"] == 1);
}

TEST_CASE("interleaving between adjacent blocks") {
    for (std::int64_t n : {1000, 2000}) {
        const Report r = verify_claim_2_1(n, true);
        CHECK(r.claim_id == "claim21");
        CHECK(r.passed);
        CHECK_FALSE(r.counterexample.has_value());
        const auto p = Thm1Params::make(n, true);
        CHECK(r.counts.at("blocks_checked") == p.k_max - p.k_min);
    }
    CHECK(verify_claim_2_1(300).passed);
    CHECK(kind_of([] { verify_claim_2_1(1050, true); }) == ErrorKind::invalid_params);
}

TEST_CASE("interleaving witness matches a direct search") {
    const std::int64_t n = 1000;
    const Report r = verify_claim_2_1(n);
    const auto p = Thm1Params::make(n, false);
    const std::int64_t i = r.counts.at("k9.i");
    const std::int64_t j = r.counts.at("k9.j");
    CHECK(thm1_difference(p, i, 10) <= thm1_difference(p, j, 9));
    CHECK(thm1_difference(p, j, 9) < thm1_difference(p, j + 1, 9));
    CHECK(thm1_difference(p, j + 1, 9) <= thm1_difference(p, i + 1, 10));
}

TEST_CASE("exclusive elements of each block") {
    for (std::int64_t n : {1000, 2000}) {
        const Report r = verify_claim_2_2(n, true);
        CHECK(r.claim_id == "claim22");
        CHECK(r.passed);
        CHECK(r.counts.at("threshold") == exclusive_block_bound(n));
    }
    // Independent count for one block: entries strictly between the neighbouring blocks' extremes.
    const std::int64_t n = 2000;
    const auto p = Thm1Params::make(n, false);
    const Report r = verify_claim_2_2(n);
    for (std::int64_t k = p.k_min; k <= p.k_max; ++k) {
        const RealSet block = thm1_block(n, k).values;
        const ExactScalar lo = thm1_difference(p, p.i_max, k - 1);
        const ExactScalar hi = thm1_difference(p, 1, k + 1);
        std::int64_t inside = 0;
        for (const auto& x : block) inside += (lo < x && x < hi);
        CHECK(r.counts.at("k" + std::to_string(k)) == inside);
        CHECK(inside >= exclusive_block_bound(n));
    }
}

TEST_CASE("glued set size report") {
    const Report small = verify_thm1_size(1000, true);
    CHECK(small.passed);
    CHECK(small.counts.at("size") == static_cast<std::int64_t>(glue_chain(1000).set.size()));
    CHECK(small.counts.at("members_checked") == small.counts.at("size"));

    const Report r = verify_thm1_size(2000);
    CHECK(r.passed);
    CHECK(r.counts.at("interior_blocks") == 1);
    CHECK(r.counts.at("bound") == 560);
    CHECK(r.counts.at("size") >= r.counts.at("bound"));
}

TEST_CASE("digit construction claims") {
    for (std::int64_t n = 2; n <= 5; ++n) {
        const Report r = verify_claims_3(n);
        CHECK(r.claim_id == "claims3");
        CHECK(r.passed);
        CHECK(r.counts.at("subsets_truncated") == 0);
        CHECK(r.counts.at("matchings_checked") >= n * (n - 1) / 2);
        CHECK(r.counts.at("max_occupied_blocks") <= n - 1);
    }
    const Report capped = verify_claims_3(7, 1000);
    CHECK(capped.passed);
    CHECK(capped.counts.at("subsets_checked") <= 1000);
    CHECK(kind_of([] { verify_claims_3(1); }) == ErrorKind::invalid_params);
    CHECK(kind_of([] { verify_claims_3(9); }) == ErrorKind::invalid_params);
}

TEST_CASE("growth tables") {
    CHECK(parse_growth_family("thm3_cm") == GrowthFamily::thm3_cm);
    CHECK_FALSE(parse_growth_family("nope").has_value());
    CHECK(to_string(GrowthFamily::squares_c) == "squares_C");

    const std::vector<std::int64_t> ns{4, 5, 13};
    const auto rows = growth_table(GrowthFamily::thm3_cm, ns);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].value == 2);
    CHECK(rows[1].value == 2);
    CHECK(rows[0].exhaustive);
    CHECK_FALSE(rows[2].value.has_value());
    CHECK_FALSE(rows[2].exhaustive);

    std::ostringstream csv;
    write_growth_csv(csv, rows);
    CHECK(csv.str() == "family,n,value,exhaustive\nthm3_cm,4,2,true\nthm3_cm,5,2,true\nthm3_cm,13,skipped,false\n");

    const std::vector<std::int64_t> sq{6, 10};
    const auto squares = growth_table(GrowthFamily::squares_c, sq);
    for (const auto& row : squares) {
        CHECK(*row.value == static_cast<std::int64_t>(lcs_convex(difference_set(squares_set(row.n))).value));
        CHECK(*row.value >= row.n);
    }

    const std::vector<std::int64_t> no4{4, 10};
    const auto ap = growth_table(GrowthFamily::no4ap_max, no4);
    CHECK(ap[0].value == 3);
    CHECK(*ap[1].value == static_cast<std::int64_t>(max_weakly_convex_no4ap(10).value));

    const std::vector<std::int64_t> glue_ns{1000, 999};
    const auto glued = growth_table(GrowthFamily::thm1_s_size, glue_ns);
    CHECK(*glued[0].value == static_cast<std::int64_t>(glue_chain(1000).set.size()));
    CHECK(glued[1].value.has_value());
}
