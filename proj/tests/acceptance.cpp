// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "diffconvex/claims.hpp"
#include "diffconvex/constructions.hpp"
#include "diffconvex/oracles.hpp"

using namespace diffconvex;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!passed) notes << "; ";
            notes << "failed: " << what;
            passed = false;
        }
    }
};

// Regression values.
const std::map<std::int64_t, std::size_t> kGluedSize{{1000, 1756}, {2000, 4921}};
const std::map<std::int64_t, std::size_t> kThm3Matching{{4, 2}, {5, 2}, {6, 3}, {7, 3}, {8, 4}, {9, 4}, {10, 5}};
const std::vector<std::size_t> kNo4Ap{
    // v(1) .. v(40)
    1, 2, 3, 3, 4, 4, 5, 5, 5, 6, 6, 6, 7, 7, 7, 7, 8, 8, 8, 8,
    9, 9, 9, 9, 9, 10, 10, 10, 10, 10, 11, 11, 11, 11, 11, 11, 12, 12, 12, 12};

bool glued_checks(std::int64_t n, bool strict, Outcome& o, std::size_t& size) {
    const GlueResult g = glue_chain(n, strict);
    size = g.set.size();
    const DifferenceSetIndex index(thm1_set(n, strict));
    bool members = true;
    for (const auto& x : g.set) members = members && index.contains(x);
    o.require(is_convex(g.set), "S convex at n=" + std::to_string(n));
    o.require(members, "S inside A-A at n=" + std::to_string(n));
    return is_convex(g.set) && members;
}

void criterion_1(Outcome& o) {
    std::size_t big = 0;
    glued_checks(10000, true, o, big);
    o.require(big >= 25173, "|S(10000)| = " + std::to_string(big) + " >= 25173");
    std::map<std::int64_t, std::size_t> sizes;
    for (const auto& [n, expected] : kGluedSize) {
        glued_checks(n, true, o, sizes[n]);
        o.require(sizes[n] == expected, "|S(" + std::to_string(n) + ")| regression " + std::to_string(expected));
    }
    o.notes << (o.passed ? "" : "; ") << "|S(1000)|=" << sizes[1000] << " |S(2000)|=" << sizes[2000]
            << " |S(10000)|=" << big;
    const bool trend = 2 * sizes[2000] >= 7 * sizes[1000];
    if (!trend) {
        o.passed = false;
        o.notes << "; failed: |S(2000)| >= 3.5 |S(1000)| (ratio "
                << static_cast<double>(sizes[2000]) / static_cast<double>(sizes[1000]) << ")";
    }
}

void criterion_2(Outcome& o) {
    for (std::int64_t n : {1000, 2000, 10000}) {
        o.require(verify_claim_2_1(n, true).passed, "interleaving at n=" + std::to_string(n));
        o.require(verify_claim_2_2(n, true).passed, "exclusive count at n=" + std::to_string(n));
    }
}

void criterion_3(Outcome& o) {
    std::mt19937_64 rng(20231);
    std::uniform_int_distribution<std::size_t> size(25, 500);
    int ok = 0;
    for (int trial = 0; trial < 200;) {
        const std::size_t n = size(rng);
        const std::int64_t k = ceil_sqrt(static_cast<std::int64_t>(n));
        if (k + 1 + k * (k + 1) / 2 > static_cast<std::int64_t>(n)) continue;
        ++trial;
        const RealSet a = gen_convex_random(n, rng());
        const Matching m = thm2_matching(a);
        const bool good = m.size() == static_cast<std::size_t>(k) &&
                          static_cast<std::size_t>(k * k) >= n &&
                          is_convex(restricted_difference_set(a, m));
        ok += good;
    }
    o.require(ok == 200, std::to_string(ok) + "/200 convex");
    if (o.passed) o.notes << "200/200";
}

void criterion_4(Outcome& o) {
    for (const auto& [n, expected] : kThm3Matching) {
        const OracleResult r = max_convex_matching(thm3_set(n));
        o.require(r.exhaustive, "exhaustive at n=" + std::to_string(n));
        o.require(r.value * r.value <= 9 * static_cast<std::size_t>(n), "value <= 3 sqrt(n) at n=" + std::to_string(n));
        o.require(r.value == expected, "regression at n=" + std::to_string(n) + ": got " + std::to_string(r.value));
        o.notes << n << ":" << r.value << " ";
    }
    for (std::int64_t n : {4, 5}) {
        const Report r = verify_claims_3(n);
        o.require(r.passed && r.counts.at("subsets_truncated") == 0, "claims at n=" + std::to_string(n));
    }
}

void criterion_5(Outcome& o) {
    std::mt19937_64 rng(511);
    for (std::int64_t n = 5; n <= 40; ++n) {
        const auto need = static_cast<std::size_t>(n);
        o.require(lcs_convex(difference_set(squares_set(n))).value >= need, "squares at n=" + std::to_string(n));
        for (int trial = 0; trial < 50; ++trial) {
            const RealSet a = gen_convex_random(need, rng());
            o.require(lcs_convex(difference_set(a)).value >= need, "random at n=" + std::to_string(n));
        }
    }
}

void criterion_6(Outcome& o) {
    std::mt19937_64 rng(600);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 5);
    int agree = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<ExactScalar> values;
        const std::size_t target = size(rng);
        while (values.size() < target) values.emplace_back(mpz_class(num(rng)), mpz_class(den(rng)));
        const RealSet b = RealSet::from_unsorted(values);
        agree += lcs_convex(b).value == lcs_convex_bruteforce(b).value;
    }
    o.require(agree == 500, std::to_string(agree) + "/500 agree");
    if (o.passed) o.notes << "500/500";
}

void criterion_7(Outcome& o) {
    std::mt19937_64 rng(7007);
    std::uniform_int_distribution<std::size_t> size(2, 301);
    int ok = 0;
    int odd = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = trial < 2 ? 2 + static_cast<std::size_t>(trial) : size(rng);
        odd += n % 2;
        const RealSet a = gen_convex_random(n, rng());
        const Matching m = thm4_matching(a);
        ok += m.size() == n / 2 && is_convex(restricted_sum_set(a, m));
    }
    o.require(ok == 200, std::to_string(ok) + "/200 convex");
    o.require(odd > 0 && odd < 200, "both parities sampled");
    if (o.passed) o.notes << "200/200 (" << odd << " odd)";
}

void criterion_8(Outcome& o) {
    std::vector<std::size_t> values;
    for (std::int64_t n = 1; n <= 40; ++n) {
        const OracleResult r = max_weakly_convex_no4ap(n);
        o.require(r.exhaustive, "exhaustive at n=" + std::to_string(n));
        values.push_back(r.value);
    }
    for (std::size_t t = 1; t < values.size(); ++t) o.require(values[t] >= values[t - 1], "monotone");
    o.require(values[3] == 3, "v(4) = 3");
    o.require(values[39] <= 2 * values[9] + 2, "v(40) <= 2 v(10) + 2");
    o.require(values == kNo4Ap, "regression values");
    o.notes << "v(10)=" << values[9] << " v(40)=" << values[39];
}

void criterion_9(Outcome& o) {
    for (std::int64_t n = 2; n <= 10; ++n) {
        const RealSet a = thm3_set(n);
        for (const auto& x : difference_set(a)) {
            if (x.sign() != 0) {
                o.require(count_representations(a, x, PairOp::difference) == 1,
                          "unique difference at n=" + std::to_string(n));
            }
        }
        std::size_t max_sum = 0;
        for (const auto& x : sum_set(a)) max_sum = std::max(max_sum, count_representations(a, x, PairOp::sum));
        o.notes << n << ":" << max_sum << " ";
    }
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"glued block construction (convexity, membership, size, growth)", criterion_1},
        {"interleaving and exclusive-count checks", criterion_2},
        {"square-root matching with convex restricted differences", criterion_3},
        {"digit construction: exact matching sizes and structural claims", criterion_4},
        {"difference sets contain convex subsets of size |A|", criterion_5},
        {"dynamic programme agrees with exhaustive search", criterion_6},
        {"half-size matching with convex restricted sums", criterion_7},
        {"weakly convex sets without 4-term progressions", criterion_8},
        {"digit construction: unique differences, max sum representations", criterion_9},
    };
    int failures = 0;
    for (std::size_t idx = 0; idx < criteria.size(); ++idx) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[idx].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.passed;
        std::printf("criterion %zu: %s  %s [%.1fs] %s\n", idx + 1, o.passed ? "PASS" : "FAIL",
                    criteria[idx].first.c_str(), secs, o.notes.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
