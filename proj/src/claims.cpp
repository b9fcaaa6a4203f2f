// SPDX-License-Identifier: Apache-2.0

#include "diffconvex/claims.hpp"

#include <algorithm>
#include <limits>

#include "diffconvex/constructions.hpp"
#include "diffconvex/io.hpp"
#include "diffconvex/oracles.hpp"

namespace diffconvex {

using nlohmann::json;

namespace {

json thm1_params_json(const Thm1Params& p) {
    return json{{"n", p.n},         {"strict", p.strict},   {"k_min", p.k_min},
                {"k_max", p.k_max}, {"i_max", p.i_max},     {"c1", to_json(p.c1)},
                {"c2", to_json(p.c2)}};
}

std::string key(std::int64_t k, const char* suffix = "") {
    return "k" + std::to_string(k) + suffix;
}

/// Number of values strictly between lo and hi in a sorted set.
std::int64_t count_open_interval(const RealSet& s, const ExactScalar& lo, const ExactScalar& hi) {
    auto first = std::upper_bound(s.begin(), s.end(), lo);
    auto last = std::lower_bound(s.begin(), s.end(), hi);
    return last > first ? static_cast<std::int64_t>(last - first) : 0;
}

json scalars_json(const RealSet& s) {
    json out = json::array();
    for (const auto& x : s) out.push_back(x.to_string());
    return out;
}

struct BlockProfile {
    std::vector<BlockPosition> positions;
    std::map<std::int64_t, int> per_block;
    std::vector<std::int64_t> occupied; // K(S), ascending
};

std::optional<BlockProfile> profile(std::int64_t n, const RealSet& s) {
    BlockProfile out;
    for (const auto& x : s) {
        auto pos = thm3_block_of(n, x);
        if (!pos) {
            return std::nullopt;
        }
        out.positions.push_back(*pos);
        ++out.per_block[pos->k];
    }
    for (const auto& [k, count] : out.per_block) {
        out.occupied.push_back(k);
    }
    return out;
}

json profile_json(const RealSet& s, const BlockProfile& p) {
    json blocks = json::array();
    for (const auto& pos : p.positions) blocks.push_back(json::array({pos.k, pos.j}));
    return json{{"set", scalars_json(s)}, {"blocks", std::move(blocks)}};
}

/// Checks the per-subset conclusions; returns the failing claim label or an empty string.
std::string check_subset_claims(const BlockProfile& p, std::size_t size) {
    std::int64_t doubled = 0;
    std::int64_t doubled_block = 0;
    for (const auto& [k, count] : p.per_block) {
        if (count >= 2) {
            ++doubled;
            doubled_block = k;
        }
        if (count >= 3) {
            return "3.3";
        }
    }
    if (doubled > 1 || (doubled == 1 && p.occupied.front() < doubled_block)) {
        return "3.1";
    }
    for (std::size_t t = 1; t + 1 < p.occupied.size(); ++t) {
        if (p.occupied[t + 1] - p.occupied[t] < p.occupied[t] - p.occupied[t - 1]) {
            return "3.2";
        }
    }
    if (size > p.occupied.size() + 1) {
        return "|S|<=|K(S)|+1";
    }
    return {};
}

bool has_four_term_ap_run(const std::vector<std::int64_t>& ks) {
    for (std::size_t t = 0; t + 3 < ks.size(); ++t) {
        const auto gap = ks[t + 1] - ks[t];
        if (ks[t + 2] - ks[t + 1] == gap && ks[t + 3] - ks[t + 2] == gap) {
            return true;
        }
    }
    return false;
}

} // namespace

std::int64_t exclusive_block_bound(std::int64_t n) { return (151 * n + 539) / 540; }

Report verify_claim_2_1(std::int64_t n, bool strict) {
    const auto p = Thm1Params::make(n, strict);
    Report report;
    report.claim_id = "claim21";
    report.params = thm1_params_json(p);

    for (std::int64_t k = p.k_min; k < p.k_max; ++k) {
        const RealSet lower = thm1_block(n, k).values;     // D_k
        const RealSet upper = thm1_block(n, k + 1).values; // D_{k+1}
        std::optional<std::pair<std::size_t, std::size_t>> found;
        for (std::size_t i = 1; i < upper.size() && !found; ++i) {
            // smallest j with d_j^{(k)} >= d_i^{(k+1)}
            auto it = std::lower_bound(lower.begin(), lower.end(), upper.nth(i));
            const auto j = static_cast<std::size_t>(it - lower.begin()) + 1;
            if (j < lower.size() && lower.nth(j + 1) <= upper.nth(i + 1)) {
                found.emplace(i, j);
            }
        }
        if (!found) {
            report.fail(json{{"k", k}, {"reason", "no interleaving of D_k inside a gap of D_{k+1}"}});
            continue;
        }
        report.counts[key(k, ".i")] = static_cast<std::int64_t>(found->first);
        report.counts[key(k, ".j")] = static_cast<std::int64_t>(found->second);
    }
    report.counts["blocks_checked"] = p.k_max - p.k_min;
    return report;
}

Report verify_claim_2_2(std::int64_t n, bool strict) {
    const auto p = Thm1Params::make(n, strict);
    const std::int64_t threshold = exclusive_block_bound(n);
    Report report;
    report.claim_id = "claim22";
    report.params = thm1_params_json(p);
    report.counts["threshold"] = threshold;

    for (std::int64_t k = p.k_min; k <= p.k_max; ++k) {
        const RealSet block = thm1_block(n, k).values;
        const ExactScalar lo = thm1_difference(p, p.i_max, k - 1); // d_max^{(k-1)}
        const ExactScalar hi = thm1_difference(p, 1, k + 1);       // d_min^{(k+1)}
        const std::int64_t count = count_open_interval(block, lo, hi);
        report.counts[key(k)] = count;
        if (count < threshold) {
            report.fail(json{{"k", k}, {"count", count}, {"threshold", threshold}});
        }
    }
    return report;
}

Report verify_thm1_size(std::int64_t n, bool strict) {
    const GlueResult glued = glue_chain(n, strict);
    const auto& p = glued.params;
    const RealSet& s = glued.set;
    const std::int64_t interior = std::max<std::int64_t>(0, p.k_max - p.k_min - 1);
    const std::int64_t bound = exclusive_block_bound(n) * interior;

    Report report;
    report.claim_id = "thm1size";
    report.params = thm1_params_json(p);
    report.counts["size"] = static_cast<std::int64_t>(s.size());
    report.counts["bound"] = bound;
    report.counts["interior_blocks"] = interior;
    report.counts["splices"] = static_cast<std::int64_t>(glued.trace.splices.size());

    if (!is_convex(s)) {
        report.fail(json{{"reason", "glued set is not convex"}});
        return report;
    }
    const DifferenceSetIndex index(thm1_set(n, strict));
    std::int64_t checked = 0;
    for (const auto& x : s) {
        if (!index.contains(x)) {
            report.fail(json{{"reason", "element outside A - A"}, {"element", to_json(x)}});
            break;
        }
        ++checked;
    }
    report.counts["members_checked"] = checked;
    if (report.passed && static_cast<std::int64_t>(s.size()) < bound) {
        report.fail(json{{"reason", "glued set below the per-block bound"},
                         {"size", s.size()},
                         {"bound", bound}});
    }
    return report;
}

Report verify_claims_3(std::int64_t n, std::size_t sample_cap) {
    if (n < 2 || n > 8) {
        throw Error(ErrorKind::invalid_params, "verify_claims_3 needs 2 <= n <= 8");
    }
    const RealSet a = thm3_set(n);
    std::vector<ExactScalar> positive;
    for (const auto& x : difference_set(a)) {
        if (x.sign() > 0) positive.push_back(x);
    }
    const RealSet b(std::move(positive));
    const bool exhaustive = n <= 5;
    const std::size_t cap = exhaustive ? std::numeric_limits<std::size_t>::max() : sample_cap;

    Report report;
    report.claim_id = "claims3";
    report.params = json{{"n", n}, {"sample_cap", sample_cap}, {"exhaustive_subsets", exhaustive}};

    std::int64_t max_size = 0;
    std::int64_t max_k = 0;
    auto check = [&](const RealSet& s, bool from_matching) {
        const auto prof = profile(n, s);
        if (!prof) {
            report.fail(json{{"claim", "decoding"}, {"set", scalars_json(s)}});
            return;
        }
        max_size = std::max<std::int64_t>(max_size, static_cast<std::int64_t>(s.size()));
        max_k = std::max<std::int64_t>(max_k, static_cast<std::int64_t>(prof->occupied.size()));
        std::string failed = check_subset_claims(*prof, s.size());
        if (failed.empty() && from_matching && has_four_term_ap_run(prof->occupied)) {
            failed = "3.4";
        }
        if (!failed.empty()) {
            auto witness = profile_json(s, *prof);
            witness["claim"] = failed;
            report.fail(std::move(witness));
        }
    };

    const auto summary = enumerate_convex_subsets(b, b.size(), cap,
                                                  [&](const RealSet& s) { check(s, false); });
    std::int64_t matchings = 0;
    for_each_convex_matching(
        a,
        [&](const Matching& m) {
            ++matchings;
            check(restricted_difference_set(a, m), true);
        },
        a.size());

    report.counts["subsets_checked"] = static_cast<std::int64_t>(summary.yielded);
    report.counts["subsets_truncated"] = summary.truncated ? 1 : 0;
    report.counts["matchings_checked"] = matchings;
    report.counts["max_subset_size"] = max_size;
    report.counts["max_occupied_blocks"] = max_k;
    return report;
}

std::optional<GrowthFamily> parse_growth_family(std::string_view name) {
    if (name == "thm1_S_size") return GrowthFamily::thm1_s_size;
    if (name == "thm3_cm") return GrowthFamily::thm3_cm;
    if (name == "squares_C") return GrowthFamily::squares_c;
    if (name == "no4ap_max") return GrowthFamily::no4ap_max;
    return std::nullopt;
}

std::string_view to_string(GrowthFamily family) {
    switch (family) {
    case GrowthFamily::thm1_s_size: return "thm1_S_size";
    case GrowthFamily::thm3_cm: return "thm3_cm";
    case GrowthFamily::squares_c: return "squares_C";
    case GrowthFamily::no4ap_max: return "no4ap_max";
    }
    return "unknown";
}

std::vector<GrowthRow> growth_table(GrowthFamily family, std::span<const std::int64_t> n_list,
                                    const GrowthOptions& options) {
    std::vector<GrowthRow> rows;
    for (std::int64_t n : n_list) {
        GrowthRow row{family, n, std::nullopt, false};
        try {
            switch (family) {
            case GrowthFamily::thm1_s_size:
                row.value = static_cast<std::int64_t>(glue_chain(n).set.size());
                row.exhaustive = true;
                break;
            case GrowthFamily::thm3_cm: {
                auto r = max_convex_matching(thm3_set(n), options.matching_limit, options.threads);
                row.value = static_cast<std::int64_t>(r.value);
                row.exhaustive = r.exhaustive;
                break;
            }
            case GrowthFamily::squares_c: {
                auto r = lcs_convex(difference_set(squares_set(n)));
                row.value = static_cast<std::int64_t>(r.value);
                row.exhaustive = r.exhaustive;
                break;
            }
            case GrowthFamily::no4ap_max: {
                auto r = max_weakly_convex_no4ap(n);
                row.value = static_cast<std::int64_t>(r.value);
                row.exhaustive = r.exhaustive;
                break;
            }
            }
        } catch (const Error&) {
            row.value.reset();
            row.exhaustive = false;
        }
        rows.push_back(row);
    }
    return rows;
}

void write_growth_csv(std::ostream& os, std::span<const GrowthRow> rows) {
    os << "family,n,value,exhaustive\n";
    for (const auto& row : rows) {
        os << to_string(row.family) << ',' << row.n << ',';
        if (row.value) {
            os << *row.value;
        } else {
            os << "skipped";
        }
        os << ',' << (row.exhaustive ? "true" : "false") << '\n';
    }
}

} // namespace diffconvex
