// SPDX-License-Identifier: Apache-2.0

#include "diffconvex/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

namespace diffconvex {

namespace {

constexpr std::size_t kMaxDpSize = 16384;

RealSet subset(const RealSet& b, const std::vector<std::size_t>& indices) {
    std::vector<ExactScalar> out;
    out.reserve(indices.size());
    for (std::size_t idx : indices) {
        out.push_back(b[idx]);
    }
    return RealSet(std::move(out));
}

/// Scales B to a common denominator; the integers preserve order and all affine comparisons.
std::vector<mpz_class> common_denominator_integers(const RealSet& b) {
    mpz_class lcm = 1;
    for (const auto& x : b) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.value().get_den_mpz_t());
    }
    std::vector<mpz_class> out;
    out.reserve(b.size());
    for (const auto& x : b) {
        out.push_back(x.value().get_num() * (lcm / x.value().get_den()));
    }
    return out;
}

template <class Int>
std::vector<std::size_t> longest_convex_indices(const std::vector<Int>& v) {
    const std::size_t m = v.size();
    if (m <= 2) {
        std::vector<std::size_t> all(m);
        for (std::size_t t = 0; t < m; ++t) all[t] = t;
        return all;
    }
    // len[h * m + j], h < j: longest convex sequence whose first two terms are v[h], v[j].
    std::vector<std::uint16_t> len(m * m, 0);
    std::vector<std::uint16_t> suffix(m + 1, 0);
    for (std::size_t j = m; j-- > 1;) {
        suffix[m] = 0;
        for (std::size_t t = m; t-- > j + 1;) {
            suffix[t] = std::max(suffix[t + 1], len[j * m + t]);
        }
        std::size_t t = j + 1;
        for (std::size_t h = j; h-- > 0;) {
            while (t < m && !(v[t] - v[j] > v[j] - v[h])) {
                ++t;
            }
            len[h * m + j] = (t < m) ? static_cast<std::uint16_t>(1 + suffix[t]) : 2;
        }
    }

    std::uint16_t best = 0;
    std::size_t first = 0, second = 1;
    for (std::size_t h = 0; h < m; ++h) {
        for (std::size_t j = h + 1; j < m; ++j) {
            if (len[h * m + j] > best) {
                best = len[h * m + j];
                first = h;
                second = j;
            }
        }
    }
    // Scanning h then j ascending with a strict improvement test already picks
    // the lexicographically smallest opening pair; extend greedily from it.
    std::vector<std::size_t> out{first, second};
    std::size_t remaining = best - 2u;
    while (remaining > 0) {
        const std::size_t h = out[out.size() - 2];
        const std::size_t j = out.back();
        for (std::size_t t = j + 1; t < m; ++t) {
            if (v[t] - v[j] > v[j] - v[h] && len[j * m + t] == remaining + 1) {
                out.push_back(t);
                break;
            }
        }
        --remaining;
    }
    return out;
}

bool fits_in_int64(const std::vector<mpz_class>& values) {
    static const mpz_class bound = mpz_class(1) << 61;
    return std::all_of(values.begin(), values.end(),
                       [](const mpz_class& x) { return abs(x) < bound; });
}

// ----------------------------------------------------------------------------
// Matching search

struct CandidatePair {
    IndexPair pair;
    ExactScalar diff;
    std::uint64_t bits;
};

std::vector<CandidatePair> candidate_pairs(const RealSet& a) {
    std::vector<CandidatePair> out;
    for (std::size_t lo = 1; lo <= a.size(); ++lo) {
        for (std::size_t hi = lo + 1; hi <= a.size(); ++hi) {
            out.push_back(CandidatePair{IndexPair{lo, hi}, a.nth(hi) - a.nth(lo),
                                        (std::uint64_t{1} << (lo - 1)) |
                                            (std::uint64_t{1} << (hi - 1))});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const CandidatePair& x, const CandidatePair& y) {
        return x.diff < y.diff;
    });
    return out;
}

void check_matching_input(const RealSet& a, std::size_t limit) {
    if (a.size() > limit) {
        throw Error(ErrorKind::too_large, "matching search limited to " + std::to_string(limit) +
                                              " elements, got " + std::to_string(a.size()));
    }
    if (a.size() > 64) {
        throw Error(ErrorKind::too_large, "matching search supports at most 64 elements");
    }
    if (!is_convex(a)) {
        throw Error(ErrorKind::invalid_input, "matching search requires a convex set");
    }
}

class MatchingSearch {
  public:
    MatchingSearch(const std::vector<CandidatePair>& pairs, std::size_t n, bool prune,
                   std::function<void(const std::vector<IndexPair>&)> visit = {})
        : pairs_(pairs), n_(n), prune_(prune), visit_(std::move(visit)) {}

    void run_from_root() { descend(0, 0, nullptr, nullptr); }

    /// Explores only matchings whose first (smallest-difference) pair is `first`.
    void run_from(std::size_t first) {
        const auto& c = pairs_[first];
        current_.push_back(c.pair);
        descend(first + 1, c.bits, &c.diff, nullptr);
        current_.pop_back();
    }

    std::size_t best() const { return best_; }
    const std::vector<IndexPair>& witness() const { return witness_; }

  private:
    void record() {
        if (visit_ && !current_.empty()) {
            visit_(current_);
        }
        if (current_.size() < best_) {
            return;
        }
        auto sorted = current_;
        std::sort(sorted.begin(), sorted.end());
        if (current_.size() > best_ || sorted < witness_) {
            best_ = current_.size();
            witness_ = std::move(sorted);
        }
    }

    void descend(std::size_t from, std::uint64_t used, const ExactScalar* last,
                 const ExactScalar* prev) {
        record();
        const auto free = n_ - static_cast<std::size_t>(std::popcount(used));
        if (prune_ && current_.size() + free / 2 < best_) {
            return;
        }
        for (std::size_t p = from; p < pairs_.size(); ++p) {
            const auto& c = pairs_[p];
            if (c.bits & used) {
                continue;
            }
            const ExactScalar* next_last = &c.diff;
            const ExactScalar* next_prev = last;
            if (last && c.diff == *last) {
                next_last = last;
                next_prev = prev;
            } else if (last && prev && !(c.diff - *last > *last - *prev)) {
                continue;
            }
            current_.push_back(c.pair);
            descend(p + 1, used | c.bits, next_last, next_prev);
            current_.pop_back();
        }
    }

    const std::vector<CandidatePair>& pairs_;
    std::size_t n_;
    bool prune_;
    std::function<void(const std::vector<IndexPair>&)> visit_;
    std::vector<IndexPair> current_;
    std::size_t best_ = 0;
    std::vector<IndexPair> witness_;
};

} // namespace

OracleResult lcs_convex(const RealSet& b) {
    if (b.empty()) {
        throw Error(ErrorKind::invalid_input, "lcs_convex of an empty set");
    }
    if (b.size() > kMaxDpSize) {
        throw Error(ErrorKind::too_large, "lcs_convex supports at most " +
                                              std::to_string(kMaxDpSize) + " elements");
    }
    const auto scaled = common_denominator_integers(b);
    std::vector<std::size_t> indices;
    if (fits_in_int64(scaled)) {
        std::vector<std::int64_t> native;
        native.reserve(scaled.size());
        for (const auto& x : scaled) native.push_back(x.get_si());
        indices = longest_convex_indices(native);
    } else {
        indices = longest_convex_indices(scaled);
    }
    RealSet witness = subset(b, indices);
    return OracleResult{witness.size(), std::move(witness), true};
}

OracleResult lcs_convex_bruteforce(const RealSet& b, std::size_t guard) {
    if (b.empty()) {
        throw Error(ErrorKind::invalid_input, "lcs_convex_bruteforce of an empty set");
    }
    if (b.size() > guard || b.size() > 30) {
        throw Error(ErrorKind::too_large, "brute force limited to " + std::to_string(guard) +
                                              " elements, got " + std::to_string(b.size()));
    }
    const std::size_t m = b.size();
    std::vector<std::size_t> best;
    std::vector<std::size_t> indices;
    std::vector<ExactScalar> values;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) < best.size()) {
            continue;
        }
        indices.clear();
        values.clear();
        for (std::size_t t = 0; t < m; ++t) {
            if (mask >> t & 1u) {
                indices.push_back(t);
                values.push_back(b[t]);
            }
        }
        if (!is_convex(values)) {
            continue;
        }
        if (indices.size() > best.size() || indices < best) {
            best = indices;
        }
    }
    RealSet witness = subset(b, best);
    return OracleResult{witness.size(), std::move(witness), true};
}

OracleResult max_convex_matching(const RealSet& a, std::size_t limit, unsigned threads) {
    check_matching_input(a, limit);
    const auto pairs = candidate_pairs(a);

    std::size_t best = 0;
    std::vector<IndexPair> witness;
    if (threads <= 1 || pairs.size() < 2) {
        MatchingSearch search(pairs, a.size(), true);
        search.run_from_root();
        best = search.best();
        witness = search.witness();
    } else {
        // Each first pair roots an independent subtree; merging by (size desc,
        // witness asc) reproduces the sequential answer exactly.
        std::atomic<std::size_t> next{0};
        std::mutex merge_mutex;
        auto worker = [&] {
            for (std::size_t p = next++; p < pairs.size(); p = next++) {
                MatchingSearch search(pairs, a.size(), true);
                search.run_from(p);
                std::lock_guard lock(merge_mutex);
                if (search.best() > best || (search.best() == best && search.witness() < witness)) {
                    best = search.best();
                    witness = search.witness();
                }
            }
        };
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    return OracleResult{best, Matching(a.size(), std::move(witness)), true};
}

void for_each_convex_matching(const RealSet& a, const std::function<void(const Matching&)>& visit,
                              std::size_t limit) {
    check_matching_input(a, limit);
    const auto pairs = candidate_pairs(a);
    MatchingSearch search(pairs, a.size(), false, [&](const std::vector<IndexPair>& current) {
        visit(Matching(a.size(), current));
    });
    search.run_from_root();
}

OracleResult max_weakly_convex_no4ap(std::int64_t n) {
    if (n <= 0) {
        return OracleResult{0, RealSet{}, true};
    }
    if (n == 1) {
        return OracleResult{1, RealSet::from_integers(std::vector<std::int64_t>{1}), true};
    }
    const auto size = static_cast<std::size_t>(n) + 1;
    // extra[(a * size + b) * 2 + (run - 1)]: most elements appendable after a < b,
    // where run counts how many equal gaps end at b (1 or 2).
    std::vector<std::int32_t> extra(size * size * 2, 0);
    auto at = [&](std::int64_t a, std::int64_t b, int run) -> std::int32_t& {
        return extra[(static_cast<std::size_t>(a) * size + static_cast<std::size_t>(b)) * 2 +
                     static_cast<std::size_t>(run - 1)];
    };
    // suffix[c] = max over c' >= c of extra(b, c', 1), for the current b
    std::vector<std::int32_t> suffix(size + 1, 0);
    std::vector<bool> suffix_valid(size + 1, false);
    for (std::int64_t b = n; b >= 2; --b) {
        std::fill(suffix_valid.begin(), suffix_valid.end(), false);
        for (std::int64_t c = n; c > b; --c) {
            const auto cu = static_cast<std::size_t>(c);
            suffix[cu] = at(b, c, 1);
            if (suffix_valid[cu + 1]) suffix[cu] = std::max(suffix[cu], suffix[cu + 1]);
            suffix_valid[cu] = true;
        }
        for (std::int64_t a = 1; a < b; ++a) {
            const std::int64_t gap = b - a;
            const std::int64_t equal = b + gap;
            const std::int64_t larger = equal + 1;
            for (int run = 1; run <= 2; ++run) {
                std::int32_t best = 0;
                if (run == 1 && equal <= n) best = std::max(best, 1 + at(b, equal, 2));
                if (larger <= n) best = std::max(best, 1 + suffix[static_cast<std::size_t>(larger)]);
                at(a, b, run) = best;
            }
        }
    }

    std::int32_t best = 0;
    std::int64_t first = 1, second = 2;
    for (std::int64_t a = 1; a <= n; ++a) {
        for (std::int64_t b = a + 1; b <= n; ++b) {
            if (2 + at(a, b, 1) > best) {
                best = 2 + at(a, b, 1);
                first = a;
                second = b;
            }
        }
    }
    std::vector<std::int64_t> out{first, second};
    int run = 1;
    for (std::int32_t remaining = best - 2; remaining > 0; --remaining) {
        const std::int64_t a = out[out.size() - 2];
        const std::int64_t b = out.back();
        const std::int64_t gap = b - a;
        for (std::int64_t c = b + gap; c <= n; ++c) {
            const bool same = (c - b == gap);
            if (same && run == 2) continue;
            const int next_run = same ? run + 1 : 1;
            if (1 + at(b, c, next_run) == remaining) {
                out.push_back(c);
                run = next_run;
                break;
            }
        }
    }
    return OracleResult{out.size(), RealSet::from_integers(out), true};
}

EnumerationSummary enumerate_convex_subsets(const RealSet& b, std::size_t size_cap,
                                            std::size_t count_cap,
                                            const std::function<void(const RealSet&)>& sink) {
    EnumerationSummary summary;
    std::vector<std::size_t> seq;
    bool stop = false;

    std::function<void()> dfs = [&] {
        if (seq.size() >= 3) {
            if (summary.yielded == count_cap) {
                summary.truncated = true;
                stop = true;
                return;
            }
            sink(subset(b, seq));
            ++summary.yielded;
        }
        if (seq.size() >= size_cap) {
            return;
        }
        const std::size_t last = seq.back();
        for (std::size_t t = last + 1; t < b.size() && !stop; ++t) {
            if (seq.size() >= 2) {
                const std::size_t prev = seq[seq.size() - 2];
                if (!(b[t] - b[last] > b[last] - b[prev])) {
                    continue;
                }
            }
            seq.push_back(t);
            dfs();
            seq.pop_back();
        }
    };

    if (size_cap < 3) {
        return summary;
    }
    for (std::size_t s = 0; s < b.size() && !stop; ++s) {
        seq.assign(1, s);
        dfs();
    }
    return summary;
}

} // namespace diffconvex
