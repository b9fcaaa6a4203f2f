// SPDX-License-Identifier: Apache-2.0

#include "diffconvex/constructions.hpp"

#include <string>

namespace diffconvex {

namespace {

ExactScalar integer(std::int64_t v) { return ExactScalar(v); }

void require_convex(const RealSet& a, const char* what) {
    if (!is_convex(a)) {
        throw Error(ErrorKind::invalid_input, std::string(what) + " requires a convex set");
    }
}

} // namespace

Thm1Params Thm1Params::make(std::int64_t n, bool strict) {
    if (strict && (n < 1000 || n % 100 != 0)) {
        throw Error(ErrorKind::invalid_params,
                    "strict mode needs n a multiple of 100 with n >= 1000, got " +
                        std::to_string(n));
    }
    if (n < 100) {
        throw Error(ErrorKind::invalid_params, "n must be at least 100, got " + std::to_string(n));
    }
    Thm1Params p;
    p.n = n;
    p.strict = strict;
    const mpz_class nz(static_cast<long>(n));
    p.c1 = ExactScalar(mpz_class(75), integer_power(nz, 2));
    p.c2 = ExactScalar(mpz_class(1), integer_power(nz, 5));
    p.k_min = (9 * n + 999) / 1000;
    p.k_max = n / 100;
    p.i_max = 99 * n / 100;
    if (p.k_min > p.k_max) {
        throw Error(ErrorKind::invalid_params,
                    "empty block range [ceil(0.009n), floor(0.01n)] for n = " + std::to_string(n));
    }
    return p;
}

ExactScalar thm1_element(const Thm1Params& p, std::int64_t i) {
    const ExactScalar x = integer(i);
    return x + p.c1 * x * x + p.c2 * x * x * x;
}

ExactScalar thm1_difference(const Thm1Params& p, std::int64_t i, std::int64_t k) {
    const ExactScalar ki = integer(k);
    const ExactScalar ii = integer(i);
    return ki + p.c1 * (integer(2) * ki * ii + ki * ki) +
           p.c2 * (integer(3) * ii * ii * ki + integer(3) * ii * ki * ki + ki * ki * ki);
}

RealSet thm1_set(std::int64_t n, bool strict) {
    const Thm1Params p = Thm1Params::make(n, strict);
    std::vector<ExactScalar> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i) {
        out.push_back(thm1_element(p, i));
    }
    return RealSet(std::move(out));
}

DifferenceBlock thm1_block(std::int64_t n, std::int64_t k) {
    const Thm1Params p = Thm1Params::make(n, false);
    if (k < p.k_min || k > p.k_max) {
        throw Error(ErrorKind::invalid_params,
                    "block index " + std::to_string(k) + " outside [" + std::to_string(p.k_min) +
                        ", " + std::to_string(p.k_max) + "]");
    }
    std::vector<ExactScalar> values;
    values.reserve(static_cast<std::size_t>(p.i_max));
    for (std::int64_t i = 1; i <= p.i_max; ++i) {
        values.push_back(thm1_difference(p, i, k));
    }
    return DifferenceBlock{k, RealSet(std::move(values)), 1};
}

GluePairResult glue_pair(const RealSet& a, const RealSet& b) {
    require_convex(a, "glue_pair");
    require_convex(b, "glue_pair");
    const std::size_t n = a.size();
    const std::size_t m = b.size();

    std::optional<Splice> best;
    std::size_t best_size = 0;
    std::size_t i = 0; // count of b elements <= a_j, i.e. the 1-based index of the last one
    for (std::size_t j = 1; j < n; ++j) {
        while (i < m && b.nth(i + 1) <= a.nth(j)) {
            ++i;
        }
        if (i == 0 || i >= m || !(a.nth(j + 1) <= b.nth(i + 1))) {
            continue;
        }
        const std::size_t size = j + (m - i);
        if (!best || size > best_size || (size == best_size && i < best->i)) {
            best = Splice{i, j};
            best_size = size;
        }
    }
    if (!best) {
        throw Error(ErrorKind::no_splice, "no b_i <= a_j < a_{j+1} <= b_{i+1} interleaving");
    }

    std::vector<ExactScalar> out(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(best->j));
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(best->i), b.end());
    return GluePairResult{RealSet(std::move(out)), *best};
}

GlueResult glue_chain(std::int64_t n, bool strict) {
    GlueResult result;
    result.params = Thm1Params::make(n, strict);
    const auto& p = result.params;
    result.set = thm1_block(n, p.k_min).values;
    for (std::int64_t k = p.k_min + 1; k <= p.k_max; ++k) {
        auto glued = glue_pair(result.set, thm1_block(n, k).values);
        result.trace.splices.push_back(SpliceRecord{k, glued.splice.j, glued.splice.i});
        result.set = std::move(glued.set);
    }
    return result;
}

Matching thm2_matching(const RealSet& a) {
    require_convex(a, "thm2_matching");
    const auto n = static_cast<std::int64_t>(a.size());
    const std::int64_t k = ceil_sqrt(n);
    if (k + 1 + k * (k + 1) / 2 > n) {
        throw Error(ErrorKind::insufficient_n,
                    "k + 1 + k(k+1)/2 = " + std::to_string(k + 1 + k * (k + 1) / 2) +
                        " exceeds n = " + std::to_string(n));
    }
    std::vector<IndexPair> pairs;
    pairs.reserve(static_cast<std::size_t>(k));
    for (std::int64_t i = 1; i <= k; ++i) {
        pairs.push_back(IndexPair{static_cast<std::size_t>(k + 1 - i),
                                  static_cast<std::size_t>(k + 1 + i * (i + 1) / 2)});
    }
    return Matching(a.size(), std::move(pairs));
}

RealSet thm3_set(std::int64_t n) {
    if (n < 2) {
        throw Error(ErrorKind::invalid_params, "thm3_set needs n >= 2");
    }
    const mpz_class base(static_cast<long>(2 * n));
    std::vector<mpz_class> powers(static_cast<std::size_t>(n) + 1);
    powers[0] = 1;
    for (std::size_t e = 1; e < powers.size(); ++e) {
        powers[e] = powers[e - 1] * base;
    }
    std::vector<ExactScalar> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t j = 1; j <= n; ++j) {
        mpz_class value = 0;
        for (std::int64_t t = 0; t < j; ++t) {
            value += mpz_class(static_cast<long>(j - t)) * powers[static_cast<std::size_t>(n - t)];
        }
        out.emplace_back(value);
    }
    return RealSet(std::move(out));
}

std::optional<BlockPosition> thm3_block_of(std::int64_t n, const ExactScalar& x) {
    if (n < 2 || !x.is_integer() || x.sign() <= 0) {
        return std::nullopt;
    }
    const mpz_class base(static_cast<long>(2 * n));
    // digits[p] is the coefficient of (2n)^p
    std::vector<std::int64_t> digits;
    mpz_class rest = x.numerator();
    while (rest > 0) {
        mpz_class digit = rest % base;
        digits.push_back(digit.get_si());
        rest /= base;
    }
    if (digits.size() != static_cast<std::size_t>(n) + 1) {
        return std::nullopt;
    }
    const std::int64_t k = digits[static_cast<std::size_t>(n)];
    if (k < 1 || k > n - 1) {
        return std::nullopt;
    }
    std::int64_t run = 0;
    for (std::int64_t pos = n; pos >= 0 && digits[static_cast<std::size_t>(pos)] == k; --pos) {
        ++run;
    }
    const std::int64_t j = run - 1;
    if (j < 1 || j + k > n) {
        return std::nullopt;
    }
    // Expected pattern: k at positions n..n-j, then k-1, ..., 1, then zeros.
    for (std::int64_t pos = n; pos >= 0; --pos) {
        const std::int64_t depth = n - pos; // 0 at the top digit
        std::int64_t expected = 0;
        if (depth <= j) {
            expected = k;
        } else if (depth - j < k) {
            expected = k - (depth - j);
        }
        if (digits[static_cast<std::size_t>(pos)] != expected) {
            return std::nullopt;
        }
    }
    return BlockPosition{k, j};
}

Matching thm4_matching(const RealSet& a) {
    if (a.size() < 2) {
        throw Error(ErrorKind::invalid_params, "thm4_matching needs at least two elements");
    }
    require_convex(a, "thm4_matching");
    const std::size_t half = a.size() / 2;
    std::vector<IndexPair> pairs;
    pairs.reserve(half);
    for (std::size_t t = 1; t <= half; ++t) {
        pairs.push_back(IndexPair{t, half + t});
    }
    return Matching(a.size(), std::move(pairs));
}

RealSet squares_set(std::int64_t n) {
    if (n < 1) {
        throw Error(ErrorKind::invalid_params, "squares_set needs n >= 1");
    }
    std::vector<ExactScalar> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i) {
        out.emplace_back(i * i);
    }
    return RealSet(std::move(out));
}

} // namespace diffconvex
