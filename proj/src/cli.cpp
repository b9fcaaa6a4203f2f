// SPDX-License-Identifier: Apache-2.0

#include "diffconvex/cli.hpp"

#include <algorithm>
#include <fstream>

#include "CLI11.hpp"

#include "diffconvex/claims.hpp"
#include "diffconvex/constructions.hpp"
#include "diffconvex/io.hpp"
#include "diffconvex/oracles.hpp"

namespace diffconvex::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string kind;
    std::int64_t n = 0;
    bool strict = false;
    std::uint64_t seed = 0;
    std::string in;
    std::string out;
    std::string trace;
    std::size_t limit = 0;
    unsigned threads = 1;
    std::size_t sample_cap = kDefaultSampleCap;
    std::string family;
    std::vector<std::int64_t> n_list;
    std::string csv;
};

class Invalid : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << '\n';
    } else {
        write_json_file(path, j);
    }
}

int do_construct(const Options& o, std::ostream& err) {
    RealSet set;
    if (o.kind == "thm1") {
        set = thm1_set(o.n, o.strict);
    } else if (o.kind == "thm3") {
        set = thm3_set(o.n);
    } else if (o.kind == "squares") {
        set = squares_set(o.n);
    } else {
        if (o.n < 1) throw Invalid("--n must be positive");
        set = gen_convex_random(static_cast<std::size_t>(o.n), o.seed);
    }
    write_json_file(o.out, to_json(set));
    err << "construct " << o.kind << ": " << set.size() << " elements -> " << o.out << '\n';
    return kExitOk;
}

int do_glue(const Options& o, std::ostream& err) {
    GlueResult glued;
    try {
        glued = glue_chain(o.n, o.strict);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::no_splice) throw;
        err << "glue: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
    write_json_file(o.out, to_json(glued.set));
    if (!o.trace.empty()) {
        write_json_file(o.trace, to_json(glued.trace));
    }
    err << "glue n=" << o.n << ": blocks " << glued.params.k_min << ".." << glued.params.k_max
        << ", |S| = " << glued.set.size() << " -> " << o.out << '\n';
    return kExitOk;
}

int do_match(const Options& o, std::ostream& err) {
    const RealSet a = read_real_set_file(o.in);
    const Matching m = o.kind == "thm2" ? thm2_matching(a) : thm4_matching(a);
    write_json_file(o.out, to_json(m));
    err << "match " << o.kind << ": " << m.size() << " pairs on " << a.size() << " elements -> "
        << o.out << '\n';
    return kExitOk;
}

int do_oracle(const Options& o, std::ostream& out, std::ostream& err) {
    OracleResult result;
    if (o.kind == "no4ap") {
        if (!o.in.empty()) throw Invalid("oracle no4ap takes --n, not --in");
        if (o.n < 1) throw Invalid("oracle no4ap needs --n N with N >= 1");
        result = max_weakly_convex_no4ap(o.n);
    } else {
        if (o.in.empty()) throw Invalid("oracle " + o.kind + " needs --in PATH");
        const RealSet b = read_real_set_file(o.in);
        if (o.kind == "lcs") {
            result = lcs_convex(b);
        } else {
            const std::size_t limit = o.limit ? o.limit : kMatchingGuard;
            result = max_convex_matching(b, limit, std::max(1u, o.threads));
        }
    }
    emit(to_json(result), o.out, out);
    err << "oracle " << o.kind << ": value " << result.value
        << (result.exhaustive ? " (exhaustive)" : "") << '\n';
    return kExitOk;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
    Report report;
    if (o.kind == "claim21") {
        report = verify_claim_2_1(o.n, o.strict);
    } else if (o.kind == "claim22") {
        report = verify_claim_2_2(o.n, o.strict);
    } else if (o.kind == "thm1size") {
        report = verify_thm1_size(o.n, o.strict);
    } else {
        report = verify_claims_3(o.n, o.sample_cap);
    }
    emit(to_json(report), o.out, out);
    err << "verify " << o.kind << " n=" << o.n << ": " << (report.passed ? "passed" : "FAILED")
        << '\n';
    return report.passed ? kExitOk : kExitVerificationFailed;
}

int do_bench(const Options& o, std::ostream& err) {
    const auto family = parse_growth_family(o.family);
    if (!family) throw Invalid("unknown family '" + o.family + "'");
    GrowthOptions options;
    if (o.limit) options.matching_limit = o.limit;
    options.threads = std::max(1u, o.threads);
    const auto rows = growth_table(*family, o.n_list, options);
    std::ofstream csv(o.csv);
    if (!csv) throw Invalid("cannot write '" + o.csv + "'");
    write_growth_csv(csv, rows);
    err << "bench growth " << o.family << ": " << rows.size() << " rows -> " << o.csv << '\n';
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Convex subsets of difference sets: constructions, oracles and claim checks",
                 "diffconvex"};
    app.require_subcommand(1);
    Options o;

    auto* construct = app.add_subcommand("construct", "Build a convex set");
    construct->add_option("kind", o.kind)->required()->check(
        CLI::IsMember({"thm1", "thm3", "squares", "random"}));
    construct->add_option("--n", o.n)->required();
    construct->add_flag("--strict", o.strict, "n must be a multiple of 100, at least 1000");
    construct->add_option("--seed", o.seed);
    construct->add_option("--out", o.out)->required();

    auto* glue = app.add_subcommand("glue", "Glue the difference blocks into one convex set");
    glue->add_option("--n", o.n)->required();
    glue->add_flag("--strict", o.strict);
    glue->add_option("--out", o.out)->required();
    glue->add_option("--trace", o.trace);

    auto* match = app.add_subcommand("match", "Build a matching on a convex set");
    match->add_option("kind", o.kind)->required()->check(CLI::IsMember({"thm2", "thm4"}));
    match->add_option("--in", o.in)->required();
    match->add_option("--out", o.out)->required();

    auto* oracle = app.add_subcommand("oracle", "Exact extremal searches");
    oracle->add_option("kind", o.kind)->required()->check(CLI::IsMember({"lcs", "cm", "no4ap"}));
    auto* in_opt = oracle->add_option("--in", o.in);
    oracle->add_option("--n", o.n)->excludes(in_opt);
    oracle->add_option("--limit", o.limit, "matching search size guard (default 12)");
    oracle->add_option("--threads", o.threads, "threads for the matching search");
    oracle->add_option("--out", o.out);

    auto* verify = app.add_subcommand("verify", "Check a claim and print a JSON report");
    verify->add_option("kind", o.kind)->required()->check(
        CLI::IsMember({"claim21", "claim22", "thm1size", "claims3"}));
    verify->add_option("--n", o.n)->required();
    verify->add_flag("--strict", o.strict);
    verify->add_option("--sample-cap", o.sample_cap);
    verify->add_option("--out", o.out);

    auto* bench = app.add_subcommand("bench", "Growth tables as CSV");
    bench->add_option("kind", o.kind)->required()->check(CLI::IsMember({"growth"}));
    bench->add_option("--family", o.family)->required()->check(
        CLI::IsMember({"thm1_S_size", "thm3_cm", "squares_C", "no4ap_max"}));
    bench->add_option("--n-list", o.n_list)->required()->delimiter(',');
    bench->add_option("--csv", o.csv)->required();
    bench->add_option("--limit", o.limit);
    bench->add_option("--threads", o.threads);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        if (construct->parsed()) return do_construct(o, err);
        if (glue->parsed()) return do_glue(o, err);
        if (match->parsed()) return do_match(o, err);
        if (oracle->parsed()) return do_oracle(o, out, err);
        if (verify->parsed()) return do_verify(o, out, err);
        return do_bench(o, err);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    } catch (const Invalid& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitInvalid;
}

} // namespace diffconvex::cli
