// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "diffconvex/cli.hpp"
#include "diffconvex/constructions.hpp"
#include "diffconvex/io.hpp"
#include "test_support.hpp"

using namespace diffconvex;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

struct TempDir {
    std::filesystem::path path;
    TempDir() : path(std::filesystem::temp_directory_path() / "diffconvex_cli_test") {
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("construct writes sets") {
    TempDir dir;
    auto r = run({"construct", "thm3", "--n", "3", "--out", dir / "t3.json"});
    CHECK(r.code == 0);
    CHECK(read_real_set_file(dir / "t3.json") == testing::ints({216, 468, 726}));

    r = run({"construct", "thm1", "--n", "1000", "--strict", "--out", dir / "t1.json"});
    CHECK(r.code == 0);
    CHECK(read_real_set_file(dir / "t1.json") == thm1_set(1000));

    r = run({"construct", "random", "--n", "20", "--seed", "7", "--out", dir / "r.json"});
    CHECK(r.code == 0);
    CHECK(read_real_set_file(dir / "r.json") == gen_convex_random(20, 7));

    r = run({"construct", "thm1", "--n", "1050", "--strict", "--out", dir / "x.json"});
    CHECK(r.code == 2);
    CHECK(r.err.find("InvalidParams") != std::string::npos);
    CHECK_FALSE(std::filesystem::exists(dir / "x.json"));
}

TEST_CASE("outputs are byte-identical across runs") {
    TempDir dir;
    for (const char* name : {"a.json", "b.json"}) {
        CHECK(run({"construct", "squares", "--n", "12", "--out", dir / name}).code == 0);
    }
    CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));

    CHECK(run({"glue", "--n", "1000", "--out", dir / "g1.json", "--trace", dir / "t1.json"}).code == 0);
    CHECK(run({"glue", "--n", "1000", "--out", dir / "g2.json", "--trace", dir / "t2.json"}).code == 0);
    CHECK(slurp(dir / "g1.json") == slurp(dir / "g2.json"));
    CHECK(slurp(dir / "t1.json") == slurp(dir / "t2.json"));
}

TEST_CASE("glue writes the set and the trace") {
    TempDir dir;
    const auto r = run({"glue", "--n", "2000", "--out", dir / "s.json", "--trace", dir / "t.json"});
    CHECK(r.code == 0);
    const GlueResult expected = glue_chain(2000);
    CHECK(read_real_set_file(dir / "s.json") == expected.set);
    const json trace = json::parse(slurp(dir / "t.json"));
    CHECK(trace == to_json(expected.trace));
    CHECK(trace["splices"].size() == 2);
}

TEST_CASE("match reads a set and writes a matching") {
    TempDir dir;
    write_json_file(dir / "a.json", to_json(gen_convex_random(36, 2)));
    CHECK(run({"match", "thm2", "--in", dir / "a.json", "--out", dir / "m.json"}).code == 0);
    CHECK(read_matching_file(dir / "m.json").size() == 6);
    CHECK(run({"match", "thm4", "--in", dir / "a.json", "--out", dir / "m4.json"}).code == 0);
    CHECK(read_matching_file(dir / "m4.json").size() == 18);

    write_json_file(dir / "small.json", to_json(gen_convex_random(17, 2)));
    const auto r = run({"match", "thm2", "--in", dir / "small.json", "--out", dir / "m.json"});
    CHECK(r.code == 2);
    CHECK(r.err.find("InsufficientN") != std::string::npos);
}

TEST_CASE("oracle subcommand") {
    TempDir dir;
    write_json_file(dir / "sq.json", to_json(squares_set(4)));
    auto r = run({"oracle", "cm", "--in", dir / "sq.json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["value"] == 2);
    CHECK(j["exhaustive"] == true);

    r = run({"oracle", "lcs", "--in", dir / "sq.json", "--out", dir / "lcs.json"});
    CHECK(r.code == 0);
    CHECK(json::parse(slurp(dir / "lcs.json"))["value"] == 4);

    r = run({"oracle", "no4ap", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["value"] == 3);

    write_json_file(dir / "big.json", to_json(squares_set(13)));
    r = run({"oracle", "cm", "--in", dir / "big.json"});
    CHECK(r.code == 2);
    CHECK(r.err.find("TooLarge") != std::string::npos);

    CHECK(run({"oracle", "lcs"}).code == 2);
    CHECK(run({"oracle", "no4ap", "--in", dir / "sq.json"}).code == 2);
    CHECK(run({"oracle", "lcs", "--in", dir / "sq.json", "--n", "3"}).code == 2);
}

TEST_CASE("verify subcommand") {
    auto r = run({"verify", "claim22", "--n", "1000"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["claim_id"] == "claim22");
    CHECK(j["passed"] == true);
    CHECK(j["counterexample"].is_null());

    CHECK(run({"verify", "claims3", "--n", "4"}).code == 0);
    CHECK(run({"verify", "claims3", "--n", "12"}).code == 2);
}

TEST_CASE("bench subcommand") {
    TempDir dir;
    const auto r = run({"bench", "growth", "--family", "no4ap_max", "--n-list", "1,4,10", "--csv", dir / "g.csv"});
    CHECK(r.code == 0);
    const std::string csv = slurp(dir / "g.csv");
    CHECK(csv.rfind("family,n,value,exhaustive\nno4ap_max,1,1,true\nno4ap_max,4,3,true\n", 0) == 0);
    CHECK(run({"bench", "growth", "--family", "bogus", "--n-list", "1", "--csv", dir / "h.csv"}).code == 2);
}

TEST_CASE("malformed command lines") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"construct", "thm3"}).code == 2);
    CHECK(run({"construct", "cubes", "--n", "3", "--out", "x.json"}).code == 2);
    CHECK(run({"construct", "thm3", "--n", "three", "--out", "x.json"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
