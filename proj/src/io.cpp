// SPDX-License-Identifier: Apache-2.0

#include "diffconvex/io.hpp"

#include <fstream>

namespace diffconvex {

using nlohmann::json;

json to_json(const ExactScalar& x) {
    return json{{"num", x.num_string()}, {"den", x.den_string()}};
}

json to_json(const RealSet& s) {
    json elements = json::array();
    for (const auto& x : s) {
        elements.push_back(to_json(x));
    }
    return json{{"elements", std::move(elements)}};
}

json to_json(const Matching& m) {
    json pairs = json::array();
    for (const auto& p : m.pairs()) {
        pairs.push_back(json::array({p.lo, p.hi}));
    }
    return json{{"base_size", m.base_size()}, {"pairs", std::move(pairs)}};
}

json to_json(const GlueTrace& t) {
    json splices = json::array();
    for (const auto& s : t.splices) {
        splices.push_back(json{{"k", s.k}, {"j", s.j}, {"i", s.i}});
    }
    return json{{"splices", std::move(splices)}};
}

json to_json(const OracleResult& r) {
    json witness = std::visit([](const auto& w) { return to_json(w); }, r.witness);
    return json{{"value", r.value}, {"exhaustive", r.exhaustive}, {"witness", std::move(witness)}};
}

json to_json(const Report& r) {
    json out{{"claim_id", r.claim_id},
             {"params", r.params},
             {"passed", r.passed},
             {"counts", r.counts}};
    out["counterexample"] = r.counterexample ? *r.counterexample : json(nullptr);
    return out;
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorKind::invalid_input, "malformed JSON: " + what);
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        malformed(std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

std::size_t index_value(const json& j) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        malformed("expected a nonnegative integer, got " + j.dump());
    }
    return j.get<std::size_t>();
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::invalid_input, "cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::invalid_input, "'" + path + "': " + e.what());
    }
}

} // namespace

ExactScalar scalar_from_json(const json& j) {
    const json& num = field(j, "num");
    const json& den = field(j, "den");
    if (!num.is_string() || !den.is_string()) {
        malformed("num and den must be decimal strings");
    }
    ExactScalar x = ExactScalar::from_strings(num.get<std::string>(), den.get<std::string>());
    if (den.get<std::string>().front() == '-') {
        malformed("denominator must be positive");
    }
    return x;
}

RealSet real_set_from_json(const json& j) {
    const json& elements = field(j, "elements");
    if (!elements.is_array()) {
        malformed("'elements' must be an array");
    }
    std::vector<ExactScalar> values;
    values.reserve(elements.size());
    for (const auto& e : elements) {
        values.push_back(scalar_from_json(e));
    }
    return RealSet(std::move(values));
}

Matching matching_from_json(const json& j) {
    const std::size_t base_size = index_value(field(j, "base_size"));
    const json& pairs = field(j, "pairs");
    if (!pairs.is_array()) {
        malformed("'pairs' must be an array");
    }
    std::vector<IndexPair> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2) {
            malformed("each pair must be [lo, hi]");
        }
        out.push_back(IndexPair{index_value(p[0]), index_value(p[1])});
    }
    return Matching(base_size, std::move(out));
}

RealSet read_real_set_file(const std::string& path) { return real_set_from_json(parse_file(path)); }

Matching read_matching_file(const std::string& path) { return matching_from_json(parse_file(path)); }

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::invalid_input, "cannot write '" + path + "'");
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw Error(ErrorKind::invalid_input, "write to '" + path + "' failed");
    }
}

} // namespace diffconvex
