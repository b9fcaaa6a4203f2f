// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "json.hpp"

#include "diffconvex/claims.hpp"
#include "diffconvex/constructions.hpp"
#include "diffconvex/oracles.hpp"
#include "diffconvex/real_set.hpp"

namespace diffconvex {

// JSON forms. Numbers are decimal strings so arbitrarily large values survive:
//   scalar   {"num": "-3", "den": "4"}
//   set      {"elements": [scalar, ...]}
//   matching {"base_size": N, "pairs": [[lo, hi], ...]}        (1-based)
//   trace    {"splices": [{"k": K, "j": J, "i": I}, ...]}
//   oracle   {"value": N, "exhaustive": bool, "witness": set | matching}

nlohmann::json to_json(const ExactScalar& x);
nlohmann::json to_json(const RealSet& s);
nlohmann::json to_json(const Matching& m);
nlohmann::json to_json(const GlueTrace& t);
nlohmann::json to_json(const OracleResult& r);
nlohmann::json to_json(const Report& r);

/// Throws Error(invalid_input) on malformed input; denominators are reduced.
ExactScalar scalar_from_json(const nlohmann::json& j);
/// Throws Error(invalid_input), including when elements are not strictly increasing.
RealSet real_set_from_json(const nlohmann::json& j);
/// Throws Error(invalid_input) on malformed JSON, Error(invalid_matching) on bad pairs.
Matching matching_from_json(const nlohmann::json& j);

RealSet read_real_set_file(const std::string& path);
Matching read_matching_file(const std::string& path);
/// Writes `j.dump(2)` plus a trailing newline.
void write_json_file(const std::string& path, const nlohmann::json& j);

} // namespace diffconvex
