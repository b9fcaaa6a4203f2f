// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diffconvex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalid = 2;

/*
 * Runs one command line (without the program name). Machine output goes to
 * `out` or to the --out/--csv file; diagnostics and summaries go to `err`.
 *
 *   construct {thm1|thm3|squares|random} --n N [--strict] [--seed S] --out PATH
 *   glue --n N [--strict] --out PATH [--trace PATH]
 *   match {thm2|thm4} --in PATH --out PATH
 *   oracle {lcs|cm|no4ap} [--in PATH | --n N] [--limit L] [--threads T] [--out PATH]
 *   verify {claim21|claim22|thm1size|claims3} --n N [--strict] [--sample-cap C] [--out PATH]
 *   bench growth --family F --n-list a,b,c --csv PATH [--limit L] [--threads T]
 *
 * Returns 0 on success, 1 when a verification report fails, 2 on bad input.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace diffconvex::cli
