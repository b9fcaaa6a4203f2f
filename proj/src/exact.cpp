// SPDX-License-Identifier: Apache-2.0

#include "diffconvex/exact.hpp"

#include <cctype>

namespace diffconvex {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_input: return "InvalidInput";
    case ErrorKind::invalid_matching: return "InvalidMatching";
    case ErrorKind::invalid_params: return "InvalidParams";
    case ErrorKind::no_splice: return "NoSplice";
    case ErrorKind::insufficient_n: return "InsufficientN";
    case ErrorKind::too_large: return "TooLarge";
    }
    return "Unknown";
}

namespace {

mpz_class parse_decimal(std::string_view text) {
    std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
    if (text.size() == start) {
        throw Error(ErrorKind::invalid_input, "empty decimal integer");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw Error(ErrorKind::invalid_input,
                        "not a decimal integer: '" + std::string(text) + "'");
        }
    }
    return mpz_class(std::string(text), 10);
}

} // namespace

ExactScalar::ExactScalar(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw Error(ErrorKind::invalid_input, "zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

ExactScalar::ExactScalar(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) {
        throw Error(ErrorKind::invalid_input, "zero denominator");
    }
    q_.canonicalize();
}

ExactScalar ExactScalar::from_strings(std::string_view num, std::string_view den) {
    return ExactScalar(parse_decimal(num), parse_decimal(den));
}

ExactScalar ExactScalar::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return ExactScalar(parse_decimal(text));
    }
    return from_strings(text.substr(0, slash), text.substr(slash + 1));
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
    if (rhs.q_ == 0) {
        throw Error(ErrorKind::invalid_input, "division by zero");
    }
    q_ /= rhs.q_;
    return *this;
}

mpz_class integer_power(const mpz_class& base, unsigned long exponent) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

std::int64_t ceil_sqrt(std::int64_t n) {
    if (n <= 0) {
        return 0;
    }
    mpz_class root;
    mpz_class value(static_cast<long>(n));
    mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
    if (root * root < value) {
        root += 1;
    }
    return root.get_si();
}

} // namespace diffconvex
