// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace diffconvex {

enum class ErrorKind {
    invalid_input,
    invalid_matching,
    invalid_params,
    no_splice,
    insufficient_n,
    too_large,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the library; `kind()` tells callers
/// which contract was violated.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/*
 * Exact rational number in canonical form: the denominator is positive and
 * coprime to the numerator. Every arithmetic result is canonicalised by GMP,
 * so equality of values is equality of representations.
 */
class ExactScalar {
  public:
    ExactScalar() = default;
    ExactScalar(std::int64_t value) : q_(static_cast<long>(value)) {}
    explicit ExactScalar(const mpz_class& integer) : q_(integer) {}
    ExactScalar(const mpz_class& num, const mpz_class& den);
    explicit ExactScalar(mpq_class q);

    /// Parses decimal numerator and denominator strings, e.g. ("-3", "4").
    static ExactScalar from_strings(std::string_view num, std::string_view den);
    /// Parses "p" or "p/q".
    static ExactScalar parse(std::string_view text);

    const mpq_class& value() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    std::string num_string() const { return q_.get_num().get_str(10); }
    std::string den_string() const { return q_.get_den().get_str(10); }
    std::string to_string() const { return q_.get_str(10); }

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    ExactScalar& operator+=(const ExactScalar& rhs) { q_ += rhs.q_; return *this; }
    ExactScalar& operator-=(const ExactScalar& rhs) { q_ -= rhs.q_; return *this; }
    ExactScalar& operator*=(const ExactScalar& rhs) { q_ *= rhs.q_; return *this; }
    ExactScalar& operator/=(const ExactScalar& rhs);

    friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
    friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
    friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
    friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }
    ExactScalar operator-() const { return ExactScalar(mpq_class(-q_)); }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
        return os << x.to_string();
    }

  private:
    mpq_class q_;
};

/// base^exponent as an exact integer.
mpz_class integer_power(const mpz_class& base, unsigned long exponent);

/// Smallest k with k * k >= n, for n >= 0.
std::int64_t ceil_sqrt(std::int64_t n);

} // namespace diffconvex
