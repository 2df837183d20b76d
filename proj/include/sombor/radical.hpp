#pragma once

// Exact arithmetic on finite sums  q1*sqrt(r1) + ... + qk*sqrt(rk)  with
// rational coefficients and distinct square-free radicands.
//
// Every value has exactly one canonical term list, so structural equality is
// numeric equality. Ordering is decided by interval refinement: square roots
// of distinct square-free integers are linearly independent over Q, hence a
// nonzero canonical sum is a nonzero real and the refinement terminates.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sombor {

using Rational = mpq_class;
using Integer = mpz_class;

enum class Ordering { Less, Equal, Greater };

/// n = square * radicand with radicand square-free; returns {root, radicand}
/// where root*root == square.
std::pair<std::uint64_t, std::uint64_t> square_free_split(std::uint64_t n);

/// Closed rational interval [lower, upper].
struct RationalInterval {
    Rational lower;
    Rational upper;
};

class RadicalSum {
public:
    struct Term {
        std::uint64_t radicand;
        Rational coefficient;

        bool operator==(const Term&) const = default;
    };

    RadicalSum() = default;

    static RadicalSum from_rational(Rational q);
    /// q * sqrt(n); n need not be square-free.
    static RadicalSum from_term(Rational q, std::uint64_t n);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient on sqrt(radicand); zero if absent. radicand must be square-free.
    Rational coefficient(std::uint64_t radicand) const;

    RadicalSum& operator+=(const RadicalSum& other);
    RadicalSum& operator-=(const RadicalSum& other);
    RadicalSum& operator*=(const Rational& q);

    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
    friend RadicalSum operator*(RadicalSum a, const Rational& q) { return a *= q; }
    friend RadicalSum operator*(const Rational& q, RadicalSum a) { return a *= q; }
    RadicalSum operator-() const;

    bool operator==(const RadicalSum& other) const = default;

    /// Rigorous enclosure using `bits` fractional bits per square root.
    RationalInterval enclose(unsigned bits) const;

    /// Canonical text, e.g. "2*sqrt(2) + 3*sqrt(5) + 10".
    std::string to_string() const;
    /// Accepts the canonical grammar (and non-canonical variants such as
    /// sqrt(8) or repeated radicands). Throws std::invalid_argument.
    static RadicalSum parse(std::string_view text);

private:
    void add_term(std::uint64_t radicand, Rational q);

    std::vector<Term> terms_;  // strictly increasing radicand, nonzero coefficients
};

/// s*sqrt(r) with n = s^2 r. Throws std::domain_error for n < 1.
RadicalSum sqrt_integer(std::int64_t n);

inline RadicalSum add(const RadicalSum& a, const RadicalSum& b) { return a + b; }
inline RadicalSum scale(const RadicalSum& a, const Rational& q) { return a * q; }

Ordering compare(const RadicalSum& a, const RadicalSum& b);
int sign(const RadicalSum& a);

/// Rounded to `digits` places after the point; absolute error < 10^-digits.
std::string to_decimal(const RadicalSum& a, unsigned digits);

bool is_positive_integer(const RadicalSum& a);

std::string to_string(Ordering o);

}  // namespace sombor
