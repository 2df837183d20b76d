#include "sombor/radical.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sombor {

std::pair<std::uint64_t, std::uint64_t> square_free_split(std::uint64_t n) {
    if (n == 0) {
        return {0, 0};
    }
    std::uint64_t root = 1;
    std::uint64_t radicand = 1;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p <= rest / p; ++p) {
        unsigned exponent = 0;
        while (rest % p == 0) {
            rest /= p;
            ++exponent;
        }
        for (unsigned i = 0; i < exponent / 2; ++i) {
            root *= p;
        }
        if (exponent % 2 == 1) {
            radicand *= p;
        }
    }
    return {root, radicand * rest};
}

RadicalSum RadicalSum::from_rational(Rational q) {
    RadicalSum s;
    s.add_term(1, q);
    return s;
}

RadicalSum RadicalSum::from_term(Rational q, std::uint64_t n) {
    RadicalSum s;
    if (n == 0) {
        return s;
    }
    q.canonicalize();
    auto [root, radicand] = square_free_split(n);
    q *= Integer(static_cast<unsigned long>(root));
    s.add_term(radicand, q);
    return s;
}

Rational RadicalSum::coefficient(std::uint64_t radicand) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                               [](const Term& t, std::uint64_t r) { return t.radicand < r; });
    if (it != terms_.end() && it->radicand == radicand) {
        return it->coefficient;
    }
    return Rational(0);
}

void RadicalSum::add_term(std::uint64_t radicand, Rational q) {
    q.canonicalize();
    if (q == 0) {
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                               [](const Term& t, std::uint64_t r) { return t.radicand < r; });
    if (it != terms_.end() && it->radicand == radicand) {
        it->coefficient += q;
        if (it->coefficient == 0) {
            terms_.erase(it);
        }
    } else {
        terms_.insert(it, Term{radicand, std::move(q)});
    }
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
    if (terms_.empty()) {
        terms_ = other.terms_;
        return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->radicand < b->radicand)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->radicand < a->radicand) {
            merged.push_back(*b++);
        } else {
            Rational c = a->coefficient + b->coefficient;
            if (c != 0) {
                merged.push_back(Term{a->radicand, std::move(c)});
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& other) {
    return *this += -other;
}

RadicalSum& RadicalSum::operator*=(const Rational& factor) {
    Rational q = factor;
    q.canonicalize();
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.coefficient *= q;
    }
    return *this;
}

RadicalSum RadicalSum::operator-() const {
    RadicalSum out = *this;
    for (auto& t : out.terms_) {
        t.coefficient = -t.coefficient;
    }
    return out;
}

namespace {

// floor(sqrt(r) * 2^bits) and whether it is exact.
std::pair<Integer, bool> scaled_isqrt(std::uint64_t r, unsigned bits) {
    Integer n(static_cast<unsigned long>(r));
    n <<= 2 * bits;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return {root, root * root == n};
}

}  // namespace

RationalInterval RadicalSum::enclose(unsigned bits) const {
    RationalInterval out{Rational(0), Rational(0)};
    Integer denom(1);
    denom <<= bits;
    for (const auto& t : terms_) {
        if (t.radicand == 1) {
            out.lower += t.coefficient;
            out.upper += t.coefficient;
            continue;
        }
        auto [root, exact] = scaled_isqrt(t.radicand, bits);
        Rational lo(root, denom);
        Rational hi(exact ? root : Integer(root + 1), denom);
        lo.canonicalize();
        hi.canonicalize();
        if (t.coefficient > 0) {
            out.lower += t.coefficient * lo;
            out.upper += t.coefficient * hi;
        } else {
            out.lower += t.coefficient * hi;
            out.upper += t.coefficient * lo;
        }
    }
    return out;
}

int sign(const RadicalSum& a) {
    const auto& terms = a.terms();
    if (terms.empty()) {
        return 0;
    }
    if (std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.coefficient > 0; })) {
        return 1;
    }
    if (std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.coefficient < 0; })) {
        return -1;
    }
    for (unsigned bits = 64;; bits *= 2) {
        RationalInterval iv = a.enclose(bits);
        if (iv.lower > 0) {
            return 1;
        }
        if (iv.upper < 0) {
            return -1;
        }
    }
}

Ordering compare(const RadicalSum& a, const RadicalSum& b) {
    if (a == b) {
        return Ordering::Equal;
    }
    return sign(a - b) < 0 ? Ordering::Less : Ordering::Greater;
}

RadicalSum sqrt_integer(std::int64_t n) {
    if (n < 1) {
        throw std::domain_error("sqrt_integer: argument must be a positive integer, got " +
                                std::to_string(n));
    }
    return RadicalSum::from_term(Rational(1), static_cast<std::uint64_t>(n));
}

std::string to_decimal(const RadicalSum& a, unsigned digits) {
    Integer ten_pow(1);
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, digits);
    Integer tolerance = ten_pow * 10;

    RationalInterval iv{};
    for (unsigned bits = 64;; bits *= 2) {
        iv = a.enclose(bits);
        if ((iv.upper - iv.lower) * tolerance < 1) {
            break;
        }
    }
    Rational mid = (iv.lower + iv.upper) / 2;
    bool negative = mid < 0;
    Rational scaled = abs(mid) * ten_pow + Rational(1, 2);
    Integer rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());

    std::string body = rounded.get_str();
    if (body.size() <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    std::string out;
    if (negative && rounded != 0) {
        out.push_back('-');
    }
    out += body.substr(0, body.size() - digits);
    if (digits > 0) {
        out.push_back('.');
        out += body.substr(body.size() - digits);
    }
    return out;
}

bool is_positive_integer(const RadicalSum& a) {
    const auto& terms = a.terms();
    return terms.size() == 1 && terms.front().radicand == 1 &&
           terms.front().coefficient.get_den() == 1 && terms.front().coefficient > 0;
}

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "Less";
        case Ordering::Equal: return "Equal";
        case Ordering::Greater: return "Greater";
    }
    return "?";
}

// Rendering: irrational terms by increasing radicand, the rational part last.
std::string RadicalSum::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::vector<const Term*> order;
    for (const auto& t : terms_) {
        if (t.radicand != 1) {
            order.push_back(&t);
        }
    }
    if (terms_.front().radicand == 1) {
        order.push_back(&terms_.front());
    }

    std::string out;
    bool first = true;
    for (const Term* t : order) {
        Rational magnitude = abs(t->coefficient);
        bool negative = t->coefficient < 0;
        if (first) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (t->radicand == 1) {
            out += magnitude.get_str();
        } else {
            if (magnitude != 1) {
                out += magnitude.get_str() + "*";
            }
            out += "sqrt(" + std::to_string(t->radicand) + ")";
        }
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RadicalSum parse_sum() {
        RadicalSum total;
        skip_ws();
        bool negative = consume('-');
        total += parse_term(negative);
        for (;;) {
            skip_ws();
            if (at_end()) {
                break;
            }
            if (consume('+')) {
                negative = false;
            } else if (consume('-')) {
                negative = true;
            } else {
                fail("expected '+' or '-'");
            }
            skip_ws();
            total += parse_term(negative);
        }
        return total;
    }

private:
    RadicalSum parse_term(bool negative) {
        skip_ws();
        Rational coefficient(1);
        if (text_.substr(pos_, 4) != "sqrt") {
            coefficient = parse_rational();
            skip_ws();
            if (!consume('*')) {
                return RadicalSum::from_rational(negative ? Rational(-coefficient) : coefficient);
            }
            skip_ws();
        }
        if (text_.substr(pos_, 5) != "sqrt(") {
            fail("expected sqrt(");
        }
        pos_ += 5;
        skip_ws();
        Integer radicand = parse_integer();
        skip_ws();
        if (!consume(')')) {
            fail("expected ')'");
        }
        if (radicand == 0 || !radicand.fits_ulong_p()) {
            fail("radicand out of range");
        }
        if (negative) {
            coefficient = -coefficient;
        }
        return RadicalSum::from_term(coefficient, radicand.get_ui());
    }

    Rational parse_rational() {
        Integer num = parse_integer();
        if (consume('/')) {
            Integer den = parse_integer();
            if (den == 0) {
                fail("zero denominator");
            }
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    Integer parse_integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    bool consume(char c) {
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool at_end() const { return pos_ >= text_.size(); }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("radical parse error at offset " + std::to_string(pos_) +
                                    ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RadicalSum RadicalSum::parse(std::string_view text) {
    return Parser(text).parse_sum();
}

}  // namespace sombor
