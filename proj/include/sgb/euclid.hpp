#pragma once

// Coefficient domains. A Euclidean domain R comes with a grading
// delta : R -> W used for division with remainder, and a refined injective
// grading hat_delta : R -> W' that picks canonical remainders and
// canonical associates. Both W and W' are encoded into the non-negative
// integers, so grades compare as plain integers.

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "sgb/errors.hpp"

namespace sgb {

class Grade {
public:
    Grade() = default;
    explicit Grade(mpz_class value) : value_(std::move(value)) {}
    explicit Grade(unsigned long value) : value_(value) {}

    const mpz_class& value() const noexcept { return value_; }

    friend bool operator==(const Grade& a, const Grade& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Grade& a, const Grade& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }
    friend std::ostream& operator<<(std::ostream& os, const Grade& g) { return os << g.value_; }

private:
    mpz_class value_;
};

template <class R>
struct QuoRem {
    R quotient;
    R remainder;
};

/// d = u*a + v*b, d a normalized greatest common divisor.
template <class R>
struct ExtGcd {
    R gcd;
    R u;
    R v;
};

// ---------------------------------------------------------------------------
// Integers: delta(z) = |z|, hat_delta(z) = 3|z| - sgn(z), so that
// 0 < 1 < -1 < 2 < -2 < ...

class Integer {
public:
    Integer() = default;
    Integer(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Integer(mpz_class value) : value_(std::move(value)) {}

    /// Optional sign followed by decimal digits.
    static Integer parse(std::string_view text) {
        std::size_t i = 0;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        if (i == text.size()) throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
        for (std::size_t j = i; j < text.size(); ++j) {
            if (text[j] < '0' || text[j] > '9')
                throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
        }
        std::string digits(text.substr(text[0] == '+' ? 1 : 0));
        return Integer(mpz_class(digits, 10));
    }

    const mpz_class& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return sgn(value_) == 0; }
    int sign() const noexcept { return sgn(value_); }

    Integer operator-() const { return Integer(mpz_class(-value_)); }
    Integer& operator+=(const Integer& o) { value_ += o.value_; return *this; }
    Integer& operator-=(const Integer& o) { value_ -= o.value_; return *this; }
    Integer& operator*=(const Integer& o) { value_ *= o.value_; return *this; }

    friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ + b.value_)); }
    friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ - b.value_)); }
    friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ * b.value_)); }
    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::string to_string(const Integer& a) { return a.value_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.value_; }

private:
    mpz_class value_;
};

inline Grade delta(const Integer& a) { return Grade(mpz_class(abs(a.value()))); }

inline Grade hat_delta(const Integer& a) {
    mpz_class g = 3 * abs(a.value());
    g -= a.sign();
    return Grade(std::move(g));
}

/// The q minimizing hat_delta(b - q*a): the remainder lands in (-|a|/2, |a|/2].
inline Integer min_quotient(const Integer& b, const Integer& a) {
    if (a.is_zero()) throw DomainError("division by zero");
    mpz_class m = abs(a.value());
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), b.value().get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    mpz_class q = b.value() - r;
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), a.value().get_mpz_t());
    return Integer(std::move(q));
}

inline Integer normalizing_unit(const Integer& a) {
    if (a.is_zero()) throw DomainError("normalizing unit of zero");
    return Integer(a.sign());
}

inline bool is_unit(const Integer& a) { return mpz_cmpabs_ui(a.value().get_mpz_t(), 1) == 0; }

/// a | b
inline bool divides(const Integer& a, const Integer& b) {
    if (a.is_zero()) return b.is_zero();
    return mpz_divisible_p(b.value().get_mpz_t(), a.value().get_mpz_t()) != 0;
}

/// b / a, requires a | b and a != 0.
inline Integer divexact(const Integer& b, const Integer& a) {
    if (a.is_zero()) throw DomainError("division by zero");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), b.value().get_mpz_t(), a.value().get_mpz_t());
    return Integer(std::move(q));
}

// ---------------------------------------------------------------------------
// Rationals: delta is the 0/1 field grading. hat_delta sends 0 to 0, 1 to 1
// and every other p/q (lowest terms, q > 0) to 2 + cantor(zigzag(p), q).
// Only hat_delta(0) < hat_delta(1) < hat_delta(x) matters for a field; the
// pairing keeps the map injective.

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : value_(num, den) {
        if (den == 0) throw DomainError("zero denominator");
        value_.canonicalize();
    }
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }
    explicit Rational(const Integer& z) : value_(z.value()) {}

    /// `p/q` or `p` with p an optionally signed integer and q positive.
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(mpq_class(Integer::parse(text).value()));
        Integer num = Integer::parse(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-'))
            throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
        Integer den = Integer::parse(den_text);
        if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(mpq_class(num.value(), den.value()));
    }

    const mpq_class& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return sgn(value_) == 0; }
    int sign() const noexcept { return sgn(value_); }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::string to_string(const Rational& a) { return a.value_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.value_; }

private:
    mpq_class value_;
};

inline Grade delta(const Rational& a) { return Grade(a.is_zero() ? 0UL : 1UL); }

inline Grade hat_delta(const Rational& a) {
    if (a.is_zero()) return Grade(0UL);
    if (a.value() == 1) return Grade(1UL);
    const mpz_class& p = a.value().get_num();
    mpz_class zig = sgn(p) >= 0 ? mpz_class(2 * p) : mpz_class(-2 * p - 1);
    mpz_class s = zig + a.value().get_den();
    mpz_class g = s * (s + 1) / 2 + a.value().get_den() + 2;
    return Grade(std::move(g));
}

inline Rational min_quotient(const Rational& b, const Rational& a) {
    if (a.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(b.value() / a.value()));
}

inline Rational normalizing_unit(const Rational& a) {
    if (a.is_zero()) throw DomainError("normalizing unit of zero");
    return Rational(mpq_class(1 / a.value()));
}

inline bool is_unit(const Rational& a) { return !a.is_zero(); }

inline bool divides(const Rational& a, const Rational& b) { return !a.is_zero() || b.is_zero(); }

inline Rational divexact(const Rational& b, const Rational& a) {
    if (a.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(b.value() / a.value()));
}

// ---------------------------------------------------------------------------

/// What the algorithms need from a coefficient ring. New domains plug in by
/// providing these free functions next to the type.
template <class R>
concept EuclideanDomain = std::regular<R> && requires(const R& a, const R& b, std::string_view text) {
    { R(0L) };
    { R(1L) };
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { delta(a) } -> std::same_as<Grade>;
    { hat_delta(a) } -> std::same_as<Grade>;
    { min_quotient(a, b) } -> std::same_as<R>;
    { normalizing_unit(a) } -> std::same_as<R>;
    { is_unit(a) } -> std::convertible_to<bool>;
    { divides(a, b) } -> std::convertible_to<bool>;
    { divexact(a, b) } -> std::same_as<R>;
    { R::parse(text) } -> std::same_as<R>;
    { to_string(a) } -> std::same_as<std::string>;
};

/// b = q*a + r with delta(r) < delta(a). Uses the canonical min_quotient, so
/// the remainder is also hat_delta-minimal.
template <EuclideanDomain R>
QuoRem<R> quo_rem(const R& b, const R& a) {
    R q = min_quotient(b, a);
    R r = b - q * a;
    return {std::move(q), std::move(r)};
}

/// Extended Euclid driven by min_quotient; the gcd is normalized.
template <EuclideanDomain R>
ExtGcd<R> ext_gcd(const R& a, const R& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("ext_gcd(0, 0) is undefined");
    R r0 = a, r1 = b;
    R s0(1L), s1(0L);
    R t0(0L), t1(1L);
    while (!r1.is_zero()) {
        R q = min_quotient(r0, r1);
        R r2 = r0 - q * r1;
        R s2 = s0 - q * s1;
        R t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    R w = normalizing_unit(r0);
    return {w * r0, w * s0, w * t0};
}

/// b is reducible by a: some q gives hat_delta(b - q*a) < hat_delta(b).
template <EuclideanDomain R>
bool reducible_by(const R& b, const R& a) {
    if (a.is_zero() || b.is_zero()) return false;
    R q = min_quotient(b, a);
    return hat_delta(b - q * a) < hat_delta(b);
}

/// hat_delta(lc) is already minimal among its associates.
template <EuclideanDomain R>
bool is_normalized_scalar(const R& a) {
    return !a.is_zero() && normalizing_unit(a) == R(1L);
}

}  // namespace sgb
