#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace dihomol {

/// Base field descriptor: either the rationals or a prime field F_p.
///
/// Primes are restricted to p < 2^32 so that residue products fit in 64 bits.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    /// Accepts "Q", "F2", "F5", "Fp=7" style tokens.
    static Field parse(std::string_view token);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

class FieldMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; residues live in [0, p). Rationals whose numerator
/// and denominator fit in 62 bits are stored inline, larger ones as GMP
/// rationals, so every value has exactly one representation.
class Scalar {
public:
    Scalar() = default;  // rational zero
    Scalar(const Field& field, long value);
    Scalar(const Field& field, const mpq_class& value);

    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }

    /// Parses "n", "-n" or "n/d". Over F_p the fraction is evaluated mod p.
    static Scalar parse(const Field& field, std::string_view text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Rational value; throws for prime-field scalars.
    mpq_class rational() const;
    /// Residue in [0, p); throws for rational scalars.
    std::uint64_t residue() const;

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "3", "-1/2"; residues print as their representative in [0, p).
    std::string to_string() const;

    struct Small {
        std::int64_t num = 0;
        std::int64_t den = 1;
        friend bool operator==(const Small&, const Small&) = default;
    };

private:
    void require_same_field(const Scalar& other) const;
    void set_rational(mpq_class q);  // q canonical

    Field field_;
    std::variant<Small, mpq_class, std::uint64_t> value_{Small{}};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// (-1)^k as a scalar of the given field.
inline Scalar sign_scalar(const Field& f, long k) { return Scalar(f, (k % 2 == 0) ? 1 : -1); }

}  // namespace dihomol
